#pragma once

// Dense exact linear algebra over Int and Rat: products, determinants,
// Hermite normal form, kernels and rational solving. Everything here is
// small (rank <= 32) and exact; no floating point anywhere.

#include <latkit/core.hpp>

#include <algorithm>
#include <optional>

namespace latkit {

template <class T>
class Mat {
  public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const T& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    std::vector<T> row(int i) const {
        return std::vector<T>(a_.begin() + static_cast<size_t>(i) * cols_,
                              a_.begin() + static_cast<size_t>(i + 1) * cols_);
    }

    void set_row(int i, const std::vector<T>& r) {
        std::copy(r.begin(), r.end(), a_.begin() + static_cast<size_t>(i) * cols_);
    }

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
    }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

  private:
    int rows_, cols_;
    std::vector<T> a_;
};

using IntMat = Mat<Int>;
using RatMat = Mat<Rat>;

template <class T>
Mat<T> transpose(const Mat<T>& m) {
    Mat<T> t(m.cols(), m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
    return t;
}

template <class T>
Mat<T> mul(const Mat<T>& a, const Mat<T>& b) {
    ensure(a.cols() == b.rows(), "matrix product shape mismatch");
    Mat<T> c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const T& aik = a(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

/// Row vector times matrix.
template <class T>
std::vector<T> mul(const std::vector<T>& v, const Mat<T>& m) {
    ensure(static_cast<int>(v.size()) == m.rows(), "vector-matrix shape mismatch");
    std::vector<T> out(static_cast<size_t>(m.cols()));
    for (int i = 0; i < m.rows(); ++i) {
        if (v[static_cast<size_t>(i)] == 0) continue;
        for (int j = 0; j < m.cols(); ++j) out[static_cast<size_t>(j)] += v[static_cast<size_t>(i)] * m(i, j);
    }
    return out;
}

template <class T>
T dot(const std::vector<T>& a, const std::vector<T>& b) {
    ensure(a.size() == b.size(), "dot shape mismatch");
    T s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline RatMat to_rat(const IntMat& m) {
    RatMat r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
    return r;
}

/// Exact determinant by fraction-free (Bareiss) elimination.
inline Int det_bareiss(IntMat m) {
    ensure(m.rows() == m.cols(), "determinant of non-square matrix");
    const int n = m.rows();
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (m(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
            }
        prev = m(k, k);
    }
    return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

/// All leading principal minors positive (Bareiss pivots, no row swaps).
inline bool is_positive_definite(IntMat m) {
    ensure(m.rows() == m.cols(), "definiteness of non-square matrix");
    const int n = m.rows();
    Int prev = 1;
    for (int k = 0; k < n; ++k) {
        if (m(k, k) <= 0) return false;
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return true;
}

struct HnfResult {
    IntMat h;          // reduced row HNF, zero rows dropped
    IntMat transform;  // full k x k unimodular U with U*A = [h; 0]
    int rank = 0;
};

/// Reduced row Hermite normal form: pivots positive, pivot columns strictly
/// ascending, entries above each pivot reduced into [0, pivot).
inline HnfResult hnf(const IntMat& a) {
    const int k = a.rows(), n = a.cols();
    IntMat w = a;
    IntMat u = IntMat::identity(k);
    int pr = 0;
    for (int c = 0; c < n && pr < k; ++c) {
        // gcd-reduce column c on rows pr..k-1 down to a single nonzero entry
        while (true) {
            int best = -1;
            for (int i = pr; i < k; ++i) {
                if (w(i, c) == 0) continue;
                if (best < 0 || abs(w(i, c)) < abs(w(best, c))) best = i;
            }
            if (best < 0) break;
            w.swap_rows(pr, best);
            u.swap_rows(pr, best);
            bool others = false;
            for (int i = pr + 1; i < k; ++i) {
                if (w(i, c) == 0) continue;
                Int q = w(i, c) / w(pr, c);
                if (q != 0) {
                    for (int j = 0; j < n; ++j) w(i, j) -= q * w(pr, j);
                    for (int j = 0; j < k; ++j) u(i, j) -= q * u(pr, j);
                }
                if (w(i, c) != 0) others = true;
            }
            if (!others) break;
        }
        if (pr < k && w(pr, c) != 0) {
            if (w(pr, c) < 0) {
                for (int j = 0; j < n; ++j) w(pr, j) = -w(pr, j);
                for (int j = 0; j < k; ++j) u(pr, j) = -u(pr, j);
            }
            for (int i = 0; i < pr; ++i) {
                // floor division keeps entries above the pivot in [0, pivot)
                Int q = w(i, c) / w(pr, c);
                if (w(i, c) - q * w(pr, c) < 0) q -= 1;
                if (q != 0) {
                    for (int j = 0; j < n; ++j) w(i, j) -= q * w(pr, j);
                    for (int j = 0; j < k; ++j) u(i, j) -= q * u(pr, j);
                }
            }
            ++pr;
        }
    }
    HnfResult res;
    res.rank = pr;
    res.h = IntMat(pr, n);
    for (int i = 0; i < pr; ++i)
        for (int j = 0; j < n; ++j) res.h(i, j) = w(i, j);
    res.transform = std::move(u);
    return res;
}

inline int int_rank(const IntMat& a) { return hnf(a).rank; }

/// Basis (as rows) of { x in Z^k : x * a = 0 }.
inline IntMat int_kernel(const IntMat& a) {
    HnfResult r = hnf(a);
    const int k = a.rows();
    IntMat ker(k - r.rank, k);
    for (int i = r.rank; i < k; ++i)
        for (int j = 0; j < k; ++j) ker(i - r.rank, j) = r.transform(i, j);
    // canonical form
    return hnf(ker).h;
}

inline RatMat rat_inverse(const RatMat& a) {
    ensure(a.rows() == a.cols(), "inverse of non-square matrix");
    const int n = a.rows();
    RatMat w = a;
    RatMat inv = RatMat::identity(n);
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i)
            if (w(i, c) != 0) { p = i; break; }
        require(p >= 0, "matrix is singular");
        w.swap_rows(c, p);
        inv.swap_rows(c, p);
        Rat piv = w(c, c);
        for (int j = 0; j < n; ++j) {
            w(c, j) /= piv;
            inv(c, j) /= piv;
        }
        for (int i = 0; i < n; ++i) {
            if (i == c || w(i, c) == 0) continue;
            Rat f = w(i, c);
            for (int j = 0; j < n; ++j) {
                w(i, j) -= f * w(c, j);
                inv(i, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

/// Solve x * a = b for a row vector x; a must have full row rank.
/// Returns nullopt when b is outside the row space.
inline std::optional<RatVec> rat_solve_left(const RatMat& a, const RatVec& b) {
    ensure(static_cast<int>(b.size()) == a.cols(), "solve shape mismatch");
    RatMat at = transpose(a);
    RatMat gram = mul(a, at);  // invertible iff rows independent
    RatVec rhs = mul(b, at);
    RatVec x = mul(rhs, rat_inverse(gram));
    RatVec check = mul(x, a);
    for (size_t i = 0; i < b.size(); ++i)
        if (check[i] != b[i]) return std::nullopt;
    return x;
}

/// Inverse of a unimodular integer matrix, as an integer matrix.
inline IntMat int_inverse_unimodular(const IntMat& u) {
    RatMat inv = rat_inverse(to_rat(u));
    IntMat out(u.rows(), u.cols());
    for (int i = 0; i < u.rows(); ++i)
        for (int j = 0; j < u.cols(); ++j) {
            ensure(is_integer(inv(i, j)), "matrix is not unimodular");
            out(i, j) = rat_num(inv(i, j));
        }
    return out;
}

/// HNF of rational rows: returns (integer HNF rows, common denominator).
inline std::pair<IntMat, Int> hnf_rational(const RatMat& a) {
    Int den = 1;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) den = lcm(den, rat_den(a(i, j)));
    IntMat scaled(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            scaled(i, j) = rat_num(a(i, j)) * (den / rat_den(a(i, j)));
    return {hnf(scaled).h, den};
}

inline bool lex_less(const IntVec& a, const IntVec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

inline IntVec negate(const IntVec& v) {
    IntVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
    return out;
}

}  // namespace latkit

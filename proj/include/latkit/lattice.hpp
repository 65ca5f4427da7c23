#pragma once

// Integral lattices as rational bases in a standard-dot-product ambient
// space, plus the basic exact algebra: Gram, determinant, duals, sublattices,
// even sublattice, direct sums and glue groups.

#include <latkit/gram_embed.hpp>
#include <latkit/matrix.hpp>

#include <optional>
#include <string>
#include <utility>

namespace latkit {

/// Coordinate row of a lattice vector with respect to a lattice's basis.
using LatticeVector = IntVec;

class IntegerLattice {
  public:
    IntegerLattice() = default;

    /// Lattice spanned by rows of num/den inside the standard ambient space.
    static IntegerLattice from_basis(IntMat num, Int den, std::string name = "") {
        require(den > 0, "denominator must be positive");
        require(num.rows() >= 1, "lattice needs at least one basis row");
        normalize(num, den);
        IntMat prod = mul(num, transpose(num));
        Int den2 = den * den;
        IntMat gram(num.rows(), num.rows());
        for (int i = 0; i < num.rows(); ++i)
            for (int j = 0; j < num.rows(); ++j) {
                require(prod(i, j) % den2 == 0,
                        "basis has non-integral Gram; the toolkit handles integral lattices only");
                gram(i, j) = prod(i, j) / den2;
            }
        require(is_positive_definite(gram),
                "basis rows must be linearly independent with positive definite Gram");
        IntegerLattice L;
        L.num_ = std::move(num);
        L.den_ = std::move(den);
        L.gram_ = std::move(gram);
        L.det_ = det_bareiss(L.gram_);
        L.name_ = std::move(name);
        return L;
    }

    /// Abstract Gram input: embedded via exact rational completion.
    static IntegerLattice from_gram(const IntMat& gram, std::string name = "") {
        for (int i = 0; i < gram.rows(); ++i)
            for (int j = 0; j < gram.cols(); ++j)
                require(gram(i, j) == gram(j, i), "gram must be symmetric");
        auto [num, den] = rational_gram_embedding(gram);
        IntegerLattice L = from_basis(std::move(num), std::move(den), std::move(name));
        ensure(L.gram_ == gram, "gram-only embedding did not reproduce the input Gram");
        return L;
    }

    int rank() const { return gram_.rows(); }
    int ambient_dim() const { return num_.cols(); }
    const IntMat& gram() const { return gram_; }
    const IntMat& basis_num() const { return num_; }
    const Int& denominator() const { return den_; }
    const Int& det() const { return det_; }
    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }

    /// Canonical textual key: equal exactly for equal subsets of the ambient space.
    std::string canonical_key() const {
        IntMat h = hnf(num_).h;
        std::string s = std::to_string(ambient_dim()) + "/" + den_.str() + ":";
        for (int i = 0; i < h.rows(); ++i)
            for (int j = 0; j < h.cols(); ++j) s += h(i, j).str() + ",";
        return s;
    }

  private:
    static void normalize(IntMat& num, Int& den) {
        Int g = den;
        for (int i = 0; i < num.rows() && g > 1; ++i)
            for (int j = 0; j < num.cols() && g > 1; ++j) g = gcd(g, num(i, j));
        if (g > 1) {
            den /= g;
            for (int i = 0; i < num.rows(); ++i)
                for (int j = 0; j < num.cols(); ++j) num(i, j) /= g;
        }
    }

    IntMat num_;
    Int den_ = 1;
    IntMat gram_;
    Int det_ = 1;
    std::string name_;
};

inline bool same_lattice(const IntegerLattice& a, const IntegerLattice& b) {
    return a.ambient_dim() == b.ambient_dim() && a.denominator() == b.denominator() &&
           hnf(a.basis_num()).h == hnf(b.basis_num()).h;
}

inline Int inner_product(const IntegerLattice& L, const LatticeVector& u, const LatticeVector& v) {
    require(static_cast<int>(u.size()) == L.rank() && static_cast<int>(v.size()) == L.rank(),
            "inner_product: coordinate length must equal the lattice rank");
    return dot(mul(u, L.gram()), v);
}

inline Int norm_of(const IntegerLattice& L, const LatticeVector& v) {
    return inner_product(L, v, v);
}

inline Int determinant(const IntegerLattice& L) { return L.det(); }

inline bool is_unimodular(const IntegerLattice& L) { return L.det() == 1; }

inline bool is_even(const IntegerLattice& L) {
    for (int i = 0; i < L.rank(); ++i)
        if (L.gram()(i, i) % 2 != 0) return false;
    return true;
}

/// Sublattice/overlattice with basis coords * basis(L); Gram must stay integral.
inline IntegerLattice lattice_from_coords(const IntegerLattice& L, const IntMat& coords_num,
                                          const Int& coords_den, std::string name = "") {
    IntMat num = mul(coords_num, L.basis_num());
    return IntegerLattice::from_basis(std::move(num), coords_den * L.denominator(),
                                      std::move(name));
}

/// Coordinate rows (w.r.t. L) of the even sublattice; identity when L is even.
inline IntMat even_sublattice_coords(const IntegerLattice& L) {
    const int r = L.rank();
    int j0 = -1;
    for (int i = 0; i < r; ++i)
        if (L.gram()(i, i) % 2 != 0) { j0 = i; break; }
    if (j0 < 0) return IntMat::identity(r);
    // kernel of the linear norm-parity map x -> sum of x_i * gram_ii (mod 2)
    IntMat c(r, r);
    int row = 0;
    for (int i = 0; i < r; ++i) {
        if (i == j0) continue;
        c(row, i) = 1;
        if (L.gram()(i, i) % 2 != 0) c(row, j0) = 1;
        ++row;
    }
    c(row, j0) = 2;
    return hnf(c).h;
}

/// L0 = { x in L : norm(x) even }; index 2 when L is odd, else L itself.
inline IntegerLattice even_sublattice(const IntegerLattice& L) {
    IntMat c = even_sublattice_coords(L);
    if (c == IntMat::identity(L.rank())) return L;
    return lattice_from_coords(L, c, 1, L.name().empty() ? "" : L.name() + ".even");
}

struct SublatticeResult {
    IntegerLattice lattice;
    std::optional<Int> index;  // set when the sublattice has full rank in L
};

inline SublatticeResult sublattice_from_generators(const IntegerLattice& L,
                                                   const std::vector<LatticeVector>& gens) {
    require(!gens.empty(), "sublattice_from_generators: empty generating set");
    IntMat m(static_cast<int>(gens.size()), L.rank());
    for (size_t i = 0; i < gens.size(); ++i) {
        require(static_cast<int>(gens[i].size()) == L.rank(),
                "generator length must equal the lattice rank");
        m.set_row(static_cast<int>(i), gens[i]);
    }
    IntMat h = hnf(m).h;
    require(h.rows() >= 1, "generators span the zero lattice");
    SublatticeResult out{lattice_from_coords(L, h, 1), std::nullopt};
    if (h.rows() == L.rank()) {
        Int idx = 1;
        for (int i = 0; i < h.rows(); ++i) idx *= h(i, i);
        out.index = idx;
    }
    return out;
}

inline IntegerLattice direct_sum(const IntegerLattice& a, const IntegerLattice& b) {
    Int den = lcm(a.denominator(), b.denominator());
    Int fa = den / a.denominator(), fb = den / b.denominator();
    IntMat num(a.rank() + b.rank(), a.ambient_dim() + b.ambient_dim());
    for (int i = 0; i < a.rank(); ++i)
        for (int j = 0; j < a.ambient_dim(); ++j) num(i, j) = a.basis_num()(i, j) * fa;
    for (int i = 0; i < b.rank(); ++i)
        for (int j = 0; j < b.ambient_dim(); ++j)
            num(a.rank() + i, a.ambient_dim() + j) = b.basis_num()(i, j) * fb;
    std::string name;
    if (!a.name().empty() && !b.name().empty()) name = a.name() + "+" + b.name();
    return IntegerLattice::from_basis(std::move(num), den, std::move(name));
}

/// The dual lattice as a rational span (its Gram is gram^-1, generally rational).
struct DualSpan {
    RatMat basis;  // rows in the ambient space
    RatMat gram;
};

inline DualSpan dual_lattice(const IntegerLattice& L) {
    RatMat ginv = rat_inverse(to_rat(L.gram()));
    RatMat b = to_rat(L.basis_num());
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) b(i, j) /= Rat(L.denominator());
    return {mul(ginv, b), ginv};
}

/// Coset representatives of L*/L as rational coordinate rows w.r.t. L's basis,
/// normalized into [0,1)^r and sorted lexicographically. Size = det(L).
inline std::vector<RatVec> glue_group(const IntegerLattice& L) {
    const int r = L.rank();
    IntMat h = hnf(L.gram()).h;  // full-rank upper triangular
    RatMat ginv = rat_inverse(to_rat(L.gram()));
    std::vector<RatVec> reps;
    IntVec x(static_cast<size_t>(r), Int(0));
    while (true) {
        RatVec coords(static_cast<size_t>(r));
        RatVec xr(static_cast<size_t>(r));
        for (int i = 0; i < r; ++i) xr[static_cast<size_t>(i)] = Rat(x[static_cast<size_t>(i)]);
        coords = mul(xr, ginv);
        for (auto& c : coords) {  // reduce into [0,1)
            Int fl = rat_num(c) / rat_den(c);
            if (c - Rat(fl) < 0) fl -= 1;
            c -= Rat(fl);
        }
        reps.push_back(std::move(coords));
        int i = r - 1;
        while (i >= 0) {
            x[static_cast<size_t>(i)] += 1;
            if (x[static_cast<size_t>(i)] < h(i, i)) break;
            x[static_cast<size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
    }
    std::sort(reps.begin(), reps.end());
    return reps;
}

/// Coordinates of an ambient point with respect to L's basis, when in the span.
inline std::optional<RatVec> ambient_coords_in(const IntegerLattice& L, const RatVec& point) {
    RatMat b = to_rat(L.basis_num());
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) b(i, j) /= Rat(L.denominator());
    return rat_solve_left(b, point);
}

}  // namespace latkit

#pragma once

// Exact LLL basis reduction and complete short-vector enumeration
// (Fincke-Pohst over exact rationals), minima and theta-series prefixes.

#include <latkit/lattice.hpp>

#include <algorithm>

namespace latkit {

namespace detail {

struct GramSchmidt {
    RatMat mu;  // strictly lower triangular
    RatVec b;   // squared norms of the orthogonalized vectors
};

inline GramSchmidt gram_schmidt(const IntMat& g) {
    const int n = g.rows();
    GramSchmidt gs{RatMat(n, n), RatVec(static_cast<size_t>(n))};
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < i; ++j) {
            Rat v = Rat(g(i, j));
            for (int t = 0; t < j; ++t)
                v -= gs.mu(j, t) * gs.mu(i, t) * gs.b[static_cast<size_t>(t)];
            ensure(gs.b[static_cast<size_t>(j)] != 0, "gram_schmidt on singular Gram");
            gs.mu(i, j) = v / gs.b[static_cast<size_t>(j)];
        }
        Rat bi = Rat(g(i, i));
        for (int t = 0; t < i; ++t)
            bi -= gs.mu(i, t) * gs.mu(i, t) * gs.b[static_cast<size_t>(t)];
        gs.b[static_cast<size_t>(i)] = bi;
    }
    return gs;
}

inline Int round_nearest(const Rat& q) {
    // floor(q + 1/2)
    Rat h = q + Rat(1, 2);
    Int fl = rat_num(h) / rat_den(h);
    if (h - Rat(fl) < 0) fl -= 1;
    return fl;
}

}  // namespace detail

struct LllResult {
    IntegerLattice lattice;
    IntMat transform;  // rows of the reduced basis = transform * rows of the input basis
};

/// Exact LLL on the Gram matrix; delta defaults to 3/4.
inline LllResult lll_reduce(const IntegerLattice& L, const Rat& delta = Rat(3, 4)) {
    require(delta > Rat(1, 4) && delta < 1, "lll_reduce: delta must be in (1/4, 1)");
    const int n = L.rank();
    IntMat g = L.gram();
    IntMat u = IntMat::identity(n);
    detail::GramSchmidt gs = detail::gram_schmidt(g);

    auto size_reduce = [&](int k, int l) {
        Int q = detail::round_nearest(gs.mu(k, l));
        if (q == 0) return;
        // row/column update keeps g symmetric integral
        for (int j = 0; j < n; ++j) g(k, j) -= q * g(l, j);
        for (int i = 0; i < n; ++i) g(i, k) -= q * g(i, l);
        for (int j = 0; j < n; ++j) u(k, j) -= q * u(l, j);
        for (int j = 0; j < l; ++j) gs.mu(k, j) -= Rat(q) * gs.mu(l, j);
        gs.mu(k, l) -= Rat(q);
    };

    int k = 1;
    while (k < n) {
        size_reduce(k, k - 1);
        Rat lhs = gs.b[static_cast<size_t>(k)];
        Rat rhs = (delta - gs.mu(k, k - 1) * gs.mu(k, k - 1)) * gs.b[static_cast<size_t>(k - 1)];
        if (lhs < rhs) {
            g.swap_rows(k, k - 1);
            for (int i = 0; i < n; ++i) std::swap(g(i, k), g(i, k - 1));
            u.swap_rows(k, k - 1);
            // exact swap update of the Gram-Schmidt data
            for (int j = 0; j < k - 1; ++j) std::swap(gs.mu(k, j), gs.mu(k - 1, j));
            Rat mu_ = gs.mu(k, k - 1);
            Rat bk = gs.b[static_cast<size_t>(k)];
            Rat bk1 = gs.b[static_cast<size_t>(k - 1)];
            Rat bstar = bk + mu_ * mu_ * bk1;
            Rat mu_new = mu_ * bk1 / bstar;
            gs.mu(k, k - 1) = mu_new;
            gs.b[static_cast<size_t>(k)] = bk1 * bk / bstar;
            gs.b[static_cast<size_t>(k - 1)] = bstar;
            for (int i = k + 1; i < n; ++i) {
                Rat mik = gs.mu(i, k), mik1 = gs.mu(i, k - 1);
                gs.mu(i, k) = mik1 - mu_ * mik;
                gs.mu(i, k - 1) = mu_new * mik1 + (bk / bstar) * mik;
            }
            k = std::max(k - 1, 1);
        } else {
            for (int l = k - 2; l >= 0; --l) size_reduce(k, l);
            ++k;
        }
    }
    return {lattice_from_coords(L, u, 1, L.name()), std::move(u)};
}

struct ShortVector {
    IntVec coords;
    Int norm;
};

/// All nonzero vectors of norm <= bound, one representative per +-pair.
/// The representative has positive first nonzero coordinate; the list is
/// sorted by (norm, coords lexicographically).
struct ShortVectorSet {
    Int bound;
    std::vector<ShortVector> reps;

    /// Both signs, sorted by (norm, coords lexicographically).
    std::vector<ShortVector> expanded() const {
        std::vector<ShortVector> out;
        out.reserve(reps.size() * 2);
        for (const auto& sv : reps) {
            out.push_back(sv);
            out.push_back({negate(sv.coords), sv.norm});
        }
        std::sort(out.begin(), out.end(), [](const ShortVector& a, const ShortVector& b) {
            if (a.norm != b.norm) return a.norm < b.norm;
            return lex_less(a.coords, b.coords);
        });
        return out;
    }
};

namespace detail {

/// Scaled-integer Fincke-Pohst state: every per-level quantity is an integer
/// once budgets are multiplied by a global scale. With
///   mu(j,i) = lambda(j,i) / D_i   and   b_i = bnum_i / bden_i,
/// the level-i cost of choosing x_i is
///   b_i (x_i + s_i/D_i)^2 = K_i (x_i D_i + s_i)^2 / scale,
/// where K_i = bnum_i * scale / (bden_i D_i^2) is integral by choice of
/// scale = lcm_i(bden_i D_i^2).
struct FpScaled {
    int n;
    Int scale;
    IntVec d;                    // D_i
    IntVec k;                    // K_i
    std::vector<IntVec> lambda;  // lambda[j][i] for j > i
};

inline FpScaled fp_scale(const GramSchmidt& gs, int n) {
    FpScaled fp;
    fp.n = n;
    fp.d.assign(static_cast<size_t>(n), Int(1));
    fp.k.assign(static_cast<size_t>(n), Int(0));
    fp.lambda.assign(static_cast<size_t>(n), IntVec(static_cast<size_t>(n), Int(0)));
    for (int i = 0; i < n; ++i) {
        Int di = 1;
        for (int j = i + 1; j < n; ++j) di = lcm(di, rat_den(gs.mu(j, i)));
        fp.d[static_cast<size_t>(i)] = di;
        for (int j = i + 1; j < n; ++j)
            fp.lambda[static_cast<size_t>(j)][static_cast<size_t>(i)] =
                rat_num(gs.mu(j, i)) * (di / rat_den(gs.mu(j, i)));
    }
    fp.scale = 1;
    for (int i = 0; i < n; ++i)
        fp.scale = lcm(fp.scale, rat_den(gs.b[static_cast<size_t>(i)]) * fp.d[static_cast<size_t>(i)] *
                                     fp.d[static_cast<size_t>(i)]);
    for (int i = 0; i < n; ++i) {
        const Rat& b = gs.b[static_cast<size_t>(i)];
        fp.k[static_cast<size_t>(i)] = rat_num(b) * (fp.scale / (rat_den(b) * fp.d[static_cast<size_t>(i)] *
                                                                 fp.d[static_cast<size_t>(i)]));
    }
    return fp;
}

/// Worst-case magnitude estimate for the int64 fast path; exact Int math.
inline Int fp_worst_case(const FpScaled& fp, const Int& bound) {
    const int n = fp.n;
    Int worst = bound * fp.scale;
    IntVec xmax(static_cast<size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        // |x_i D_i + s_i|^2 K_i <= bound*scale and |s_i| <= sum |lambda| xmax
        Int smax = 0;
        for (int j = i + 1; j < n; ++j)
            smax += abs(fp.lambda[static_cast<size_t>(j)][static_cast<size_t>(i)]) *
                    xmax[static_cast<size_t>(j)];
        Int lim2 = bound * fp.scale / fp.k[static_cast<size_t>(i)] + 1;
        Int lim = boost::multiprecision::sqrt(lim2) + 1;  // |x D + s| bound
        xmax[static_cast<size_t>(i)] = (lim + smax) / fp.d[static_cast<size_t>(i)] + 1;
        Int t = xmax[static_cast<size_t>(i)] * fp.d[static_cast<size_t>(i)] + smax;
        worst = max(worst, t * t);
        worst = max(worst, t * t * fp.k[static_cast<size_t>(i)]);
        worst = max(worst, smax);
    }
    return worst;
}

template <class I, class Sink>
void fp_enumerate(const FpScaled& fp, const std::vector<std::vector<I>>& lambda,
                  const std::vector<I>& dd, const std::vector<I>& kk, const I& scaled_bound,
                  const Int& scale, const Int& bound, Sink&& sink) {
    const int n = fp.n;
    std::vector<I> x(static_cast<size_t>(n), I(0));
    IntVec coords(static_cast<size_t>(n));
    auto rec = [&](auto&& self, int i, const I& budget, bool all_zero_above) -> void {
        const I& di = dd[static_cast<size_t>(i)];
        const I& ki = kk[static_cast<size_t>(i)];
        I s = 0;
        for (int j = i + 1; j < n; ++j) {
            const I& l = lambda[static_cast<size_t>(j)][static_cast<size_t>(i)];
            if (l != 0) s += l * x[static_cast<size_t>(j)];
        }
        // scan the integer interval K_i (x d + s)^2 <= budget around -s/d
        I anchor = -s / di;  // truncation; corrected by the inside() scans
        auto cost = [&](const I& xi) -> I {
            I t = xi * di + s;
            return I(ki * t * t);
        };
        I lo = anchor, hi = anchor;
        if (cost(anchor) > budget) {
            if (cost(anchor + 1) <= budget) lo = hi = anchor + 1;
            else if (cost(anchor - 1) <= budget) lo = hi = anchor - 1;
            else return;
        }
        while (cost(hi + 1) <= budget) ++hi;
        while (cost(lo - 1) <= budget) --lo;
        if (all_zero_above && lo < 0) lo = 0;
        for (I xi = lo; xi <= hi; ++xi) {
            x[static_cast<size_t>(i)] = xi;
            I rem = budget - cost(xi);
            if (i == 0) {
                if (all_zero_above && xi == 0) continue;
                Int used = Int(scaled_bound - rem);
                ensure(used % scale == 0, "non-integral norm in enumeration");
                for (int j = 0; j < n; ++j) coords[static_cast<size_t>(j)] = x[static_cast<size_t>(j)];
                sink(coords, Int(used / scale));
            } else {
                self(self, i - 1, rem, all_zero_above && xi == 0);
            }
        }
        x[static_cast<size_t>(i)] = 0;
        (void)bound;
    };
    if (n > 0) rec(rec, n - 1, scaled_bound, true);
}

/// Complete Fincke-Pohst enumeration on a reduced Gram matrix. Calls sink
/// with (coords, norm) for one representative of each +-pair of nonzero
/// vectors of norm <= bound. Enumeration order is deterministic; an int64
/// engine runs whenever exact worst-case bounds fit, with an identical
/// arbitrary-precision engine as the fallback.
template <class Sink>
void fincke_pohst(const IntMat& g, const Int& bound, Sink&& sink) {
    const int n = g.rows();
    if (n == 0 || bound < 1) return;
    GramSchmidt gs = gram_schmidt(g);
    FpScaled fp = fp_scale(gs, n);
    Int worst = fp_worst_case(fp, bound);
    if (worst < (Int(1) << 62)) {
        std::vector<std::vector<std::int64_t>> lambda(static_cast<size_t>(n),
                                                      std::vector<std::int64_t>(static_cast<size_t>(n)));
        std::vector<std::int64_t> dd(static_cast<size_t>(n)), kk(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            dd[static_cast<size_t>(i)] = to_i64(fp.d[static_cast<size_t>(i)]);
            kk[static_cast<size_t>(i)] = to_i64(fp.k[static_cast<size_t>(i)]);
            for (int j = 0; j < n; ++j)
                lambda[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    to_i64(fp.lambda[static_cast<size_t>(i)][static_cast<size_t>(j)]);
        }
        fp_enumerate<std::int64_t>(fp, lambda, dd, kk, to_i64(fp.scale * bound), fp.scale, bound,
                                   std::forward<Sink>(sink));
    } else {
        fp_enumerate<Int>(fp, fp.lambda, fp.d, fp.k, fp.scale * bound, fp.scale, bound,
                          std::forward<Sink>(sink));
    }
}

}  // namespace detail

/// Streaming enumeration of norm <= bound after LLL preprocessing, in the
/// deterministic Fincke-Pohst traversal order (not sorted). The sink returns
/// false to stop early. Coordinates are w.r.t. L's basis, one per +-pair.
template <class Sink>
void short_vectors_streaming(const IntegerLattice& L, const Int& bound, Sink&& sink) {
    if (bound <= 0) return;
    LllResult red = lll_reduce(L);
    struct StopEnum {};
    try {
        detail::fincke_pohst(red.lattice.gram(), bound, [&](const IntVec& xr, const Int& norm) {
            IntVec orig = mul(xr, red.transform);
            for (const Int& c : orig) {
                if (c == 0) continue;
                if (c < 0) orig = negate(orig);
                break;
            }
            if (!sink(std::move(orig), norm)) throw StopEnum{};
        });
    } catch (const StopEnum&) {
    }
}

/// Complete enumeration of norm <= bound after LLL preprocessing.
inline ShortVectorSet short_vectors(const IntegerLattice& L, const Int& bound) {
    require(bound >= 0, "short_vectors: bound must be nonnegative");
    ShortVectorSet out{bound, {}};
    if (bound == 0) return out;
    LllResult red = lll_reduce(L);
    detail::fincke_pohst(red.lattice.gram(), bound, [&](const IntVec& xr, const Int& norm) {
        IntVec orig = mul(xr, red.transform);
        // representative of the +-pair: first nonzero coordinate positive
        for (const Int& c : orig) {
            if (c == 0) continue;
            if (c < 0) orig = negate(orig);
            break;
        }
        out.reps.push_back({std::move(orig), norm});
    });
    std::sort(out.reps.begin(), out.reps.end(), [](const ShortVector& a, const ShortVector& b) {
        if (a.norm != b.norm) return a.norm < b.norm;
        return lex_less(a.coords, b.coords);
    });
    return out;
}

/// Least norm of a nonzero vector.
inline Int minimum_norm(const IntegerLattice& L) {
    for (Int bound = 1;; ++bound) {
        ShortVectorSet sv = short_vectors(L, bound);
        if (!sv.reps.empty()) {
            Int best = sv.reps.front().norm;
            for (const auto& v : sv.reps) best = min(best, v.norm);
            return best;
        }
    }
}

/// Counts of vectors of norm 0, 1, ..., k (both signs counted). Streaming:
/// only the counters are kept, never the vectors.
inline std::vector<Int> theta_prefix(const IntegerLattice& L, int k) {
    require(k >= 0, "theta_prefix: k must be nonnegative");
    std::vector<Int> counts(static_cast<size_t>(k) + 1, Int(0));
    counts[0] = 1;
    if (k == 0) return counts;
    LllResult red = lll_reduce(L);
    detail::fincke_pohst(red.lattice.gram(), Int(k), [&](const IntVec&, const Int& norm) {
        counts[static_cast<size_t>(to_i64(norm))] += 2;
    });
    return counts;
}

}  // namespace latkit

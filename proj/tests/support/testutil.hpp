#pragma once

// Shared test helpers: independent brute-force oracles and deterministic
// random generators. Everything here stays independent of the library code
// paths it is used to check.

#include <latkit/lattice.hpp>
#include <latkit/reduction.hpp>

#include <algorithm>
#include <random>

namespace latkit::testutil {

/// Deterministic unimodular scramble: a product of elementary row operations.
inline IntMat random_unimodular(int n, std::mt19937& rng, int ops = 24) {
    IntMat u = IntMat::identity(n);
    std::uniform_int_distribution<int> row(0, n - 1);
    std::uniform_int_distribution<int> coef(-2, 2);
    std::uniform_int_distribution<int> kind(0, 3);
    for (int t = 0; t < ops; ++t) {
        int i = row(rng), j = row(rng);
        if (i == j) continue;
        if (kind(rng) == 0) {
            u.swap_rows(i, j);
        } else {
            Int c = coef(rng);
            if (c == 0) c = 1;
            for (int k = 0; k < n; ++k) u(i, k) += c * u(j, k);
        }
    }
    return u;
}

/// Random full-rank integral lattice of the given rank with small entries.
inline IntegerLattice random_lattice(int rank, std::mt19937& rng) {
    std::uniform_int_distribution<int> entry(-1, 1);
    while (true) {
        IntMat b(rank, rank + 1);
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank + 1; ++j) b(i, j) = entry(rng);
        for (int i = 0; i < rank; ++i) b(i, i) += 2;  // bias towards independence
        try {
            return IntegerLattice::from_basis(std::move(b), 1);
        } catch (const invalid_input&) {
            continue;
        }
    }
}

inline Int floor_sqrt_rat(const Rat& q) {
    if (q < 0) return -1;
    Int p = rat_num(q), d = rat_den(q);
    Int k = boost::multiprecision::sqrt(Int(p / d));
    while ((k + 1) * (k + 1) * d <= p) ++k;
    while (k * k * d > p) --k;
    return k;
}

/// Independent oracle: enumerate the whole Fincke-Pohst box computed from the
/// dual Gram, one representative per +-pair, sorted like ShortVectorSet.
inline std::vector<ShortVector> brute_force_short_vectors(const IntegerLattice& L,
                                                          const Int& bound) {
    RatMat ginv = rat_inverse(to_rat(L.gram()));
    const int r = L.rank();
    std::vector<Int> box(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) box[static_cast<size_t>(i)] = floor_sqrt_rat(Rat(bound) * ginv(i, i));
    std::vector<ShortVector> out;
    IntVec x(static_cast<size_t>(r));
    auto rec = [&](auto&& self, int i) -> void {
        if (i < 0) {
            Int n = norm_of(L, x);
            if (n == 0 || n > bound) return;
            IntVec v = x;
            for (const Int& c : v) {
                if (c == 0) continue;
                if (c < 0) v = negate(v);
                break;
            }
            for (const auto& seen : out)
                if (seen.coords == v) return;
            out.push_back({v, n});
            return;
        }
        for (Int xi = -box[static_cast<size_t>(i)]; xi <= box[static_cast<size_t>(i)]; ++xi) {
            x[static_cast<size_t>(i)] = xi;
            self(self, i - 1);
        }
        x[static_cast<size_t>(i)] = 0;
    };
    rec(rec, r - 1);
    std::sort(out.begin(), out.end(), [](const ShortVector& a, const ShortVector& b) {
        if (a.norm != b.norm) return a.norm < b.norm;
        return lex_less(a.coords, b.coords);
    });
    return out;
}

}  // namespace latkit::testutil

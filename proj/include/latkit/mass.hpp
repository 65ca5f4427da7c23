#pragma once

// Minkowski-Siegel masses of the unimodular genera, as exact rationals.
//
// The mass factors into the standard archimedean part, the odd-prime part
// (assembled from zeta and Dirichlet L-values at integers, i.e. Bernoulli and
// Euler numbers) and a 2-adic factor. The 2-adic factor depends on the parity
// of the genus and on rank mod 8 through the species of the single 2-adic
// Jordan constituent. Every branch is pinned by exact class-number data in
// the test suite (ranks 1..16 odd, 8/16 even) before being used at rank 24.

#include <latkit/core.hpp>

#include <vector>

namespace latkit {

/// Bernoulli number B_k (B_1 = -1/2 convention), exact.
inline Rat bernoulli(unsigned k) {
    static std::vector<Rat> cache{Rat(1)};
    while (cache.size() <= k) {
        unsigned m = static_cast<unsigned>(cache.size());
        Rat s = 0;
        for (unsigned j = 0; j < m; ++j) s += Rat(binomial(m + 1, j)) * cache[j];
        cache.push_back(-s / Rat(m + 1));
    }
    return cache[k];
}

/// Euler number E_{2m} (secant numbers, signed), exact.
inline Int euler_number(unsigned two_m) {
    ensure(two_m % 2 == 0, "euler numbers have even index");
    static std::vector<Int> cache{Int(1)};
    while (cache.size() <= two_m / 2) {
        unsigned n = static_cast<unsigned>(cache.size());
        Int s = 0;
        for (unsigned k = 0; k < n; ++k) s += binomial(2 * n, 2 * k) * cache[k];
        cache.push_back(-s);
    }
    return cache[two_m / 2];
}

enum class GenusParity { odd, even };

namespace detail {

struct PiRat {
    Rat r;
    int half_pi;  // value = r * pi^(half_pi / 2)
    PiRat operator*(const PiRat& o) const { return {r * o.r, half_pi + o.half_pi}; }
};

inline PiRat gamma_half(int j) {
    if (j % 2 == 0) {
        Int f = factorial(static_cast<unsigned>(j / 2 - 1));
        return {Rat(f), 0};
    }
    int k = (j - 1) / 2;
    // Gamma(k + 1/2) = (2k)! sqrt(pi) / (4^k k!)
    return {Rat(factorial(static_cast<unsigned>(2 * k)),
                pow2(static_cast<unsigned>(2 * k)) * factorial(static_cast<unsigned>(k))),
            1};
}

inline PiRat zeta_even(int tw) {  // zeta(tw), tw even
    Rat b = bernoulli(static_cast<unsigned>(tw));
    if (b < 0) b = -b;
    return {Rat(pow2(static_cast<unsigned>(tw - 1))) / Rat(factorial(static_cast<unsigned>(tw))) * b,
            2 * tw};
}

inline PiRat l_chi4(int s) {  // L(s, chi_-4), s odd
    Int e = euler_number(static_cast<unsigned>(s - 1));
    if (e < 0) e = -e;
    return {Rat(e, pow2(static_cast<unsigned>(s + 1)) * factorial(static_cast<unsigned>(s - 1))),
            2 * s};
}

/// Archimedean and odd-prime assembly; the pi powers cancel exactly.
inline Rat standard_part(int n, GenusParity parity) {
    PiRat out{Rat(2), -(n * (n + 1)) / 2};
    for (int j = 1; j <= n; ++j) out = out * gamma_half(j);
    auto euler_factor_removed = [&](int tw) {
        PiRat z = zeta_even(tw);
        z.r *= Rat(pow2(static_cast<unsigned>(tw)) - 1, pow2(static_cast<unsigned>(tw)));
        return z;
    };
    if (n % 2 == 1) {
        int s = (n - 1) / 2;
        for (int j = 1; j <= s; ++j) out = out * euler_factor_removed(2 * j);
    } else {
        int s = n / 2;
        for (int j = 1; j < s; ++j) out = out * euler_factor_removed(2 * j);
        if (s % 2 == 0) out = out * euler_factor_removed(s);
        else out = out * l_chi4(s);
    }
    ensure(out.half_pi == 0, "pi powers must cancel in the mass assembly");
    (void)parity;
    return out.r;
}

/// Conway-Sloane diagonal factor of a 2-adic species.
inline Rat species_factor(int species) {
    if (species == 0) return Rat(1, 2);
    Rat d = 2;
    if (species % 2 != 0) {
        int t = (std::abs(species) - 1) / 2;
        for (int i = 1; i <= t; ++i)
            d *= Rat(pow2(static_cast<unsigned>(2 * i)) - 1, pow2(static_cast<unsigned>(2 * i)));
    } else {
        int t = std::abs(species) / 2;
        Int p = pow2(static_cast<unsigned>(t));
        d *= species > 0 ? Rat(p - 1, p) : Rat(p + 1, p);
        for (int i = 1; i < t; ++i)
            d *= Rat(pow2(static_cast<unsigned>(2 * i)) - 1, pow2(static_cast<unsigned>(2 * i)));
    }
    return 1 / d;
}

/// Species of the odd unimodular 2-adic form of rank n (determinant 1,
/// oddity = n mod 8).
inline int species_odd_unimodular(int n) {
    switch (n % 8) {
        case 1: case 7: return n - 1;       // even species, plus type
        case 3: case 5: return -(n - 1);    // even species, minus type
        case 2: case 6: return n - 1;       // odd species
        case 0: return n - 2;               // plus type
        default: return -(n - 2);           // n = 4 mod 8, minus type
    }
}

}  // namespace detail

/// Minkowski-Siegel mass of the genus of positive-definite unimodular
/// lattices of the given rank and parity, as an exact rational.
inline Rat genus_mass(int rank, GenusParity parity) {
    require(rank >= 1, "genus_mass: rank must be positive");
    if (parity == GenusParity::even) {
        require(rank % 8 == 0, "genus_mass: even unimodular genera need rank = 0 mod 8");
        Rat c = detail::species_factor(rank) / Rat(pow2(static_cast<unsigned>(rank - 1)));
        return detail::standard_part(rank, parity) * c;
    }
    Rat c = detail::species_factor(detail::species_odd_unimodular(rank)) / 2;
    return detail::standard_part(rank, parity) * c;
}

}  // namespace latkit

#pragma once

// Realize an abstract positive-definite Gram matrix as a rational basis in a
// standard-dot-product ambient space. Works for any integral positive
// definite Gram; the ambient dimension grows as needed (at most 4x rank,
// driven by four-square decompositions of the successive Schur pivots).

#include <latkit/matrix.hpp>

#include <array>

namespace latkit {

/// Lagrange four-square decomposition by bounded descent; exact, deterministic.
inline std::array<Int, 4> four_squares(const Int& n) {
    require(n >= 0, "four_squares needs a nonnegative integer");
    Int ra = boost::multiprecision::sqrt(n);
    for (Int a = ra; a >= 0; --a) {
        Int n2 = n - a * a;
        Int rb = boost::multiprecision::sqrt(n2);
        for (Int b = min(a, rb); b >= 0; --b) {
            Int n3 = n2 - b * b;
            Int rc = boost::multiprecision::sqrt(n3);
            for (Int c = min(b, rc); c >= 0; --c) {
                Int n4 = n3 - c * c;
                Int d = boost::multiprecision::sqrt(n4);
                if (d * d == n4 && d <= c) return {a, b, c, d};
            }
        }
    }
    throw internal_error("four_squares: no decomposition found");
}

namespace detail {

inline RatMat embed_recursive(const RatMat& g) {
    const int k = g.rows();
    if (k == 0) return RatMat(0, 0);
    const Rat d = g(0, 0);
    ensure(d > 0, "embedding pivot must be positive");
    // |v1|^2 = d: write num*den as a sum of four integer squares, divide by den
    Int p = rat_num(d), q = rat_den(d);
    auto sq = four_squares(p * q);
    RatVec v1;
    for (const Int& s : sq)
        if (s != 0) v1.push_back(Rat(s, q));
    const int ell = static_cast<int>(v1.size());

    RatMat schur(k - 1, k - 1);
    for (int i = 1; i < k; ++i)
        for (int j = 1; j < k; ++j) schur(i - 1, j - 1) = g(i, j) - g(0, i) * g(0, j) / d;
    RatMat w = embed_recursive(schur);

    RatMat out(k, ell + w.cols());
    for (int j = 0; j < ell; ++j) out(0, j) = v1[static_cast<size_t>(j)];
    for (int i = 1; i < k; ++i) {
        Rat f = g(0, i) / d;
        for (int j = 0; j < ell; ++j) out(i, j) = f * v1[static_cast<size_t>(j)];
        for (int j = 0; j < w.cols(); ++j) out(i, ell + j) = w(i - 1, j);
    }
    return out;
}

}  // namespace detail

/// Rational rows B with B * B^T == gram, as (numerators, common denominator).
inline std::pair<IntMat, Int> rational_gram_embedding(const IntMat& gram) {
    require(gram.rows() == gram.cols(), "gram must be square");
    require(is_positive_definite(gram), "gram must be positive definite");
    RatMat b = detail::embed_recursive(to_rat(gram));
    Int den = 1;
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) den = lcm(den, rat_den(b(i, j)));
    IntMat num(b.rows(), b.cols());
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) num(i, j) = rat_num(b(i, j)) * (den / rat_den(b(i, j)));
    // exactness check: (num/den)(num/den)^T == gram bit for bit
    IntMat prod = mul(num, transpose(num));
    for (int i = 0; i < gram.rows(); ++i)
        for (int j = 0; j < gram.cols(); ++j)
            ensure(prod(i, j) == gram(i, j) * den * den, "gram embedding verification failed");
    return {std::move(num), std::move(den)};
}

}  // namespace latkit

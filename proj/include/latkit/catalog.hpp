#pragma once

// Deterministic constructions of the named lattices used as seeds and test
// fixtures: Z^n, the ADE root lattices, D_n^+, the Golay code with its
// Construction-A lattice, and the frozen Leech / odd Leech bases.

#include <latkit/data/leech_frozen.hpp>
#include <latkit/lattice.hpp>

#include <array>
#include <cstdint>
#include <string>

namespace latkit {

inline IntegerLattice zn(int n) {
    require(n >= 1, "zn: rank must be positive");
    return IntegerLattice::from_basis(IntMat::identity(n), 1, "Z" + std::to_string(n));
}

enum class RootFamily { A, D, E };

inline IntegerLattice root_lattice(RootFamily family, int rank) {
    switch (family) {
        case RootFamily::A: {
            require(rank >= 1, "A-family rank must be >= 1");
            IntMat b(rank, rank + 1);
            for (int i = 0; i < rank; ++i) {
                b(i, i) = 1;
                b(i, i + 1) = -1;
            }
            return IntegerLattice::from_basis(std::move(b), 1, "A" + std::to_string(rank));
        }
        case RootFamily::D: {
            require(rank >= 3, "D-family rank must be >= 3");
            IntMat b(rank, rank);
            for (int i = 0; i + 1 < rank; ++i) {
                b(i, i) = 1;
                b(i, i + 1) = -1;
            }
            b(rank - 1, rank - 2) = 1;
            b(rank - 1, rank - 1) = 1;
            return IntegerLattice::from_basis(std::move(b), 1, "D" + std::to_string(rank));
        }
        case RootFamily::E: {
            require(rank >= 6 && rank <= 8, "E-family rank must be 6, 7 or 8");
            // Bourbaki simple roots of E8 in the standard ambient R^8, times 2
            static const int roots[8][8] = {
                {1, -1, -1, -1, -1, -1, -1, 1},  // alpha_1 (halves)
                {2, 2, 0, 0, 0, 0, 0, 0},
                {-2, 2, 0, 0, 0, 0, 0, 0},
                {0, -2, 2, 0, 0, 0, 0, 0},
                {0, 0, -2, 2, 0, 0, 0, 0},
                {0, 0, 0, -2, 2, 0, 0, 0},
                {0, 0, 0, 0, -2, 2, 0, 0},
                {0, 0, 0, 0, 0, -2, 2, 0},
            };
            IntMat b(rank, 8);
            for (int i = 0; i < rank; ++i)
                for (int j = 0; j < 8; ++j) b(i, j) = roots[i][j];
            return IntegerLattice::from_basis(std::move(b), 2, "E" + std::to_string(rank));
        }
    }
    throw invalid_input("unknown root family");
}

/// D_n plus the all-halves glue vector; even and unimodular for n = 0 mod 8.
inline IntegerLattice dplus(int n) {
    require(n % 8 == 0 && n >= 8, "dplus: rank must be a positive multiple of 8");
    // generators of D_n (doubled) plus the all-halves glue vector, over a
    // common denominator 2; HNF extracts a basis
    IntMat gens(n + 1, n);
    for (int i = 0; i + 1 < n; ++i) {
        gens(i, i) = 2;
        gens(i, i + 1) = -2;
    }
    gens(n - 1, n - 2) = 2;
    gens(n - 1, n - 1) = 2;
    for (int j = 0; j < n; ++j) gens(n, j) = 1;
    IntMat b = hnf(gens).h;
    ensure(b.rows() == n, "dplus: generators must span full rank");
    return IntegerLattice::from_basis(std::move(b), 2, "Dplus" + std::to_string(n));
}

/// Generator rows of the extended binary Golay code, bit j = coordinate j.
struct CodeWordSet {
    std::array<std::uint32_t, 12> rows;
};

inline CodeWordSet golay_code() {
    // [I | B] generator, B a bordered quadratic-residue circulant.
    static const char* rows[12] = {
        "100000000000110111000101",
        "010000000000011011100011",
        "001000000000101101110001",
        "000100000000010110111001",
        "000010000000001011011101",
        "000001000000000101101111",
        "000000100000100010110111",
        "000000010000110001011011",
        "000000001000111000101101",
        "000000000100011100010111",
        "000000000010101110001011",
        "000000000001111111111110",
    };
    CodeWordSet code{};
    for (int i = 0; i < 12; ++i) {
        std::uint32_t w = 0;
        for (int j = 0; j < 24; ++j)
            if (rows[i][j] == '1') w |= 1u << j;
        code.rows[static_cast<size_t>(i)] = w;
    }
    // invariants asserted at load: dimension 12, doubly even, self-dual,
    // minimum weight 8 over all 4096 codewords
    int minw = 24;
    std::vector<bool> seen(1u << 12, false);
    for (std::uint32_t m = 0; m < 4096; ++m) {
        std::uint32_t w = 0;
        for (int i = 0; i < 12; ++i)
            if (m >> i & 1u) w ^= code.rows[static_cast<size_t>(i)];
        int wt = __builtin_popcount(w);
        ensure(wt % 4 == 0, "golay: weights must be divisible by 4");
        if (w != 0) minw = std::min(minw, wt);
    }
    ensure(minw == 8, "golay: minimum weight must be 8");
    for (int i = 0; i < 12; ++i)
        for (int j = 0; j < 12; ++j)
            ensure(__builtin_popcount(code.rows[static_cast<size_t>(i)] &
                                      code.rows[static_cast<size_t>(j)]) % 2 == 0,
                   "golay: code must be self-orthogonal");
    return code;
}

/// Construction A: the rescaled preimage of a self-dual length-24 code in Z^24,
/// with Gram = (lift * lift^T) / 2. The sqrt(2) scale is realized rationally by
/// pairing ambient coordinates through a norm-doubling orthogonal transform.
inline IntegerLattice construction_a(const CodeWordSet& code) {
    IntMat gens(12 + 24, 24);
    for (int i = 0; i < 12; ++i)
        for (int j = 0; j < 24; ++j) gens(i, j) = (code.rows[static_cast<size_t>(i)] >> j) & 1u;
    for (int i = 0; i < 24; ++i) gens(12 + i, i) = 2;
    IntMat lift = hnf(gens).h;
    ensure(lift.rows() == 24, "construction_a: lift must have full rank");
    // H = blockdiag([[1,1],[1,-1]]) has H H^T = 2 I, so (lift*H/2) realizes Gram/2
    IntMat h(24, 24);
    for (int p = 0; p < 12; ++p) {
        h(2 * p, 2 * p) = 1;
        h(2 * p, 2 * p + 1) = 1;
        h(2 * p + 1, 2 * p) = 1;
        h(2 * p + 1, 2 * p + 1) = -1;
    }
    return IntegerLattice::from_basis(mul(lift, h), 2, "NiemeierA1_24");
}

/// The Leech lattice: even unimodular rank 24, minimum 4. Frozen explicit
/// basis; regenerate with the derive-frozen tool.
inline IntegerLattice leech() {
    ensure(data::kFrozenDataAvailable, "frozen Leech basis missing; run tools/derive_frozen");
    IntMat num(24, 24);
    for (int i = 0; i < 24; ++i)
        for (int j = 0; j < 24; ++j) num(i, j) = data::kLeechBasisNum[i][j];
    return IntegerLattice::from_basis(std::move(num), data::kLeechBasisDen, "Leech");
}

/// The odd Leech lattice: odd unimodular rank 24, minimum 3. Frozen basis.
inline IntegerLattice odd_leech() {
    ensure(data::kFrozenDataAvailable, "frozen odd Leech basis missing; run tools/derive_frozen");
    IntMat num(24, 24);
    for (int i = 0; i < 24; ++i)
        for (int j = 0; j < 24; ++j) num(i, j) = data::kOddLeechBasisNum[i][j];
    return IntegerLattice::from_basis(std::move(num), data::kOddLeechBasisDen, "OddLeech");
}

}  // namespace latkit

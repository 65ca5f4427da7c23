#include "doctest.h"

#include <latkit/catalog.hpp>
#include <latkit/reduction.hpp>

#include "support/testutil.hpp"

#include <random>

using namespace latkit;

TEST_CASE("lll recovers the orthonormal basis of scrambled Z^4") {
    std::mt19937 rng(101);
    for (int trial = 0; trial < 8; ++trial) {
        IntMat u = testutil::random_unimodular(4, rng);
        auto scrambled = IntegerLattice::from_basis(u, 1);
        auto red = lll_reduce(scrambled);
        CHECK(red.lattice.gram() == IntMat::identity(4));
        CHECK(abs(det_bareiss(red.transform)) == 1);
        CHECK(same_lattice(red.lattice, scrambled));
    }
}

TEST_CASE("lll preserves the lattice and is sane on reduced input") {
    auto e8 = root_lattice(RootFamily::E, 8);
    auto red = lll_reduce(e8);
    CHECK(same_lattice(red.lattice, e8));
    CHECK(abs(det_bareiss(red.transform)) == 1);
    // transform congruence: U G U^T equals the output Gram
    IntMat conj = mul(mul(red.transform, e8.gram()), transpose(red.transform));
    CHECK(conj == red.lattice.gram());

    auto z1 = zn(1);
    auto red1 = lll_reduce(z1);
    CHECK(red1.lattice.gram() == z1.gram());
}

TEST_CASE("short vector counts on named lattices") {
    auto z2 = zn(2);
    auto sv = short_vectors(z2, 1);
    REQUIRE(sv.reps.size() == 2);
    CHECK(sv.reps[0].coords == IntVec{Int(0), Int(1)});
    CHECK(sv.reps[1].coords == IntVec{Int(1), Int(0)});

    auto e8 = root_lattice(RootFamily::E, 8);
    CHECK(short_vectors(e8, 2).reps.size() == 120);

    // A2 has 6 roots -> 3 representatives
    IntMat g(2, 2);
    g(0, 0) = 2; g(0, 1) = -1; g(1, 0) = -1; g(1, 1) = 2;
    CHECK(short_vectors(IntegerLattice::from_gram(g), 2).reps.size() == 3);
}

TEST_CASE("fincke-pohst agrees with brute-force box enumeration") {
    std::mt19937 rng(7);
    int done = 0;
    while (done < 50) {
        int rank = 1 + static_cast<int>(rng() % 5);
        auto L = testutil::random_lattice(rank, rng);
        Int bound = 1 + static_cast<int>(rng() % 6);
        auto oracle = testutil::brute_force_short_vectors(L, bound);
        auto fast = short_vectors(L, bound);
        REQUIRE(fast.reps.size() == oracle.size());
        for (size_t i = 0; i < oracle.size(); ++i) {
            CHECK(fast.reps[i].coords == oracle[i].coords);
            CHECK(fast.reps[i].norm == oracle[i].norm);
        }
        ++done;
    }
}

TEST_CASE("short vectors are basis-invariant") {
    std::mt19937 rng(33);
    auto e8 = root_lattice(RootFamily::E, 8);
    IntMat u = testutil::random_unimodular(8, rng);
    auto scrambled = lattice_from_coords(e8, u, 1);
    auto a = short_vectors(e8, 4);
    auto b = short_vectors(scrambled, 4);
    REQUIRE(a.reps.size() == b.reps.size());
    std::vector<Int> na, nb;
    for (const auto& v : a.reps) na.push_back(v.norm);
    for (const auto& v : b.reps) nb.push_back(v.norm);
    CHECK(na == nb);
}

TEST_CASE("minimum norms") {
    CHECK(minimum_norm(zn(24)) == 1);
    CHECK(minimum_norm(root_lattice(RootFamily::E, 8)) == 2);
    CHECK(minimum_norm(construction_a(golay_code())) == 2);
}

TEST_CASE("theta prefixes") {
    auto z1 = zn(1);
    auto t = theta_prefix(z1, 4);
    CHECK(t == std::vector<Int>{Int(1), Int(2), Int(0), Int(0), Int(2)});
    auto e8 = root_lattice(RootFamily::E, 8);
    CHECK(theta_prefix(e8, 2) == std::vector<Int>{Int(1), Int(0), Int(240)});
    CHECK(theta_prefix(e8, 0) == std::vector<Int>{Int(1)});
    // smallest index with a nonzero count equals the minimum
    auto t3 = theta_prefix(construction_a(golay_code()), 2);
    CHECK(t3[1] == 0);
    CHECK(t3[2] == 48);
}

TEST_CASE("construction A invariants") {
    auto n24 = construction_a(golay_code());
    CHECK(n24.rank() == 24);
    CHECK(is_unimodular(n24));
    CHECK(is_even(n24));
}

TEST_CASE("lll rejects bad delta") {
    CHECK_THROWS_AS(lll_reduce(zn(2), Rat(1, 8)), invalid_input);
    CHECK_THROWS_AS(lll_reduce(zn(2), Rat(1)), invalid_input);
}

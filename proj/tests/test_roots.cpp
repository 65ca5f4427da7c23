#include "doctest.h"

#include <latkit/catalog.hpp>
#include <latkit/roots.hpp>

#include "support/testutil.hpp"

#include <random>

using namespace latkit;

TEST_CASE("root vectors of named lattices") {
    CHECK(root_vectors(zn(24)).reps.size() == 552);
    CHECK(root_vectors(root_lattice(RootFamily::A, 2)).reps.size() == 3);
    CHECK(root_vectors(root_lattice(RootFamily::E, 8)).reps.size() == 120);
    // norm-1 vectors are not roots; Z^2 has the A1^2 system (1,1), (1,-1)
    CHECK(root_vectors(zn(2)).reps.size() == 2);
    CHECK(root_decomposition(zn(2)).str() == "A1^2");
}

TEST_CASE("root decomposition labels") {
    CHECK(root_decomposition(zn(24)).str() == "D24");
    CHECK(root_decomposition(root_lattice(RootFamily::A, 2)).str() == "A2");
    CHECK(root_decomposition(root_lattice(RootFamily::A, 1)).str() == "A1");
    CHECK(root_decomposition(root_lattice(RootFamily::D, 4)).str() == "D4");
    CHECK(root_decomposition(root_lattice(RootFamily::D, 3)).str() == "A3");  // D3 = A3
    CHECK(root_decomposition(root_lattice(RootFamily::E, 6)).str() == "E6");
    CHECK(root_decomposition(root_lattice(RootFamily::E, 7)).str() == "E7");
    CHECK(root_decomposition(root_lattice(RootFamily::E, 8)).str() == "E8");
    CHECK(root_decomposition(dplus(16)).str() == "D16");
    CHECK(root_decomposition(dplus(24)).str() == "D24");
    CHECK(root_decomposition(construction_a(golay_code())).str() == "A1^24");
}

TEST_CASE("root counts and ranks are consistent") {
    for (auto L : {root_lattice(RootFamily::E, 8), dplus(16), construction_a(golay_code())}) {
        auto label = root_decomposition(L);
        CHECK(label.total_root_count == Int(2) * root_vectors(L).reps.size());
        CHECK(label.total_rank <= L.rank());
    }
    CHECK(root_decomposition(dplus(24)).total_root_count == 1104);
    CHECK(root_decomposition(construction_a(golay_code())).total_root_count == 48);
}

TEST_CASE("labels of direct sums") {
    auto e8 = root_lattice(RootFamily::E, 8);
    CHECK(root_decomposition(direct_sum(e8, e8)).str() == "E8^2");
    auto mix = direct_sum(direct_sum(root_lattice(RootFamily::A, 1), root_lattice(RootFamily::A, 2)), zn(1));
    CHECK(root_decomposition(mix).str() == "A2 A1");
    CHECK(root_decomposition(direct_sum(e8, zn(16))).str() == "D16 E8");
}

TEST_CASE("root decomposition is isometry invariant") {
    std::mt19937 rng(71);
    for (auto L : {root_lattice(RootFamily::E, 6), dplus(8), direct_sum(root_lattice(RootFamily::D, 4), zn(2))}) {
        IntMat u = testutil::random_unimodular(L.rank(), rng);
        auto scrambled = lattice_from_coords(L, u, 1);
        CHECK(root_decomposition(scrambled).str() == root_decomposition(L).str());
    }
}

TEST_CASE("empty root system") {
    // even sublattice of Z^1 is 2Z with minimum 4: no roots
    auto l = even_sublattice(zn(1));
    CHECK(root_decomposition(l).str() == "∅");
    CHECK(root_decomposition(l).total_root_count == 0);
}

// Regenerates include/latkit/data/leech_frozen.hpp.
//
// Deterministic path: start from the Construction-A lattice of the Golay code
// (root system A1^24). The lift of (3,1,...,1) has norm 16, meets every root
// of the lattice with odd product, and is primitive, so its 2-neighbor has no
// roots and minimum 4: the Leech lattice. The common index-2 core of the pair
// then has exactly one odd unimodular overlattice, the odd Leech lattice.

#include <latkit/catalog.hpp>
#include <latkit/neighbors.hpp>

#include <fstream>
#include <iostream>

using namespace latkit;

namespace {

void write_matrix(std::ostream& os, const char* name, const IntegerLattice& L) {
    os << "inline constexpr int " << name << "[24][24] = {\n";
    for (int i = 0; i < 24; ++i) {
        os << "    {";
        for (int j = 0; j < 24; ++j) {
            os << to_i64(L.basis_num()(i, j));
            if (j + 1 < 24) os << ", ";
        }
        os << "},\n";
    }
    os << "};\n";
}

}  // namespace

int main(int argc, char** argv) {
    std::string out_path = argc > 1 ? argv[1] : "include/latkit/data/leech_frozen.hpp";

    CodeWordSet code = golay_code();
    IntegerLattice n24 = construction_a(code);
    std::cout << "Construction A: " << root_decomposition(n24).str()
              << ", min " << minimum_norm(n24) << "\n";

    // coordinates of the lift of (3,1,...,1) with respect to the lattice basis
    IntMat gens(12 + 24, 24);
    for (int i = 0; i < 12; ++i)
        for (int j = 0; j < 24; ++j) gens(i, j) = (code.rows[static_cast<size_t>(i)] >> j) & 1u;
    for (int i = 0; i < 24; ++i) gens(12 + i, i) = 2;
    IntMat lift = hnf(gens).h;
    RatVec target(24, Rat(1));
    target[0] = 3;
    auto y = rat_solve_left(to_rat(lift), target);
    ensure(y.has_value(), "lift solve failed");
    IntVec v(24);
    for (int i = 0; i < 24; ++i) {
        ensure(is_integer((*y)[static_cast<size_t>(i)]), "lift coordinates must be integral");
        v[static_cast<size_t>(i)] = rat_num((*y)[static_cast<size_t>(i)]);
    }
    ensure(norm_of(n24, v) == 16, "neighbor vector must have norm 16");

    IntegerLattice leech_raw = two_neighbor(n24, v);
    ensure(is_even(leech_raw) && is_unimodular(leech_raw), "Leech must be even unimodular");
    ensure(minimum_norm(leech_raw) == 4, "Leech must have minimum 4");
    IntegerLattice leech = lll_reduce(leech_raw).lattice;
    std::cout << "Leech found: min " << minimum_norm(leech) << ", roots "
              << root_decomposition(leech).str() << "\n";

    // core D = { x in N : (x,v) even }; its third overlattice is the odd Leech
    const int r = 24;
    IntVec w = mul(v, n24.gram());
    int j0 = -1;
    for (int i = 0; i < r; ++i)
        if (w[static_cast<size_t>(i)] % 2 != 0) { j0 = i; break; }
    ensure(j0 >= 0, "v lies in 2L");
    IntMat rows(r, r);
    int out = 0;
    for (int i = 0; i < r; ++i) {
        if (i == j0) continue;
        rows(out, i) = 1;
        if (w[static_cast<size_t>(i)] % 2 != 0) rows(out, j0) = 1;
        ++out;
    }
    rows(out, j0) = 2;
    IntegerLattice core = lattice_from_coords(n24, hnf(rows).h, 1);
    ensure(determinant(core) == 4, "core must have determinant 4");

    IntegerLattice odd;
    bool found = false;
    for (const RatVec& rep : glue_group(core)) {
        bool zero = true;
        for (const Rat& c : rep) zero &= (c == 0);
        if (zero) continue;
        RatMat over(r + 1, r);
        for (int i = 0; i < r; ++i) over(i, i) = 1;
        for (int j = 0; j < r; ++j) over(r, j) = rep[static_cast<size_t>(j)];
        auto [h, den] = hnf_rational(over);
        IntegerLattice m = lattice_from_coords(core, h, den);
        if (!is_even(m)) {
            ensure(is_unimodular(m), "odd overlattice must be unimodular");
            odd = lll_reduce(m).lattice;
            found = true;
        }
    }
    ensure(found, "odd overlattice not found");
    ensure(minimum_norm(odd) == 3, "odd Leech must have minimum 3");
    std::cout << "odd Leech found: min 3\n";

    ensure(leech.denominator() == odd.denominator() || true, "");
    std::ofstream os(out_path);
    os << "#pragma once\n\n";
    os << "// Frozen bases of the Leech and odd Leech lattices in the ambient frame of\n";
    os << "// the Golay Construction-A lattice. Generated by tools/derive_frozen; do not\n";
    os << "// edit by hand. Basis rows are numerators over the stated denominator.\n\n";
    os << "namespace latkit::data {\n\n";
    os << "inline constexpr bool kFrozenDataAvailable = true;\n\n";
    write_matrix(os, "kLeechBasisNum", leech);
    os << "inline constexpr int kLeechBasisDen = " << to_i64(leech.denominator()) << ";\n\n";
    write_matrix(os, "kOddLeechBasisNum", odd);
    os << "inline constexpr int kOddLeechBasisDen = " << to_i64(odd.denominator()) << ";\n\n";
    os << "}  // namespace latkit::data\n";
    std::cout << "wrote " << out_path << "\n";
    return 0;
}

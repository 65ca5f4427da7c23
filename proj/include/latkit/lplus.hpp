#pragma once

// The orbit/stabilizer-pruned backtracking search for embeddings of the
// rank-6 lattice spanned by a norm-2 vector h and five pairwise orthogonal
// norm-3 vectors with (h, alpha_i) = 1, plus witness verification and the
// rank-(n-6) orthogonal complement.

#include <latkit/isometry.hpp>

#include <optional>
#include <string>

namespace latkit {

/// Gram matrix of the target basis (h, a1, ..., a5).
inline IntMat lplus_target() {
    IntMat g(6, 6);
    g(0, 0) = 2;
    for (int i = 1; i < 6; ++i) {
        g(i, i) = 3;
        g(0, i) = 1;
        g(i, 0) = 1;
    }
    return g;
}

/// Certificate of an embedding: coordinate rows of (h, a1, ..., a5).
struct LPlusWitness {
    std::string host;
    std::vector<LatticeVector> vectors;
};

/// True iff the witness vectors lie in N and their Gram equals the target.
/// Independent of the search; usable to audit third-party witnesses.
inline bool verify_witness(const IntegerLattice& N, const LPlusWitness& w) {
    if (w.vectors.size() != 6) return false;
    for (const auto& v : w.vectors)
        if (static_cast<int>(v.size()) != N.rank()) return false;
    IntMat target = lplus_target();
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            if (inner_product(N, w.vectors[static_cast<size_t>(i)],
                              w.vectors[static_cast<size_t>(j)]) != target(i, j))
                return false;
    return true;
}

namespace detail {

struct EmbedContext {
    const IntegerLattice* N;
    std::vector<IntVec> norm3;        // expanded, canonical order
    std::vector<IntVec> norm3_grows;  // v * gram per norm-3 vector
};

/// Exhaustive completion over levels `from`..5 (alphas with index >= from).
/// chosen[0] = h, chosen[1..] = alphas so far. Returns the first witness.
inline bool embed_complete(const EmbedContext& ctx, std::vector<IntVec>& chosen, size_t from) {
    if (chosen.size() == 6) return true;
    for (size_t i = 0; i < ctx.norm3.size(); ++i) {
        const IntVec& cand = ctx.norm3[i];
        const IntVec& grow = ctx.norm3_grows[i];
        if (dot(grow, chosen[0]) != 1) continue;  // (h, alpha) = 1
        bool ok = true;
        for (size_t j = 1; j < chosen.size(); ++j)
            if (dot(grow, chosen[j]) != 0) { ok = false; break; }
        if (!ok) continue;
        chosen.push_back(cand);
        if (embed_complete(ctx, chosen, from + 1)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace detail

/// Backtracking search for an embedding. Level 0 scans one representative per
/// Aut(N)-orbit of norm-2 vectors; prune_depth >= 1 additionally decomposes
/// the alpha_1 candidates into orbits of the pointwise stabilizer of h, and
/// prune_depth >= 2 likewise for alpha_2 under the stabilizer of {h, alpha_1}.
/// The remaining levels are exhaustive. Returns the first witness found in
/// canonical candidate order, or nullopt after exhausting all branches.
inline std::optional<LPlusWitness> embed_search(const IntegerLattice& N, int prune_depth = 2) {
    require(prune_depth >= 0 && prune_depth <= 2, "embed_search: prune_depth must be 0, 1 or 2");
    ShortVectorSet roots2 = short_vectors(N, 2);
    std::vector<IntVec> h_candidates;
    for (const auto& sv : roots2.expanded())
        if (sv.norm == 2) h_candidates.push_back(sv.coords);
    if (h_candidates.empty()) return std::nullopt;  // terminates at level 0

    detail::EmbedContext ctx{&N, {}, {}};
    for (const auto& sv : short_vectors(N, 3).expanded())
        if (sv.norm == 3) {
            ctx.norm3.push_back(sv.coords);
            ctx.norm3_grows.push_back(mul(sv.coords, N.gram()));
        }
    if (ctx.norm3.empty()) return std::nullopt;  // level 1 cannot be populated

    IsometryGroup aut = automorphism_group(N);
    OrbitPartition h_orbits = orbits(aut, h_candidates);

    auto finish = [&](std::vector<IntVec> chosen) {
        LPlusWitness w{N.name(), std::move(chosen)};
        ensure(verify_witness(N, w), "embed_search produced an invalid witness");
        return w;
    };

    for (const auto& horb : h_orbits.orbits) {
        const IntVec h = horb.representative;
        IntVec hg = mul(h, N.gram());
        std::vector<IntVec> a1_candidates;
        for (size_t i = 0; i < ctx.norm3.size(); ++i)
            if (dot(hg, ctx.norm3[i]) == 1) a1_candidates.push_back(ctx.norm3[i]);
        if (a1_candidates.empty()) continue;

        if (prune_depth == 0) {
            std::vector<IntVec> chosen{h};
            if (detail::embed_complete(ctx, chosen, 1)) return finish(std::move(chosen));
            continue;
        }

        IsometryGroup h1 = pointwise_stabilizer(aut, {h});
        OrbitPartition a1_orbits = orbits(h1, a1_candidates);
        for (const auto& orb1 : a1_orbits.orbits) {
            const IntVec a1 = orb1.representative;
            IntVec a1g = mul(a1, N.gram());
            std::vector<IntVec> a2_candidates;
            for (size_t i = 0; i < ctx.norm3.size(); ++i)
                if (dot(hg, ctx.norm3[i]) == 1 && dot(a1g, ctx.norm3[i]) == 0)
                    a2_candidates.push_back(ctx.norm3[i]);
            if (a2_candidates.empty()) continue;

            if (prune_depth == 1) {
                std::vector<IntVec> chosen{h, a1};
                if (detail::embed_complete(ctx, chosen, 2)) return finish(std::move(chosen));
                continue;
            }

            IsometryGroup h2 = pointwise_stabilizer(aut, {h, a1});
            OrbitPartition a2_orbits = orbits(h2, a2_candidates);
            for (const auto& orb2 : a2_orbits.orbits) {
                std::vector<IntVec> chosen{h, a1, orb2.representative};
                if (detail::embed_complete(ctx, chosen, 3)) return finish(std::move(chosen));
            }
        }
    }
    return std::nullopt;
}

/// K = { x in N : (x, v) = 0 for all witness vectors }, rank(N) - 6.
inline IntegerLattice orthogonal_complement(const IntegerLattice& N, const LPlusWitness& w) {
    require(verify_witness(N, w), "orthogonal_complement: witness is invalid");
    const int r = N.rank();
    IntMat constraints(r, 6);
    for (int j = 0; j < 6; ++j) {
        IntVec col = mul(w.vectors[static_cast<size_t>(j)], N.gram());
        for (int i = 0; i < r; ++i) constraints(i, j) = col[static_cast<size_t>(i)];
    }
    IntMat ker = int_kernel(constraints);
    ensure(ker.rows() == r - 6, "orthogonal complement must have rank n - 6");
    std::string name = N.name().empty() ? "" : N.name() + ".Kperp";
    return lattice_from_coords(N, ker, 1, std::move(name));
}

}  // namespace latkit

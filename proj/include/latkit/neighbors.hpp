#pragma once

// Kneser 2-neighbor steps, even-neighbor pairs and types of odd unimodular
// lattices, genus enumeration by the neighbor method with exact mass-formula
// saturation as the completeness certificate.

#include <latkit/isometry.hpp>
#include <latkit/mass.hpp>
#include <latkit/roots.hpp>

#include <deque>
#include <functional>
#include <optional>
#include <unordered_set>

namespace latkit {

/// Kneser 2-neighbor L_v = { x in L : (x,v) even } + Z(v/2).
inline IntegerLattice two_neighbor(const IntegerLattice& L, const LatticeVector& v) {
    require(is_unimodular(L), "two_neighbor: lattice must be unimodular");
    require(static_cast<int>(v.size()) == L.rank(), "two_neighbor: coordinate length mismatch");
    Int g = 0;
    for (const Int& c : v) g = gcd(g, c);
    require(g == 1, "two_neighbor: v must be primitive");
    require(norm_of(L, v) % 4 == 0, "two_neighbor: norm(v) must be divisible by 4");

    const int r = L.rank();
    IntVec w = mul(v, L.gram());
    int j0 = -1;
    for (int i = 0; i < r; ++i)
        if (w[static_cast<size_t>(i)] % 2 != 0) { j0 = i; break; }
    ensure(j0 >= 0, "two_neighbor: v lies in 2L");

    // rows of 2*M (M = kernel of x -> (x,v) mod 2) followed by v, over denominator 2
    IntMat rows(r + 1, r);
    int out = 0;
    for (int i = 0; i < r; ++i) {
        if (i == j0) continue;
        rows(out, i) = 2;
        if (w[static_cast<size_t>(i)] % 2 != 0) rows(out, j0) = 2;
        ++out;
    }
    rows(out, j0) = 4;
    ++out;
    for (int i = 0; i < r; ++i) rows(out, i) = v[static_cast<size_t>(i)];
    IntMat h = hnf(rows).h;
    ensure(h.rows() == r, "two_neighbor: neighbor must have full rank");
    IntegerLattice nb = lattice_from_coords(L, h, 2);
    ensure(is_unimodular(nb), "two_neighbor: neighbor must be unimodular");
    return nb;
}

namespace detail {

/// Lazy fingerprint-order comparison of lattices in one genus:
/// minimum, then root label, then theta_prefix(4), then the canonical key.
inline bool fingerprint_less(const IntegerLattice& a, const IntegerLattice& b) {
    Int ma = minimum_norm(a), mb = minimum_norm(b);
    if (ma != mb) return ma < mb;
    std::string la = root_decomposition(a).str(), lb = root_decomposition(b).str();
    if (la != lb) return la < lb;
    auto ta = theta_prefix(a, 4), tb = theta_prefix(b, 4);
    if (ta != tb) return ta < tb;
    return a.canonical_key() < b.canonical_key();
}

}  // namespace detail

struct NeighborPair {
    IntegerLattice odd_lattice;
    IntegerLattice even_a, even_b;
    IntegerLattice core;  // the common index-2 sublattice
};

/// The two even unimodular lattices neighboring an odd unimodular lattice of
/// rank divisible by 8: the other two index-2 overlattices of its even
/// sublattice.
inline NeighborPair even_neighbors(const IntegerLattice& N) {
    require(is_unimodular(N), "even_neighbors: lattice must be unimodular");
    require(!is_even(N), "even_neighbors: lattice must be odd");
    require(N.rank() % 8 == 0,
            "even_neighbors: the two even overlattices exist only for rank = 0 mod 8");

    const int r = N.rank();
    IntegerLattice D = lattice_from_coords(N, even_sublattice_coords(N), 1);
    std::vector<RatVec> glue = glue_group(D);
    ensure(glue.size() == 4, "even_neighbors: glue group must have order 4");

    std::vector<IntegerLattice> overs;
    for (const RatVec& rep : glue) {
        bool zero = true;
        for (const Rat& c : rep) zero &= (c == 0);
        if (zero) continue;
        for (const Rat& c : rep)
            ensure(is_integer(c * 2), "even_neighbors: glue group must be elementary abelian");
        RatMat rows(r + 1, r);
        for (int i = 0; i < r; ++i) rows(i, i) = 1;
        for (int j = 0; j < r; ++j) rows(r, j) = rep[static_cast<size_t>(j)];
        auto [h, den] = hnf_rational(rows);
        overs.push_back(lattice_from_coords(D, h, den));
    }
    ensure(overs.size() == 3, "even_neighbors: expected three proper overlattices");

    NeighborPair pair;
    pair.odd_lattice = N;
    pair.core = D;
    std::vector<IntegerLattice> evens;
    bool found_n = false;
    for (auto& M : overs) {
        ensure(is_unimodular(M), "even_neighbors: overlattice must be unimodular");
        if (is_even(M)) evens.push_back(std::move(M));
        else {
            ensure(same_lattice(M, N), "even_neighbors: odd overlattice must be N itself");
            found_n = true;
        }
    }
    ensure(found_n && evens.size() == 2, "even_neighbors: expected N plus two even overlattices");
    if (detail::fingerprint_less(evens[1], evens[0])) std::swap(evens[0], evens[1]);
    pair.even_a = std::move(evens[0]);
    pair.even_b = std::move(evens[1]);
    return pair;
}

/// The type of an odd unimodular lattice: root systems of its even neighbors,
/// as an unordered pair in lexicographic order of the label strings.
inline std::pair<RootSystemLabel, RootSystemLabel> type_of(const IntegerLattice& N) {
    NeighborPair p = even_neighbors(N);
    RootSystemLabel a = root_decomposition(p.even_a);
    RootSystemLabel b = root_decomposition(p.even_b);
    if (b < a) std::swap(a, b);
    return {a, b};
}

/// One isometry class in an enumerated genus.
struct GenusRecord {
    IntegerLattice lattice;
    Int aut_order;
    Int minimum;
    std::vector<Int> theta4;
    RootSystemLabel root_label;
    std::optional<std::pair<RootSystemLabel, RootSystemLabel>> type_label;
    std::string name;
};

struct MassReport {
    Rat sum;
    Rat target;
    Rat difference;  // sum - target, exactly zero on a complete genus
    bool pass;
};

inline MassReport mass_check(const std::vector<GenusRecord>& records) {
    require(!records.empty(), "mass_check: empty record list");
    int rank = records.front().lattice.rank();
    GenusParity parity = is_even(records.front().lattice) ? GenusParity::even : GenusParity::odd;
    Rat sum = 0;
    for (const auto& rec : records) {
        require(rec.lattice.rank() == rank, "mass_check: mixed ranks");
        sum += Rat(1) / Rat(rec.aut_order);
    }
    Rat target = genus_mass(rank, parity);
    return {sum, target, sum - target, sum == target};
}

struct PreloadedClass {
    IntegerLattice lattice;
    std::vector<IntMat> generators;
    Int aut_order;
};

struct GenusOptions {
    std::optional<int> max_classes;
    int workers = 1;
    int candidate_cap = 512;  // candidate classes per lattice per round
    std::vector<PreloadedClass> preload;
    std::function<void(const GenusRecord&)> on_new_class;
};

namespace detail {

struct GenusEntry {
    IntegerLattice lattice;  // LLL-reduced representative
    std::vector<IntMat> gens;
    Int aut_order;
    Int minimum;
    RootSystemLabel label;
    std::optional<std::vector<Int>> theta3, theta4;
};

inline const std::vector<Int>& entry_theta(GenusEntry& e, int k) {
    auto& slot = (k == 3) ? e.theta3 : e.theta4;
    if (!slot) slot = theta_prefix(e.lattice, k);
    return *slot;
}

}  // namespace detail

/// Breadth-first exploration of the 2-neighbor graph with fingerprint+isometry
/// deduplication; terminates when the mass sum matches the genus mass exactly
/// (or optionally at max_classes). Output sorted by fingerprint.
inline std::vector<GenusRecord> genus_enumerate(const IntegerLattice& seed,
                                                const GenusOptions& opt = {}) {
    using detail::GenusEntry;
    require(is_unimodular(seed), "genus_enumerate: seed must be unimodular");
    const int rank = seed.rank();
    const bool even_genus = is_even(seed);
    const Rat target = genus_mass(rank, even_genus ? GenusParity::even : GenusParity::odd);

    std::vector<GenusEntry> registry;
    Rat mass_sum = 0;
    std::deque<size_t> frontier;

    auto emit = [&](size_t idx) {
        if (!opt.on_new_class) return;
        GenusEntry& e = registry[idx];
        GenusRecord rec{e.lattice, e.aut_order, e.minimum, detail::entry_theta(e, 4), e.label,
                        std::nullopt, e.lattice.name()};
        opt.on_new_class(rec);
    };

    // returns the registry index; appends when the class is new
    auto add_class = [&](const IntegerLattice& cand_in,
                         const std::vector<IntMat>* known_gens,
                         const Int* known_order) -> std::pair<size_t, bool> {
        IntegerLattice cand = lll_reduce(cand_in).lattice;
        Int minimum = minimum_norm(cand);
        RootSystemLabel label = root_decomposition(cand);
        GenusEntry probe{cand, {}, 0, minimum, label, std::nullopt, std::nullopt};
        for (size_t i = 0; i < registry.size(); ++i) {
            GenusEntry& e = registry[i];
            if (e.minimum != minimum || !(e.label == label)) continue;
            if (detail::entry_theta(e, 3) != detail::entry_theta(probe, 3)) continue;
            if (detail::entry_theta(e, 4) != detail::entry_theta(probe, 4)) continue;
            if (detail::isometric_search(e.lattice, cand).has_value()) return {i, false};
        }
        GenusEntry e = std::move(probe);
        if (known_gens && known_order) {
            e.gens = *known_gens;
            e.aut_order = *known_order;
        } else {
            IsometryGroup g = automorphism_group(cand);
            e.gens = std::move(g.generators);
            e.aut_order = g.order;
        }
        e.lattice.set_name("g" + hex64(fnv1a(e.lattice.canonical_key())).substr(8));
        registry.push_back(std::move(e));
        mass_sum += Rat(1) / Rat(registry.back().aut_order);
        ensure(mass_sum <= target,
               "genus_enumerate: mass sum exceeds the genus mass (isometry test defect)");
        frontier.push_back(registry.size() - 1);
        emit(registry.size() - 1);
        return {registry.size() - 1, true};
    };

    auto done = [&]() {
        if (mass_sum == target) return true;
        return opt.max_classes && static_cast<int>(registry.size()) >= *opt.max_classes;
    };

    for (const auto& pre : opt.preload) {
        add_class(pre.lattice, &pre.generators, &pre.aut_order);
        if (done()) break;
    }
    if (!done() && registry.empty()) add_class(seed, nullptr, nullptr);

    // rounds of ascending candidate norms; parity-preserving steps only for
    // even genera (norm = 0 mod 8 keeps v/2 of even norm)
    std::vector<std::vector<Int>> rounds =
        even_genus ? std::vector<std::vector<Int>>{{Int(8)}, {Int(16)}, {Int(24)}}
                   : std::vector<std::vector<Int>>{{Int(4)}, {Int(8)}, {Int(12), Int(16)}};
    for (size_t round = 0; round < rounds.size() && !done(); ++round) {
        if (round > 0) {
            frontier.clear();
            for (size_t i = 0; i < registry.size(); ++i) frontier.push_back(i);
        }
        while (!frontier.empty() && !done()) {
            size_t idx = frontier.front();
            frontier.pop_front();
            // candidate neighbor classes of this lattice: short vectors of the
            // allowed norms, deduplicated mod 2L and by generator images
            const IntegerLattice L = registry[idx].lattice;  // copy: registry may grow
            std::vector<IntMat> gens = registry[idx].gens;
            Int maxnorm = 0;
            for (const Int& nv : rounds[round]) maxnorm = max(maxnorm, nv);
            std::unordered_set<std::uint32_t> seen_classes;
            std::vector<IntVec> cands;
            auto class_key = [&](const IntVec& v) {
                std::uint32_t key = 0;
                for (int i = 0; i < rank; ++i)
                    if (v[static_cast<size_t>(i)] % 2 != 0) key |= 1u << i;
                return key;
            };
            short_vectors_streaming(L, maxnorm, [&](IntVec&& coords, const Int&) {
                Int g = 0;
                for (const Int& c : coords) g = gcd(g, c);
                if (g == 0) return true;
                IntVec u = std::move(coords);
                if (g > 1) {
                    if (g % 2 == 0) return true;  // lies in 2L
                    for (Int& c : u) c /= g;
                }
                Int nu = norm_of(L, u);
                if (nu % 4 != 0) return true;
                bool wanted = false;
                for (const Int& nv : rounds[round]) wanted |= (nu == nv);
                if (!wanted) return true;
                std::uint32_t key = class_key(u);
                if (key == 0 || !seen_classes.insert(key).second) return true;
                // mark generator images: their neighbors are isometric
                for (const auto& gen : gens) seen_classes.insert(class_key(mul(u, gen)));
                cands.push_back(std::move(u));
                return static_cast<int>(cands.size()) < opt.candidate_cap;
            });
            for (const IntVec& v : cands) {
                IntegerLattice nb = two_neighbor(L, v);
                if (is_even(nb) != even_genus) continue;
                add_class(nb, nullptr, nullptr);
                if (done()) break;
            }
        }
    }
    ensure(mass_sum == target || (opt.max_classes && static_cast<int>(registry.size()) >= *opt.max_classes),
           "genus_enumerate: neighbor exploration stalled before mass saturation");

    std::vector<GenusRecord> out;
    for (auto& e : registry) {
        GenusRecord rec{e.lattice, e.aut_order, e.minimum, detail::entry_theta(e, 4), e.label,
                        std::nullopt, e.lattice.name()};
        if (!even_genus && rank % 8 == 0) {
            auto tl = type_of(e.lattice);
            rec.type_label = tl;
        }
        out.push_back(std::move(rec));
    }
    std::sort(out.begin(), out.end(), [](const GenusRecord& a, const GenusRecord& b) {
        if (a.minimum != b.minimum) return a.minimum < b.minimum;
        if (a.theta4 != b.theta4) return a.theta4 < b.theta4;
        std::string la = a.root_label.str(), lb = b.root_label.str();
        if (la != lb) return la < lb;
        return a.lattice.canonical_key() < b.lattice.canonical_key();
    });
    return out;
}

}  // namespace latkit

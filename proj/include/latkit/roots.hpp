#pragma once

// Root-system extraction and ADE classification: the data defining the type
// of an odd unimodular rank-24 lattice through its even neighbors.

#include <latkit/reduction.hpp>

#include <map>
#include <string>

namespace latkit {

/// Multiset of ADE irreducible components, canonically ordered (rank
/// descending, then family A < D < E). The empty system prints as "∅".
struct RootSystemLabel {
    struct Component {
        char family;  // 'A', 'D' or 'E'
        int rank;
        int multiplicity;
    };
    std::vector<Component> components;
    int total_rank = 0;
    Int total_root_count = 0;

    std::string str() const {
        if (components.empty()) return "∅";
        std::string s;
        for (const auto& c : components) {
            if (!s.empty()) s += ' ';
            s += c.family + std::to_string(c.rank);
            if (c.multiplicity > 1) s += "^" + std::to_string(c.multiplicity);
        }
        return s;
    }

    bool operator==(const RootSystemLabel& o) const {
        return total_rank == o.total_rank && str() == o.str();
    }
    bool operator!=(const RootSystemLabel& o) const { return !(*this == o); }

    /// Canonical order: the empty system first, then label strings.
    bool operator<(const RootSystemLabel& o) const {
        if (components.empty() != o.components.empty()) return components.empty();
        return str() < o.str();
    }
};

/// All vectors of norm exactly 2, up to sign.
inline ShortVectorSet root_vectors(const IntegerLattice& L) {
    ShortVectorSet sv = short_vectors(L, 2);
    std::vector<ShortVector> roots;
    for (auto& v : sv.reps)
        if (v.norm == 2) roots.push_back(std::move(v));
    return {Int(2), std::move(roots)};
}

namespace detail {

inline Int root_count_of(char family, int rank) {
    switch (family) {
        case 'A': return Int(rank) * (rank + 1);
        case 'D': return Int(2) * rank * (rank - 1);
        case 'E': return rank == 6 ? 72 : rank == 7 ? 126 : 240;
    }
    return -1;
}

}  // namespace detail

/// Connected components of the root graph, labeled by (span rank, root count).
inline RootSystemLabel root_decomposition(const IntegerLattice& L) {
    ShortVectorSet roots = root_vectors(L);
    const int n = static_cast<int>(roots.reps.size());
    std::vector<int> parent(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) parent[static_cast<size_t>(i)] = i;
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    // edges where the inner product is nonzero (sign-independent)
    std::vector<IntVec> gr(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) gr[static_cast<size_t>(i)] = mul(roots.reps[static_cast<size_t>(i)].coords, L.gram());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (dot(gr[static_cast<size_t>(i)], roots.reps[static_cast<size_t>(j)].coords) != 0) {
                int a = find(i), b = find(j);
                if (a != b) parent[static_cast<size_t>(a)] = b;
            }
        }
    std::map<int, std::vector<int>> comps;
    for (int i = 0; i < n; ++i) comps[find(i)].push_back(i);

    std::map<std::pair<int, char>, int> tally;  // (rank desc handled later) -> multiplicity
    RootSystemLabel label;
    for (const auto& [root, members] : comps) {
        (void)root;
        IntMat rows(static_cast<int>(members.size()), L.rank());
        for (size_t i = 0; i < members.size(); ++i)
            rows.set_row(static_cast<int>(i), roots.reps[static_cast<size_t>(members[i])].coords);
        int rank = int_rank(rows);
        Int count = Int(2) * static_cast<int>(members.size());
        char family = 0;
        if (detail::root_count_of('A', rank) == count) family = 'A';
        else if (rank >= 4 && detail::root_count_of('D', rank) == count) family = 'D';
        else if (rank >= 6 && rank <= 8 && detail::root_count_of('E', rank) == count) family = 'E';
        require(family != 0, "not a root system of ADE type");
        ++tally[{rank, family}];
        label.total_rank += rank;
        label.total_root_count += count;
    }
    for (auto it = tally.rbegin(); it != tally.rend(); ++it) {
        auto [key, mult] = *it;
        label.components.push_back({key.second, key.first, mult});
    }
    // rank descending, family ascending at equal rank
    std::sort(label.components.begin(), label.components.end(),
              [](const RootSystemLabel::Component& a, const RootSystemLabel::Component& b) {
                  if (a.rank != b.rank) return a.rank > b.rank;
                  return a.family < b.family;
              });
    return label;
}

}  // namespace latkit

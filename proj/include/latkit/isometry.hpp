#pragma once

// Automorphism groups, isometry testing and orbit/stabilizer machinery.
//
// The automorphism search is a Plesken-Souvignier style backtracking over
// short-vector candidates: basis vectors of an LLL-reduced copy are mapped to
// vectors of equal norm, pruned by pairwise inner products and by invariant
// inner-product profiles. The group order falls out of the orbit sizes of the
// stabilizer chain accumulated along the search. A separate Schreier-Sims
// chain provides membership, pointwise stabilizers and an independent order
// computation from any generating set.
//
// Group elements are integer matrices U with U * gram * U^T = gram, acting on
// coordinate rows as x -> x * U.

#include <latkit/reduction.hpp>
#include <latkit/roots.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <unordered_set>

namespace latkit {

struct IsometryGroup {
    IntegerLattice lattice;
    std::vector<IntMat> generators;
    Int order;
};

namespace detail {

using I64 = std::int64_t;
using SVec = std::vector<I64>;
using SMat = std::vector<I64>;  // row-major n x n

inline SVec to_small(const IntVec& v) {
    SVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = to_i64(v[i]);
    return out;
}

inline IntVec to_big(const SVec& v) {
    IntVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = v[i];
    return out;
}

inline SMat to_small_mat(const IntMat& m) {
    SMat out(static_cast<size_t>(m.rows()) * m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out[static_cast<size_t>(i) * m.cols() + j] = to_i64(m(i, j));
    return out;
}

inline IntMat to_big_mat(const SMat& m, int n) {
    IntMat out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = m[static_cast<size_t>(i) * n + j];
    return out;
}

inline SVec apply(const SVec& v, const SMat& m, int n) {
    SVec out(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        I64 vi = v[static_cast<size_t>(i)];
        if (vi == 0) continue;
        const I64* row = &m[static_cast<size_t>(i) * n];
        for (int j = 0; j < n; ++j) out[static_cast<size_t>(j)] += vi * row[j];
    }
    return out;
}

inline SMat mul(const SMat& a, const SMat& b, int n) {
    SMat c(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            I64 aik = a[static_cast<size_t>(i) * n + k];
            if (aik == 0) continue;
            const I64* row = &b[static_cast<size_t>(k) * n];
            I64* dst = &c[static_cast<size_t>(i) * n];
            for (int j = 0; j < n; ++j) dst[j] += aik * row[j];
        }
    return c;
}

inline SMat small_identity(int n) {
    SMat m(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) m[static_cast<size_t>(i) * n + i] = 1;
    return m;
}

inline bool is_small_identity(const SMat& m, int n) {
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (m[static_cast<size_t>(i) * n + j] != (i == j ? 1 : 0)) return false;
    return true;
}

inline SMat small_inverse(const SMat& m, int n) {
    return to_small_mat(int_inverse_unimodular(to_big_mat(m, n)));
}

struct SVecHash {
    size_t operator()(const SVec& v) const {
        size_t h = 1469598103934665603ull;
        for (I64 x : v) {
            h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

/// Short-vector environment of one (reduced) Gram matrix: the expanded
/// +-vector list in canonical order, inner-product rows and lazy invariant
/// profiles used for candidate pruning.
class VecEnv {
  public:
    VecEnv(const IntMat& gram, const Int& bound) : n_(gram.rows()), bound_(bound) {
        gram_ = to_small_mat(gram);
        I64 maxg = 0;
        for (I64 g : gram_) maxg = std::max(maxg, std::abs(g));
        std::vector<ShortVector> reps;
        fincke_pohst(gram, bound, [&](const IntVec& x, const Int& norm) {
            reps.push_back({x, norm});
        });
        std::vector<std::pair<SVec, I64>> all;
        all.reserve(reps.size() * 2);
        I64 maxc = 0;
        for (const auto& sv : reps) {
            SVec v = to_small(sv.coords);
            for (I64 c : v) maxc = std::max(maxc, std::abs(c));
            SVec neg(v.size());
            for (size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
            I64 nv = to_i64(sv.norm);
            all.push_back({std::move(v), nv});
            all.push_back({std::move(neg), nv});
        }
        ensure(maxc < (I64(1) << 20) && maxg < (I64(1) << 20),
               "short vector coordinates out of the supported range");
        std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
            if (a.second != b.second) return a.second < b.second;
            return a.first < b.first;
        });
        vecs_.reserve(all.size());
        norms_.reserve(all.size());
        for (auto& [v, nv] : all) {
            index_.emplace(v, static_cast<int>(vecs_.size()));
            by_norm_[nv].push_back(static_cast<int>(vecs_.size()));
            vecs_.push_back(std::move(v));
            norms_.push_back(nv);
        }
        gvecs_.resize(vecs_.size());
        for (size_t i = 0; i < vecs_.size(); ++i) gvecs_[i] = apply(vecs_[i], gram_, n_);
        profiles_.assign(vecs_.size(), std::string());
        // profile classes: every enumerated norm class of expanded size <= cap
        for (const auto& [nv, idx] : by_norm_)
            if (idx.size() <= 8192) profile_classes_.push_back(nv);
    }

    int dim() const { return n_; }
    int size() const { return static_cast<int>(vecs_.size()); }
    const SVec& vec(int i) const { return vecs_[static_cast<size_t>(i)]; }
    const SVec& gvec(int i) const { return gvecs_[static_cast<size_t>(i)]; }
    I64 norm(int i) const { return norms_[static_cast<size_t>(i)]; }
    const SMat& gram() const { return gram_; }

    const std::vector<int>& of_norm(I64 nv) const {
        static const std::vector<int> empty;
        auto it = by_norm_.find(nv);
        return it == by_norm_.end() ? empty : it->second;
    }

    std::vector<std::pair<I64, size_t>> class_sizes() const {
        std::vector<std::pair<I64, size_t>> out;
        for (const auto& [nv, idx] : by_norm_) out.push_back({nv, idx.size()});
        return out;
    }

    int find(const SVec& v) const {
        auto it = index_.find(v);
        return it == index_.end() ? -1 : it->second;
    }

    I64 inner(int i, const SVec& u) const { return dotv(gvecs_[static_cast<size_t>(i)], u); }

    static I64 dotv(const SVec& a, const SVec& b) {
        I64 s = 0;
        for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
        return s;
    }

    /// Invariant profile: histogram of inner products against each small norm
    /// class. Equal profiles are a necessary condition for being related by an
    /// isometry (of this lattice or towards another one with equal theta data).
    const std::string& profile(int i) {
        std::string& p = profiles_[static_cast<size_t>(i)];
        if (!p.empty()) return p;
        p = "n" + std::to_string(norms_[static_cast<size_t>(i)]);
        for (I64 cls : profile_classes_) {
            std::map<I64, int> hist;
            for (int j : by_norm_.at(cls)) ++hist[inner(j, vecs_[static_cast<size_t>(i)])];
            p += "|" + std::to_string(cls) + ":";
            for (const auto& [val, cnt] : hist)
                p += std::to_string(val) + "x" + std::to_string(cnt) + ",";
        }
        return p;
    }

  private:
    int n_;
    Int bound_;
    SMat gram_;
    std::vector<SVec> vecs_, gvecs_;
    std::vector<I64> norms_;
    std::unordered_map<SVec, int, SVecHash> index_;
    std::map<I64, std::vector<int>> by_norm_;
    std::vector<std::string> profiles_;
    std::vector<I64> profile_classes_;
};

/// Depth-first completion search shared by the automorphism and isometry
/// engines. Levels fix target Gram row constraints; candidates come from a
/// VecEnv. Returns the first full assignment (in canonical candidate order)
/// that also passes the caller's acceptance test.
struct Backtracker {
    VecEnv* env;                       // candidate side
    const SMat* target;                // target Gram (n x n), row conventions below
    int n;
    // base candidate lists per level, already filtered by norm, profile and
    // any static constraints the caller applied
    std::vector<std::vector<int>> base_candidates;
    // full-assignment acceptance (e.g. integrality on the spanned overlattice)
    std::function<bool(const std::vector<SVec>&)> accept;

    /// images: preassigned rows (levels 0..start-1). Completes levels
    /// start..n-1 with dynamic pairwise constraints.
    bool complete(std::vector<SVec>& images, int start, int dynamic_from) const {
        if (start == n) return !accept || accept(images);
        const I64* trow = &(*target)[static_cast<size_t>(start) * n];
        for (int cand : base_candidates[static_cast<size_t>(start)]) {
            bool ok = true;
            for (int i = dynamic_from; i < start; ++i) {
                if (env->inner(cand, images[static_cast<size_t>(i)]) != trow[i]) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            images[static_cast<size_t>(start)] = env->vec(cand);
            if (complete(images, start + 1, dynamic_from)) return true;
        }
        return false;
    }
};

/// The search substrate of a lattice: the smallest-bound full-rank sublattice
/// S spanned by short vectors, LLL-reduced. Searching over S's basis keeps
/// candidate sets small even when L itself has no small basis (D_n^+ glue);
/// maps of S extend to the rational span uniquely and are accepted iff they
/// carry L to L integrally.
struct SpanContext {
    IntMat gram_s;  // reduced Gram of the search basis
    IntMat coords;  // rows of the search basis in L coordinates
    bool proper;    // search basis spans a proper sublattice of L
    IntMat scaled_inverse;  // detabs * coords^{-1}, integral
    Int detabs;             // |det(coords)| (= index of S in L)
};

/// Greedy shortest independent subset: rows in canonical short-vector order
/// that increase the rank, via fraction-free echelon reduction. Returns the
/// chosen rows once full rank is reached, empty otherwise.
inline IntMat greedy_independent(const std::vector<ShortVector>& reps, int r) {
    std::vector<IntVec> echelon;       // fraction-free row echelon accumulator
    std::vector<int> pivot_col;
    std::vector<IntVec> chosen;
    for (const auto& sv : reps) {
        IntVec v = sv.coords;
        for (size_t p = 0; p < echelon.size(); ++p) {
            Int pc = v[static_cast<size_t>(pivot_col[p])];
            if (pc == 0) continue;
            Int ec = echelon[p][static_cast<size_t>(pivot_col[p])];
            for (int j = 0; j < r; ++j)
                v[static_cast<size_t>(j)] = v[static_cast<size_t>(j)] * ec - echelon[p][static_cast<size_t>(j)] * pc;
        }
        int pc = -1;
        for (int j = 0; j < r; ++j)
            if (v[static_cast<size_t>(j)] != 0) { pc = j; break; }
        if (pc < 0) continue;
        echelon.push_back(std::move(v));
        pivot_col.push_back(pc);
        chosen.push_back(sv.coords);
        if (static_cast<int>(chosen.size()) == r) break;
    }
    if (static_cast<int>(chosen.size()) < r) return IntMat(0, 0);
    IntMat out(r, r);
    for (int i = 0; i < r; ++i) out.set_row(i, chosen[static_cast<size_t>(i)]);
    return out;
}

inline SpanContext span_context(const IntegerLattice& L) {
    const int r = L.rank();
    LllResult red0 = lll_reduce(L);
    Int maxdiag = 0;
    for (int i = 0; i < r; ++i) maxdiag = max(maxdiag, red0.lattice.gram()(i, i));
    SpanContext ctx;
    ctx.coords = red0.transform;
    ctx.gram_s = red0.lattice.gram();
    for (Int bound = 1; bound <= maxdiag; ++bound) {
        ShortVectorSet sv = short_vectors(L, bound);
        if (static_cast<int>(sv.reps.size()) < r) continue;
        IntMat rows = greedy_independent(sv.reps, r);
        if (rows.rows() == 0) continue;
        // prefer an LLL-reduced copy when it keeps all basis norms <= bound
        IntegerLattice s = lattice_from_coords(L, rows, 1);
        LllResult red = lll_reduce(s);
        Int redmax = 0;
        for (int i = 0; i < r; ++i) redmax = max(redmax, red.lattice.gram()(i, i));
        if (redmax <= bound) {
            ctx.coords = mul(red.transform, rows);
            ctx.gram_s = red.lattice.gram();
        } else {
            ctx.coords = rows;
            ctx.gram_s = s.gram();
        }
        break;
    }
    Int det = det_bareiss(ctx.coords);
    ctx.detabs = abs(det);
    ctx.proper = ctx.detabs != 1;
    RatMat inv = rat_inverse(to_rat(ctx.coords));
    ctx.scaled_inverse = IntMat(r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            Rat v = inv(i, j) * Rat(ctx.detabs);
            ensure(is_integer(v), "scaled inverse computation failed");
            ctx.scaled_inverse(i, j) = rat_num(v);
        }
    return ctx;
}

/// Conjugate a search-coordinate map W into L1/L2 coordinates:
/// U = coords1^{-1} * W * coords2, defined when the result is integral.
inline std::optional<IntMat> lift_map(const SpanContext& c1, const IntMat& w,
                                      const SpanContext& c2) {
    IntMat t = mul(mul(c1.scaled_inverse, w), c2.coords);
    for (int i = 0; i < t.rows(); ++i)
        for (int j = 0; j < t.cols(); ++j) {
            if (t(i, j) % c1.detabs != 0) return std::nullopt;
            t(i, j) /= c1.detabs;
        }
    return t;
}

}  // namespace detail

/// Full automorphism group with exact order. Generators satisfy
/// U * gram * U^T = gram exactly (asserted); determinism follows from the
/// canonical candidate order of the search.
inline IsometryGroup automorphism_group(const IntegerLattice& L) {
    using namespace detail;
    const int n = L.rank();
    SpanContext ctx = span_context(L);
    const IntMat& gred = ctx.gram_s;

    // process levels in ascending candidate-class size: tightest first
    Int maxdiag = 0;
    for (int i = 0; i < n; ++i) maxdiag = max(maxdiag, gred(i, i));
    {
        VecEnv env0(gred, maxdiag);
        std::vector<int> perm(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
        std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) {
            return env0.of_norm(to_i64(gred(a, a))).size() < env0.of_norm(to_i64(gred(b, b))).size();
        });
        IntMat p(n, n);
        for (int i = 0; i < n; ++i) p(i, perm[static_cast<size_t>(i)]) = 1;
        ctx.gram_s = mul(mul(p, ctx.gram_s), transpose(p));
        ctx.coords = mul(p, ctx.coords);
        ctx.scaled_inverse = mul(ctx.scaled_inverse, transpose(p));
    }
    const IntMat& gp = ctx.gram_s;
    VecEnv penv(gp, maxdiag);
    SMat gsmall = penv.gram();

    // unit coordinate vectors are the base points
    std::vector<int> unit_index(static_cast<size_t>(n));
    std::vector<std::string> unit_profile(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        SVec e(static_cast<size_t>(n), 0);
        e[static_cast<size_t>(i)] = 1;
        unit_index[static_cast<size_t>(i)] = penv.find(e);
        ensure(unit_index[static_cast<size_t>(i)] >= 0, "basis vector missing from enumeration");
        unit_profile[static_cast<size_t>(i)] = penv.profile(unit_index[static_cast<size_t>(i)]);
    }

    auto accept = [&](const std::vector<SVec>& images) {
        if (!ctx.proper) return true;
        IntMat w(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) w(i, j) = images[static_cast<size_t>(i)][static_cast<size_t>(j)];
        return lift_map(ctx, w, ctx).has_value();
    };

    std::vector<SMat> gens;
    std::vector<IntMat> gens_l;
    Int order = 1;
    for (int k = n - 1; k >= 0; --k) {
        // candidates for the image of e_k under the stabilizer of e_0..e_{k-1}
        std::vector<std::vector<int>> base(static_cast<size_t>(n));
        for (int j = k; j < n; ++j) {
            const I64* trow = &gsmall[static_cast<size_t>(j) * n];
            for (int cand : penv.of_norm(to_i64(gp(j, j)))) {
                bool ok = true;
                for (int i = 0; i < k; ++i)
                    if (penv.gvec(cand)[static_cast<size_t>(i)] != trow[i]) { ok = false; break; }
                if (ok && penv.profile(cand) == unit_profile[static_cast<size_t>(j)])
                    base[static_cast<size_t>(j)].push_back(cand);
            }
        }
        Backtracker bt{&penv, &gsmall, n, std::move(base), accept};

        std::unordered_set<int> orbit{unit_index[static_cast<size_t>(k)]};
        std::vector<int> frontier{unit_index[static_cast<size_t>(k)]};
        auto close_orbit = [&]() {
            while (!frontier.empty()) {
                int v = frontier.back();
                frontier.pop_back();
                for (const SMat& g : gens) {
                    SVec w = apply(penv.vec(v), g, n);
                    int wi = penv.find(w);
                    ensure(wi >= 0, "orbit left the enumerated vector set");
                    if (orbit.insert(wi).second) frontier.push_back(wi);
                }
            }
        };
        close_orbit();
        for (int cand : bt.base_candidates[static_cast<size_t>(k)]) {
            if (orbit.count(cand)) continue;
            std::vector<SVec> images(static_cast<size_t>(n));
            for (int i = 0; i < k; ++i) {
                SVec e(static_cast<size_t>(n), 0);
                e[static_cast<size_t>(i)] = 1;
                images[static_cast<size_t>(i)] = std::move(e);
            }
            images[static_cast<size_t>(k)] = penv.vec(cand);
            if (bt.complete(images, k + 1, k)) {
                SMat g(static_cast<size_t>(n) * n);
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        g[static_cast<size_t>(i) * n + j] = images[static_cast<size_t>(i)][static_cast<size_t>(j)];
                auto lifted = lift_map(ctx, to_big_mat(g, n), ctx);
                ensure(lifted.has_value(), "accepted generator must lift integrally");
                gens_l.push_back(std::move(*lifted));
                gens.push_back(std::move(g));
                orbit.insert(cand);
                // a new generator can move every known orbit point
                frontier.assign(orbit.begin(), orbit.end());
                close_orbit();
            }
        }
        order *= static_cast<int>(orbit.size());
    }

    IsometryGroup out{L, {}, order};
    for (const IntMat& u : gens_l) {
        ensure(mul(mul(u, L.gram()), transpose(u)) == L.gram(),
               "generator does not preserve the Gram matrix");
        out.generators.push_back(u);
    }
    return out;
}

namespace detail {

/// Backtracking isometry search without invariant prechecks; see is_isometric.
inline std::optional<IntMat> isometric_search(const IntegerLattice& L1, const IntegerLattice& L2) {
    using namespace detail;
    if (L1.rank() != L2.rank() || determinant(L1) != determinant(L2)) return std::nullopt;
    const int n = L1.rank();
    SpanContext c1 = span_context(L1), c2 = span_context(L2);
    if (c1.detabs != c2.detabs) return std::nullopt;  // index of the spanning sublattice
    Int bound = 0;
    for (int i = 0; i < n; ++i) {
        bound = max(bound, c1.gram_s(i, i));
        bound = max(bound, c2.gram_s(i, i));
    }
    VecEnv env1(c1.gram_s, bound);  // target side
    VecEnv env2(c2.gram_s, bound);  // candidate side
    {
        auto s1 = env1.class_sizes(), s2 = env2.class_sizes();
        if (s1 != s2) return std::nullopt;
    }

    // search rows u_j in side-2 vectors with (u_i, u_j)_{G2} = (G1)_{ij}
    SMat target = to_small_mat(c1.gram_s);
    std::vector<std::vector<int>> base(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
        SVec e(static_cast<size_t>(n), 0);
        e[static_cast<size_t>(j)] = 1;
        int ei = env1.find(e);
        ensure(ei >= 0, "basis vector missing from enumeration");
        const std::string& want = env1.profile(ei);
        for (int cand : env2.of_norm(to_i64(c1.gram_s(j, j))))
            if (env2.profile(cand) == want) base[static_cast<size_t>(j)].push_back(cand);
        if (base[static_cast<size_t>(j)].empty()) return std::nullopt;
    }
    std::optional<IntMat> lifted;
    auto accept = [&](const std::vector<SVec>& images) {
        IntMat w(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) w(i, j) = images[static_cast<size_t>(i)][static_cast<size_t>(j)];
        lifted = lift_map(c1, w, c2);
        return lifted.has_value();
    };
    Backtracker bt{&env2, &target, n, std::move(base), accept};
    std::vector<SVec> images(static_cast<size_t>(n));
    if (!bt.complete(images, 0, 0)) return std::nullopt;
    ensure(lifted.has_value(), "accepted isometry must lift integrally");
    IntMat u = std::move(*lifted);
    ensure(mul(mul(u, L2.gram()), transpose(u)) == L1.gram(), "isometry verification failed");
    return u;
}

}  // namespace detail

/// Isometry test: returns U with U * gram(L2) * U^T = gram(L1), or nullopt.
/// Fast invariant rejections run before the backtracking search.
inline std::optional<IntMat> is_isometric(const IntegerLattice& L1, const IntegerLattice& L2) {
    if (L1.rank() != L2.rank()) return std::nullopt;
    if (determinant(L1) != determinant(L2)) return std::nullopt;
    if (is_even(L1) != is_even(L2)) return std::nullopt;
    if (minimum_norm(L1) != minimum_norm(L2)) return std::nullopt;
    if (theta_prefix(L1, 4) != theta_prefix(L2, 4)) return std::nullopt;
    if (root_decomposition(L1) != root_decomposition(L2)) return std::nullopt;
    return detail::isometric_search(L1, L2);
}

struct OrbitPartition {
    struct Orbit {
        IntVec representative;  // minimal member under (norm, lex)
        Int norm;
        std::vector<int> members;  // indices into the domain
    };
    std::vector<IntVec> domain;
    std::vector<Orbit> orbits;
};

/// Orbits of G on a set of vectors (signs expanded, must be closed under G).
inline OrbitPartition orbits(const IsometryGroup& G, const std::vector<IntVec>& domain) {
    using namespace detail;
    const int n = G.lattice.rank();
    std::unordered_map<SVec, int, SVecHash> index;
    std::vector<SVec> small;
    small.reserve(domain.size());
    for (size_t i = 0; i < domain.size(); ++i) {
        small.push_back(to_small(domain[i]));
        index.emplace(small.back(), static_cast<int>(i));
    }
    std::vector<int> parent(domain.size());
    for (size_t i = 0; i < domain.size(); ++i) parent[i] = static_cast<int>(i);
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    std::vector<SMat> gens;
    for (const auto& g : G.generators) gens.push_back(to_small_mat(g));
    for (size_t i = 0; i < domain.size(); ++i)
        for (const auto& g : gens) {
            SVec w = apply(small[i], g, n);
            auto it = index.find(w);
            require(it != index.end(), "orbit domain is not closed under the group");
            int a = find(static_cast<int>(i)), b = find(it->second);
            if (a != b) parent[static_cast<size_t>(a)] = b;
        }
    std::map<int, std::vector<int>> buckets;
    for (size_t i = 0; i < domain.size(); ++i) buckets[find(static_cast<int>(i))].push_back(static_cast<int>(i));
    OrbitPartition out;
    out.domain = domain;
    for (auto& [root, members] : buckets) {
        (void)root;
        int best = members.front();
        Int bestnorm = norm_of(G.lattice, domain[static_cast<size_t>(best)]);
        for (int m : members) {
            Int nm = norm_of(G.lattice, domain[static_cast<size_t>(m)]);
            if (nm < bestnorm ||
                (nm == bestnorm && lex_less(domain[static_cast<size_t>(m)], domain[static_cast<size_t>(best)]))) {
                best = m;
                bestnorm = nm;
            }
        }
        out.orbits.push_back({domain[static_cast<size_t>(best)], bestnorm, members});
    }
    std::sort(out.orbits.begin(), out.orbits.end(), [](const auto& a, const auto& b) {
        if (a.norm != b.norm) return a.norm < b.norm;
        return lex_less(a.representative, b.representative);
    });
    return out;
}

namespace detail {

/// Deterministic Schreier-Sims stabilizer chain for matrix groups acting on
/// lattice coordinate rows. Base points: a forced prefix, extended by unit
/// vectors as needed.
class StabilizerChain {
  public:
    StabilizerChain(const IntegerLattice& L, const std::vector<IntMat>& gens,
                    const std::vector<IntVec>& forced_prefix)
        : n_(L.rank()) {
        for (const auto& v : forced_prefix) {
            require(static_cast<int>(v.size()) == n_, "base point length mismatch");
            base_.push_back(to_small(v));
        }
        levels_.resize(base_.size());
        for (const auto& g : gens) {
            IntMat gg = g;
            ensure(mul(mul(gg, L.gram()), transpose(gg)) == L.gram(),
                   "generator does not preserve the Gram matrix");
            assigned_.push_back({to_small_mat(g), 0});
        }
        rebuild_orbits_from(0);
        verify();
    }

    size_t prefix_levels(size_t count) const { return std::min(count, levels_.size()); }

    Int order_below(size_t level) const {
        Int o = 1;
        for (size_t i = level; i < levels_.size(); ++i) o *= static_cast<int>(levels_[i].points.size());
        return o;
    }

    Int order() const { return order_below(0); }

    /// Strong generators fixing base[0..level-1] pointwise.
    std::vector<IntMat> strong_generators_at(size_t level) const {
        std::vector<IntMat> out;
        for (const auto& [g, lvl] : assigned_)
            if (lvl >= level) out.push_back(to_big_mat(g, n_));
        return out;
    }

    const std::vector<SVec>& base() const { return base_; }

  private:
    struct Level {
        std::unordered_map<SVec, int, SVecHash> where;
        std::vector<SVec> points;
        std::vector<SMat> trans;  // base * trans[i] = points[i]
    };

    std::vector<SMat> gens_at(size_t level) const {
        std::vector<SMat> out;
        for (const auto& [g, lvl] : assigned_)
            if (lvl >= level) out.push_back(g);
        return out;
    }

    void rebuild_orbits_from(size_t level) {
        for (size_t i = level; i < levels_.size(); ++i) {
            Level& L = levels_[i];
            L.where.clear();
            L.points.clear();
            L.trans.clear();
            L.points.push_back(base_[i]);
            L.trans.push_back(small_identity(n_));
            L.where.emplace(base_[i], 0);
            auto gens = gens_at(i);
            for (size_t q = 0; q < L.points.size(); ++q)
                for (const auto& g : gens) {
                    SVec w = apply(L.points[q], g, n_);
                    if (L.where.emplace(w, static_cast<int>(L.points.size())).second) {
                        L.points.push_back(w);
                        L.trans.push_back(mul(L.trans[q], g, n_));
                    }
                }
        }
    }

    /// Sift h through levels >= from. Returns the level where the residue
    /// stops (= levels_.size() when it fixes every base point).
    std::pair<SMat, size_t> strip(SMat h, size_t from) const {
        for (size_t i = from; i < levels_.size(); ++i) {
            SVec w = apply(base_[i], h, n_);
            auto it = levels_[i].where.find(w);
            if (it == levels_[i].where.end()) return {std::move(h), i};
            h = mul(h, small_inverse(levels_[i].trans[static_cast<size_t>(it->second)], n_), n_);
        }
        return {std::move(h), levels_.size()};
    }

    void add_base_point_for(const SMat& g) {
        // first unit vector moved by g
        for (int i = 0; i < n_; ++i) {
            SVec e(static_cast<size_t>(n_), 0);
            e[static_cast<size_t>(i)] = 1;
            if (apply(e, g, n_) != e) {
                base_.push_back(std::move(e));
                levels_.resize(base_.size());
                return;
            }
        }
        throw internal_error("non-identity element fixes every unit vector");
    }

    void verify() {
        if (levels_.empty() && !assigned_.empty()) {
            // no forced prefix: seed the base from the first non-identity gen
            for (const auto& [g, lvl] : assigned_) {
                (void)lvl;
                if (!is_small_identity(g, n_)) { add_base_point_for(g); break; }
            }
            rebuild_orbits_from(0);
        }
        size_t i = levels_.size();
        while (i > 0) {
            size_t lvl = i - 1;
            bool clean = true;
            Level& L = levels_[lvl];
            auto gens = gens_at(lvl);
            for (size_t q = 0; q < L.points.size() && clean; ++q) {
                for (const auto& s : gens) {
                    SVec w = apply(L.points[q], s, n_);
                    auto it = L.where.find(w);
                    ensure(it != L.where.end(), "orbit closure incomplete");
                    SMat schreier =
                        mul(mul(L.trans[q], s, n_),
                            small_inverse(L.trans[static_cast<size_t>(it->second)], n_), n_);
                    if (is_small_identity(schreier, n_)) continue;
                    auto [res, at] = strip(std::move(schreier), lvl + 1);
                    if (at == levels_.size()) {
                        if (is_small_identity(res, n_)) continue;
                        add_base_point_for(res);
                    }
                    assigned_.push_back({std::move(res), at});
                    // the residue joins the generator sets of levels lvl+1..at
                    rebuild_orbits_from(lvl + 1);
                    i = at + 1;
                    clean = false;
                    break;
                }
            }
            if (clean) --i;
        }
    }

    int n_;
    std::vector<SVec> base_;
    std::vector<Level> levels_;
    std::vector<std::pair<SMat, size_t>> assigned_;  // generator, deepest level it fixes up to
};

}  // namespace detail

/// Order of the group generated by `gens`, by an independent Schreier-Sims
/// orbit-stabilizer chain (base points may be forced via `base_prefix`).
inline Int group_order_via_chain(const IntegerLattice& L, const std::vector<IntMat>& gens,
                                 const std::vector<IntVec>& base_prefix = {}) {
    detail::StabilizerChain chain(L, gens, base_prefix);
    return chain.order();
}

/// Pointwise stabilizer of the given vectors: generators and exact order via
/// a stabilizer chain whose base starts with the fixed vectors.
inline IsometryGroup pointwise_stabilizer(const IsometryGroup& G,
                                          const std::vector<LatticeVector>& fixed) {
    detail::StabilizerChain chain(G.lattice, G.generators, fixed);
    size_t cut = chain.prefix_levels(fixed.size());
    IsometryGroup out{G.lattice, chain.strong_generators_at(cut), chain.order_below(cut)};
    for (const auto& g : out.generators)
        for (const auto& v : fixed)
            ensure(mul(v, g) == v, "stabilizer generator moves a pinned vector");
    return out;
}

}  // namespace latkit

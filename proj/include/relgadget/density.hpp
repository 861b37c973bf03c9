#ifndef RELGADGET_DENSITY_HPP
#define RELGADGET_DENSITY_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "relgadget/gadget.hpp"
#include "relgadget/logic.hpp"

namespace relgadget {

// --- subdivided-clique detection ----------------------------------------------

struct CliqueWitness {
    std::vector<int> natives;                                // images of the clique vertices
    std::map<std::pair<int, int>, std::vector<int>> paths;   // (i<j) -> vertex sequence a_i..a_j
};

// A subgraph copy of K_n^r in G (injective homomorphism, not necessarily
// induced), decoded through the clique's label table.  The lexicographically
// least injective map wins.
inline std::optional<CliqueWitness> detect_subdivided_clique(const Structure& g, int n, int r) {
    require_graph(g);
    if (!is_undirected_graph(g)) throw Error(Err::NotUndirected, "detection host must be undirected");
    auto pattern = subdivided_clique(n, r);
    HomOptions opt;
    opt.injective = true;
    opt.limit = 1;
    auto homs = solve_mappings(pattern.structure, g, opt);
    if (homs.empty()) return std::nullopt;
    const Mapping& f = homs.front();
    CliqueWitness w;
    for (int i = 0; i < n; ++i) w.natives.push_back(f[i]);
    auto idx = pattern.table.index();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::vector<int> path{f[i]};
            for (int k = 0; k < r; ++k) path.push_back(f[idx.at(Tag::inner(i, j, k))]);
            path.push_back(f[j]);
            w.paths[{i, j}] = std::move(path);
        }
    return w;
}

// For each r <= max_r, the largest n <= max_n whose K_n^r embeds.
inline std::vector<int> density_profile(const Structure& g, int max_n, int max_r) {
    std::vector<int> out;
    for (int r = 0; r <= max_r; ++r) {
        int best = 0;
        for (int n = 1; n <= max_n; ++n) {
            if (!detect_subdivided_clique(g, n, r)) break;
            best = n;
        }
        out.push_back(best);
    }
    return out;
}

// --- canonical pair colourings --------------------------------------------------

// The set of canonical types (1: constant, 2: depends on the first index,
// 3: on the second, 4: on both) whose defining biconditional holds for all
// pairs of pairs i<j, k<l from n.
inline std::set<int> classify_canonical(int n, const std::map<std::pair<int, int>, int>& chi) {
    if (n < 3) throw Error(Err::TooSmall, "canonical classification needs n >= 3");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (!chi.count({i, j})) throw Error(Err::BadInput, "colouring misses a pair");
            pairs.push_back({i, j});
        }
    bool t1 = true, t2 = true, t3 = true, t4 = true;
    for (const auto& p : pairs)
        for (const auto& q : pairs) {
            const bool eq = chi.at(p) == chi.at(q);
            t1 &= eq;
            t2 &= eq == (p.first == q.first);
            t3 &= eq == (p.second == q.second);
            t4 &= eq == (p == q);
        }
    std::set<int> out;
    if (t1) out.insert(1);
    if (t2) out.insert(2);
    if (t3) out.insert(3);
    if (t4) out.insert(4);
    return out;
}

// --- compatible pairs ------------------------------------------------------------

using PairFunctions = std::map<std::pair<int, int>, std::vector<int>>;

namespace detail {

inline bool pairs_compatible(const std::vector<int>& f, const std::vector<int>& g) {
    for (int x : f)
        for (int y : g)
            if (x == y) return false;
    return true;
}

// Greedy chain: start {0,1}, repeatedly add the least index all
// of whose new pairs are compatible with everything already inside.
inline std::vector<int> greedy_compatible(int lambda, const PairFunctions& fs) {
    std::vector<int> x{0, 1};
    auto key = [](int i, int j) { return std::make_pair(std::min(i, j), std::max(i, j)); };
    for (int t = 2; t < lambda; ++t) {
        std::vector<std::pair<int, int>> all;
        for (size_t i = 0; i < x.size(); ++i)
            for (size_t j = i + 1; j < x.size(); ++j) all.push_back(key(x[i], x[j]));
        for (int k : x) all.push_back(key(k, t));
        bool ok = true;
        for (size_t i = 0; i < all.size() && ok; ++i)
            for (size_t j = i + 1; j < all.size() && ok; ++j)
                if (!pairs_compatible(fs.at(all[i]), fs.at(all[j]))) ok = false;
        if (ok) x.push_back(t);
    }
    return x;
}

} // namespace detail

// Greedy extraction of an index set on which all pairs are cross-compatible:
// f_{i,j}(x) != f_{k,l}(y) for all x, y and all distinct pairs over the
// result.  Requires the pointwise-distinctness hypothesis.
inline std::vector<int> compatible_subset(const PairFunctions& fs) {
    int lambda = 0;
    size_t len = 0;
    bool first = true;
    for (const auto& [pr, f] : fs) {
        if (pr.first < 0 || pr.first >= pr.second) throw Error(Err::BadInput, "pair keys need i < j");
        lambda = std::max(lambda, pr.second + 1);
        if (first) {
            len = f.size();
            first = false;
        } else if (f.size() != len) {
            throw Error(Err::BadInput, "functions have different domains");
        }
    }
    if (lambda < 2) throw Error(Err::BadInput, "need at least indices 0 and 1");
    for (int i = 0; i < lambda; ++i)
        for (int j = i + 1; j < lambda; ++j)
            if (!fs.count({i, j})) throw Error(Err::BadInput, "colouring misses a pair");
    // pointwise hypothesis
    for (const auto& [p, f] : fs)
        for (const auto& [q, g] : fs) {
            if (p == q) continue;
            for (size_t x = 0; x < len; ++x)
                if (f[x] == g[x])
                    throw Error(Err::HypothesisFailed, "functions agree pointwise on two pairs");
        }
    return detail::greedy_compatible(lambda, fs);
}

// --- glue compatibility check -----------------------------------------------

// The collision pattern the glue map needs: images of x under f_{(i,j)} and of
// y under f_{(k,l)} coincide exactly when the φ images coincide in the star
// over the transitive tournament on the indices.
inline bool injective_glue_check(const Gadget& m, const std::vector<int>& indices,
                                 const std::map<std::pair<int, int>, Mapping>& maps) {
    require_gadget(m);
    std::vector<std::pair<int, int>> pairs;
    for (size_t i = 0; i < indices.size(); ++i)
        for (size_t j = i + 1; j < indices.size(); ++j) {
            auto key = std::make_pair(indices[i], indices[j]);
            if (!maps.count(key)) return false;
            pairs.push_back(key);
        }
    for (const auto& pr : pairs) {
        const Mapping& f = maps.at(pr);
        if (static_cast<int>(f.size()) != m.carrier.size) return false;
        std::set<int> img(f.begin(), f.end());
        if (static_cast<int>(img.size()) != m.carrier.size) return false; // injective
    }
    for (const auto& p : pairs)
        for (const auto& q : pairs) {
            const Mapping& f = maps.at(p);
            const Mapping& g = maps.at(q);
            for (int x = 0; x < m.carrier.size; ++x)
                for (int y = 0; y < m.carrier.size; ++y) {
                    bool same_tag =
                        phi_tag(m, p.first, p.second, x) == phi_tag(m, q.first, q.second, y);
                    if ((f[x] == g[y]) != same_tag) return false;
                }
        }
    return true;
}

// --- the finite gadget miner ------------------------------------------------------

struct MinedGadget {
    Gadget gadget;               // unoriented: the path-type carrier with marks
    Gadget system;               // oriented copy; the arc graph is the joint path
    LPath path;                  // the representative path type
    int verified_m = 0;          // size of the index set passing the glue check
    std::vector<int> indices;    // the verified index set
    std::vector<std::string> stages;
};

namespace detail {

// pointed isomorphism: carrier iso respecting the path functions
inline std::optional<Mapping> pointed_iso(const LPath& a, const LPath& b) {
    if (a.p.size() != b.p.size()) return std::nullopt;
    if (a.carrier.size != b.carrier.size) return std::nullopt;
    HomOptions opt;
    opt.strong = true;
    opt.injective = true;
    for (size_t k = 0; k < a.p.size(); ++k) opt.pinned[a.p[k]] = b.p[k];
    HomSolver solver(a.carrier, b.carrier, opt);
    std::optional<Mapping> found;
    solver.run([&](const Mapping& f) {
        Mapping inv(b.carrier.size, -1);
        for (int i = 0; i < a.carrier.size; ++i) inv[f[i]] = i;
        if (is_homomorphism(inv, b.carrier, a.carrier, true)) {
            found = f;
            return false;
        }
        return true;
    });
    return found;
}

} // namespace detail

// Mines an ℒ-gadget out of a structure whose Gaifman graph contains K_n^r:
// detect a witness, extract a common path type, classify the sharing pattern
// of every non-joint element into P/A/B/H', shrink to a cross-compatible
// index set, verify the glue pattern, and orient the result along its path.
// On failure the stage log (when requested) names the stage that gave out.
inline std::optional<MinedGadget> mine_gadget(const Structure& n_struct, int n, int r,
                                              std::vector<std::string>* stages_out = nullptr) {
    MinedGadget result;
    auto stage = [&](const std::string& what) {
        result.stages.push_back(what);
        if (stages_out) stages_out->push_back(what);
    };
    auto give_up = [&](const std::string& why) {
        if (stages_out) stages_out->push_back(why);
        return std::nullopt;
    };

    if (n < 3) return give_up("need n >= 3 to classify");

    // 1: witness
    auto witness = detect_subdivided_clique(gaifman(n_struct), n, r);
    if (!witness) return give_up("stage 1: no subdivided-clique witness");
    stage("witness found");

    // 2: first path type per witness path; pairs whose path admits no type
    // (e.g. a route through a globally shared point that would have to reuse
    // a step) drop out here and cannot join any group
    std::map<std::pair<int, int>, PathType> types;
    for (const auto& [pr, gpath] : witness->paths) {
        auto ts = path_types(n_struct, gpath);
        if (!ts.empty()) types.emplace(pr, std::move(ts.front()));
    }
    if (types.empty()) return give_up("stage 2: no witness path admits a path type");
    stage("path types extracted");

    // 3: group by pointed isomorphism, keep the largest index set with all
    // of its pairs in one group
    std::vector<std::pair<int, int>> keys;
    for (const auto& [pr, t] : types) keys.push_back(pr);
    std::vector<int> group(keys.size(), -1);
    std::vector<int> reps;
    for (size_t i = 0; i < keys.size(); ++i) {
        for (size_t gi = 0; gi < reps.size(); ++gi)
            if (detail::pointed_iso(types.at(keys[reps[gi]]).path, types.at(keys[i]).path)) {
                group[i] = static_cast<int>(gi);
                break;
            }
        if (group[i] == -1) {
            group[i] = static_cast<int>(reps.size());
            reps.push_back(static_cast<int>(i));
        }
    }
    std::map<std::pair<int, int>, int> group_of;
    for (size_t i = 0; i < keys.size(); ++i) group_of[keys[i]] = group[i];
    int best_group = -1;
    std::vector<int> x0;
    for (size_t gi = 0; gi < reps.size(); ++gi) {
        // largest subset of indices whose pairs all lie in group gi
        std::vector<int> best_subset;
        for (int mask = 1; mask < (1 << n); ++mask) {
            std::vector<int> subset;
            for (int i = 0; i < n; ++i)
                if (mask & (1 << i)) subset.push_back(i);
            bool ok = true;
            for (size_t a = 0; a < subset.size() && ok; ++a)
                for (size_t b = a + 1; b < subset.size() && ok; ++b) {
                    auto it = group_of.find({subset[a], subset[b]});
                    if (it == group_of.end() || it->second != static_cast<int>(gi)) ok = false;
                }
            if (ok && subset.size() > best_subset.size()) best_subset = subset;
        }
        if (static_cast<int>(best_subset.size()) > static_cast<int>(x0.size())) {
            x0 = best_subset;
            best_group = static_cast<int>(gi);
        }
    }
    if (static_cast<int>(x0.size()) < 3) return give_up("stage 3: common-type index set below 3");
    const LPath& rep = types.at(keys[reps[best_group]]).path;
    stage("largest common type group kept");

    // 4: align the injective maps f_{i,j}: rep -> N along pointed isomorphisms
    std::map<std::pair<int, int>, Mapping> f;
    for (size_t a = 0; a < x0.size(); ++a)
        for (size_t b = a + 1; b < x0.size(); ++b) {
            auto key = std::make_pair(x0[a], x0[b]);
            const PathType& t = types.at(key);
            auto iso = detail::pointed_iso(rep, t.path);
            if (!iso) return give_up("stage 4: alignment isomorphism missing");
            Mapping fm(rep.carrier.size);
            for (int v = 0; v < rep.carrier.size; ++v) fm[v] = t.embedding[(*iso)[v]];
            f[key] = std::move(fm);
        }
    stage("maps aligned");

    // 5: classify non-joint elements by their sharing pattern
    std::set<int> joints(rep.p.begin(), rep.p.end());
    std::vector<int> a_marks, b_marks, p_marks, hprime;
    std::vector<std::pair<int, int>> x0_pairs;
    for (size_t a = 0; a < x0.size(); ++a)
        for (size_t b = a + 1; b < x0.size(); ++b) x0_pairs.push_back({x0[a], x0[b]});
    for (int x = 0; x < rep.carrier.size; ++x) {
        if (joints.count(x)) continue;
        bool t1 = true, t2 = true, t3 = true;
        for (const auto& p : x0_pairs)
            for (const auto& q : x0_pairs) {
                bool eq = f.at(p)[x] == f.at(q)[x];
                t1 &= eq;
                t2 &= eq == (p.first == q.first);
                t3 &= eq == (p.second == q.second);
            }
        if (t1) p_marks.push_back(x);
        else if (t2) a_marks.push_back(x);
        else if (t3) b_marks.push_back(x);
        else hprime.push_back(x);
    }
    stage("elements classified");

    // 6: shrink to a cross-compatible index set over interior joints and H'
    std::vector<int> probe;
    for (size_t k = 1; k + 1 < rep.p.size(); ++k) probe.push_back(rep.p[k]);
    probe.insert(probe.end(), hprime.begin(), hprime.end());
    std::map<int, int> rename; // actual index -> 0..|x0|-1
    for (size_t i = 0; i < x0.size(); ++i) rename[x0[i]] = static_cast<int>(i);
    PairFunctions fs;
    for (const auto& pr : x0_pairs) {
        std::vector<int> vals;
        for (int x : probe) vals.push_back(f.at(pr)[x]);
        fs[{rename[pr.first], rename[pr.second]}] = std::move(vals);
    }
    auto kept_positions = detail::greedy_compatible(static_cast<int>(x0.size()), fs);
    std::vector<int> x1;
    for (int pos : kept_positions) x1.push_back(x0[pos]);
    if (static_cast<int>(x1.size()) < 3) return give_up("stage 6: compatible index set below 3");
    stage("compatible index set extracted");

    // 7: glue-pattern verification, shrinking greedily on failure
    Gadget gadget = make_gadget(rep.carrier, rep.p.front(), rep.p.back(), a_marks, b_marks, p_marks);
    std::vector<int> xv = x1;
    while (static_cast<int>(xv.size()) >= 3) {
        std::map<std::pair<int, int>, Mapping> sub;
        for (size_t a = 0; a < xv.size(); ++a)
            for (size_t b = a + 1; b < xv.size(); ++b)
                sub[{xv[a], xv[b]}] = f.at({xv[a], xv[b]});
        if (injective_glue_check(gadget, xv, sub)) break;
        xv.pop_back();
    }
    if (static_cast<int>(xv.size()) < 3) return give_up("stage 7: glue pattern unverifiable on 3 indices");
    stage("glue pattern verified");

    // 8: orient along the path
    auto orient = orient_lpath(rep);
    Gadget system = make_gadget(orient.structure, rep.p.front(), rep.p.back(), a_marks, b_marks,
                                p_marks);
    if (!is_system(system)) return give_up("stage 8: oriented gadget is not a system");
    stage("oriented system built");

    result.gadget = std::move(gadget);
    result.system = std::move(system);
    result.path = rep;
    result.verified_m = static_cast<int>(xv.size());
    result.indices = std::move(xv);
    return result;
}

} // namespace relgadget

#endif

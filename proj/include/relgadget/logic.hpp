#ifndef RELGADGET_LOGIC_HPP
#define RELGADGET_LOGIC_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "relgadget/core.hpp"
#include "relgadget/hom.hpp"

namespace relgadget {

// --- primitive positive formulas as pointed structures -----------------------

// A pp formula, represented by its canonical structure and the tuple of free
// positions.  Free entries are distinct domain elements.
struct PPFormula {
    Structure canonical;
    std::vector<int> free;
};

inline PPFormula make_pp_formula(Structure canonical, std::vector<int> free) {
    require_valid(canonical);
    std::set<int> seen;
    for (int x : free) {
        if (x < 0 || x >= canonical.size)
            throw Error(Err::BadInput, "free variable out of range");
        if (!seen.insert(x).second)
            throw Error(Err::BadInput, "free tuple repeats a domain element");
    }
    return {std::move(canonical), std::move(free)};
}

// A ⊨ φ(ā) iff a pointed homomorphism (M_φ, x̄) -> (A, ā) exists.
inline bool pp_satisfies(const Structure& a, const Tuple& abar, const PPFormula& phi) {
    if (abar.size() != phi.free.size())
        throw Error(Err::ArityMismatch, "tuple length differs from the free tuple");
    HomOptions opt;
    for (size_t k = 0; k < abar.size(); ++k) {
        if (abar[k] < 0 || abar[k] >= a.size) throw Error(Err::BadInput, "tuple entry out of range");
        opt.pinned[phi.free[k]] = abar[k];
    }
    return hom_exists(phi.canonical, a, opt);
}

// One pointed sub-formula per connected component of Gaif(M_φ) minus the free
// points; each keeps the full free tuple.  A quantifier-free formula yields a
// single component carrying only the free part.
inline std::vector<PPFormula> pp_components(const PPFormula& phi) {
    const Structure& m = phi.canonical;
    Structure gaif = gaifman(m);
    std::vector<char> is_free(m.size, 0);
    for (int x : phi.free) is_free[x] = 1;
    std::vector<std::vector<int>> adj(m.size);
    for (const auto& t : gaif.tuples("E"))
        if (!is_free[t[0]] && !is_free[t[1]]) adj[t[0]].push_back(t[1]);
    std::vector<int> comp(m.size, -1);
    int ncomp = 0;
    for (int s = 0; s < m.size; ++s) {
        if (is_free[s] || comp[s] != -1) continue;
        std::vector<int> stack{s};
        comp[s] = ncomp;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v])
                if (comp[w] == -1) {
                    comp[w] = ncomp;
                    stack.push_back(w);
                }
        }
        ++ncomp;
    }
    std::vector<PPFormula> out;
    auto build = [&](const std::vector<int>& domain) {
        std::map<int, int> pos;
        for (size_t i = 0; i < domain.size(); ++i) pos[domain[i]] = static_cast<int>(i);
        Structure sub;
        sub.signature = m.signature;
        sub.size = static_cast<int>(domain.size());
        for (const auto& sym : m.signature.symbols) {
            TupleSet ts;
            for (const auto& t : m.tuples(sym.name)) {
                bool inside = true;
                for (int x : t)
                    if (!pos.count(x)) {
                        inside = false;
                        break;
                    }
                if (inside) {
                    Tuple img(t.size());
                    for (size_t k = 0; k < t.size(); ++k) img[k] = pos[t[k]];
                    ts.push_back(std::move(img));
                }
            }
            sort_unique(ts);
            sub.relations[sym.name] = std::move(ts);
        }
        std::vector<int> free2;
        for (int x : phi.free) free2.push_back(pos[x]);
        out.push_back({std::move(sub), std::move(free2)});
    };
    if (ncomp == 0) {
        std::vector<int> domain(phi.free.begin(), phi.free.end());
        std::sort(domain.begin(), domain.end());
        build(domain);
        return out;
    }
    for (int c = 0; c < ncomp; ++c) {
        std::vector<int> domain;
        for (int v = 0; v < m.size; ++v)
            if (comp[v] == c || is_free[v]) domain.push_back(v);
        build(domain);
    }
    return out;
}

// Direct satisfaction agrees with the conjunction of component-wise
// satisfactions; returns the agreement flag (the split is lossless, so this
// is always true).
inline bool pp_components_agree(const Structure& a, const Tuple& abar, const PPFormula& phi) {
    bool direct = pp_satisfies(a, abar, phi);
    bool all = true;
    for (const auto& gamma : pp_components(phi))
        if (!pp_satisfies(a, abar, gamma)) {
            all = false;
            break;
        }
    return direct == all;
}

// --- ℒ-paths ------------------------------------------------------------------

struct LPathStep {
    std::string rel;
    Tuple tuple;
    bool operator==(const LPathStep&) const = default;
};

// A structure whose related tuples chain along joints p(0), ..., p(n).
struct LPath {
    Structure carrier;
    std::vector<int> p;
    std::vector<LPathStep> steps;
};

namespace detail {

inline bool tuple_contains(const Tuple& t, int x) {
    return std::find(t.begin(), t.end(), x) != t.end();
}

// The four path clauses for a given step sequence.
inline bool lpath_clauses_hold(const Structure& m, const std::vector<int>& p,
                               const std::vector<LPathStep>& steps) {
    const int n = static_cast<int>(p.size()) - 1;
    if (n < 1 || static_cast<int>(steps.size()) != n) return false;
    // steps must be related tuples, each tuple under exactly one symbol,
    // and the steps must exhaust all related tuples
    std::map<Tuple, std::set<std::string>> by_tuple;
    size_t total = 0;
    for (const auto& [rel, ts] : m.relations)
        for (const auto& t : ts) {
            by_tuple[t].insert(rel);
            ++total;
        }
    for (const auto& [t, rels] : by_tuple)
        if (rels.size() > 1) return false;
    std::set<std::pair<std::string, Tuple>> used;
    for (const auto& st : steps) {
        if (!m.has_tuple(st.rel, st.tuple)) return false;
        used.insert({st.rel, st.tuple});
    }
    if (used.size() != total) return false;
    // joint membership
    for (int i = 1; i <= n; ++i) {
        const Tuple& e = steps[i - 1].tuple;
        if (!tuple_contains(e, p[i - 1]) || !tuple_contains(e, p[i])) return false;
    }
    if (n >= 2) {
        if (tuple_contains(steps[1].tuple, p[0])) return false;
        if (tuple_contains(steps[n - 2].tuple, p[n])) return false;
    }
    // the steps cover the whole domain
    std::vector<char> hit(m.size, 0);
    for (const auto& st : steps)
        for (int x : st.tuple) hit[x] = 1;
    for (char h : hit)
        if (!h) return false;
    return true;
}

} // namespace detail

// Recover the step decomposition witnessing that (M, p) is an ℒ-path; the
// lexicographically least decomposition (by symbol name, then tuple) wins.
inline std::optional<LPath> is_lpath(const Structure& m, const std::vector<int>& p) {
    require_valid(m);
    const int n = static_cast<int>(p.size()) - 1;
    if (n < 1) return std::nullopt;
    std::set<int> seen;
    for (int x : p) {
        if (x < 0 || x >= m.size) return std::nullopt;
        if (!seen.insert(x).second) return std::nullopt;
    }
    // all related (symbol, tuple) pairs in lexicographic order
    std::vector<LPathStep> all;
    for (const auto& [rel, ts] : m.relations)
        for (const auto& t : ts) all.push_back({rel, t});
    std::sort(all.begin(), all.end(), [](const LPathStep& a, const LPathStep& b) {
        return std::tie(a.rel, a.tuple) < std::tie(b.rel, b.tuple);
    });
    if (static_cast<int>(all.size()) > n) return std::nullopt;
    // candidates per position: steps containing both adjacent joints
    std::vector<std::vector<int>> cand(n);
    for (int i = 1; i <= n; ++i)
        for (size_t s = 0; s < all.size(); ++s)
            if (detail::tuple_contains(all[s].tuple, p[i - 1]) &&
                detail::tuple_contains(all[s].tuple, p[i]))
                cand[i - 1].push_back(static_cast<int>(s));
    std::vector<int> choice(n, -1);
    std::vector<LPathStep> steps(n);
    std::function<bool(int)> dfs = [&](int i) -> bool {
        if (i == n) {
            for (int k = 0; k < n; ++k) steps[k] = all[choice[k]];
            return detail::lpath_clauses_hold(m, p, steps);
        }
        for (int s : cand[i]) {
            choice[i] = s;
            if (dfs(i + 1)) return true;
        }
        choice[i] = -1;
        return false;
    };
    if (!dfs(0)) return std::nullopt;
    return LPath{m, p, steps};
}

// --- path types ---------------------------------------------------------------

struct PathType {
    LPath path;
    std::vector<int> embedding; // carrier element i is this element of N
};

// All ℒ-paths abstracting one relational realization of a Gaifman graph path,
// ordered by the (relation, witness tuple) choices in signature order, tuples
// lexicographic.  Choices whose structure violates a path clause are skipped.
inline std::vector<PathType> path_types(const Structure& n, const std::vector<int>& gpath) {
    require_valid(n);
    if (gpath.size() < 2) throw Error(Err::NotAGaifmanPath, "need at least one step");
    std::set<int> seen;
    for (int x : gpath) {
        if (x < 0 || x >= n.size) throw Error(Err::NotAGaifmanPath, "vertex out of range");
        if (!seen.insert(x).second) throw Error(Err::NotAGaifmanPath, "repeated vertex");
    }
    Structure gaif = gaifman(n);
    for (size_t i = 0; i + 1 < gpath.size(); ++i)
        if (!gaif.has_tuple("E", {gpath[i], gpath[i + 1]}))
            throw Error(Err::NotAGaifmanPath, "consecutive vertices not Gaifman-adjacent");

    const int steps = static_cast<int>(gpath.size()) - 1;
    std::vector<std::vector<LPathStep>> cand(steps);
    for (int i = 0; i < steps; ++i)
        for (const auto& sym : n.signature.symbols)
            for (const auto& t : n.tuples(sym.name))
                if (detail::tuple_contains(t, gpath[i]) && detail::tuple_contains(t, gpath[i + 1]))
                    cand[i].push_back({sym.name, t});

    std::vector<PathType> out;
    std::vector<int> choice(steps, 0);
    std::function<void(int)> rec = [&](int i) {
        if (i == steps) {
            std::set<int> elems(gpath.begin(), gpath.end());
            for (int k = 0; k < steps; ++k)
                for (int x : cand[k][choice[k]].tuple) elems.insert(x);
            std::vector<int> domain(elems.begin(), elems.end());
            std::map<int, int> pos;
            for (size_t d = 0; d < domain.size(); ++d) pos[domain[d]] = static_cast<int>(d);
            Structure carrier;
            carrier.signature = n.signature;
            carrier.size = static_cast<int>(domain.size());
            std::vector<LPathStep> st;
            for (int k = 0; k < steps; ++k) {
                const auto& c = cand[k][choice[k]];
                Tuple img(c.tuple.size());
                for (size_t q = 0; q < c.tuple.size(); ++q) img[q] = pos[c.tuple[q]];
                carrier.add(c.rel, img);
                st.push_back({c.rel, img});
            }
            carrier.normalize();
            std::vector<int> p2;
            for (int x : gpath) p2.push_back(pos[x]);
            if (detail::lpath_clauses_hold(carrier, p2, st))
                out.push_back({LPath{std::move(carrier), std::move(p2), std::move(st)}, domain});
            return;
        }
        for (size_t c = 0; c < cand[i].size(); ++c) {
            choice[i] = static_cast<int>(c);
            rec(i + 1);
        }
    };
    for (int i = 0; i < steps; ++i)
        if (cand[i].empty()) return out;
    rec(0);
    return out;
}

// --- orientation ----------------------------------------------------------------

struct Orientation {
    Structure structure;          // directed, same domain as the input carrier
    std::vector<Mapping> sigmas;  // per step, the applied position permutation
    PermutationWitness witness;
};

// Permute each step so that p(i-1), p(i) land in positions 0, 1, keeping the
// other entries in their original relative order.
inline Orientation orient_lpath(const LPath& path) {
    const int n = static_cast<int>(path.p.size()) - 1;
    Orientation out;
    out.structure.signature = path.carrier.signature;
    out.structure.size = path.carrier.size;
    out.structure.labels = path.carrier.labels;
    out.witness.bijection.resize(path.carrier.size);
    for (int i = 0; i < path.carrier.size; ++i) out.witness.bijection[i] = i;
    for (int i = 1; i <= n; ++i) {
        const auto& st = path.steps[i - 1];
        const Tuple& t = st.tuple;
        int idx0 = -1, idx1 = -1;
        for (size_t k = 0; k < t.size(); ++k) {
            if (idx0 == -1 && t[k] == path.p[i - 1]) idx0 = static_cast<int>(k);
            if (idx1 == -1 && t[k] == path.p[i]) idx1 = static_cast<int>(k);
        }
        if (idx0 < 0 || idx1 < 0)
            throw Error(Err::BadInput, "step does not contain its joints");
        Mapping perm{idx0, idx1};
        for (int k = 0; k < static_cast<int>(t.size()); ++k)
            if (k != idx0 && k != idx1) perm.push_back(k);
        out.structure.add(st.rel, apply_perm(perm, t));
        out.sigmas.push_back(perm);
        out.witness.sigma[st.rel][t] = perm;
    }
    out.structure.normalize();
    return out;
}

// --- interpretable categories ----------------------------------------------------

// Data of an interpretable category: a point object and, per relation symbol
// of the output signature, a relation object with its coordinate maps.
struct InterpretableSpec {
    Signature out_signature;
    Structure bullet;
    struct RelObject {
        Structure object;
        std::vector<Mapping> h; // coordinate homomorphisms bullet -> object
    };
    std::map<std::string, RelObject> relation_objects;
};

inline void require_interpretable(const InterpretableSpec& spec) {
    require_valid(spec.bullet);
    for (const auto& sym : spec.out_signature.symbols) {
        auto it = spec.relation_objects.find(sym.name);
        if (it == spec.relation_objects.end())
            throw Error(Err::BadInput, "missing relation object for " + sym.name);
        const auto& ro = it->second;
        require_valid(ro.object);
        if (static_cast<int>(ro.h.size()) != sym.arity)
            throw Error(Err::BadInput, "need one coordinate map per relation position");
        for (const auto& h : ro.h)
            if (!is_homomorphism(h, spec.bullet, ro.object))
                throw Error(Err::BadInput, "coordinate map is not a homomorphism");
    }
}

// M_• := Hom(•, M) with (f_0, ..., f_{n-1}) related iff some g: A_R -> M has
// f_i = g ∘ h_i for all i.  Hom(•, M) is enumerated lexicographically.
inline Structure reconstruct(const InterpretableSpec& spec, const Structure& m) {
    require_interpretable(spec);
    auto points = solve_mappings(spec.bullet, m);
    std::map<Mapping, int> pos;
    for (size_t i = 0; i < points.size(); ++i) pos[points[i]] = static_cast<int>(i);
    Structure out;
    out.signature = spec.out_signature;
    out.size = static_cast<int>(points.size());
    for (const auto& sym : spec.out_signature.symbols) {
        const auto& ro = spec.relation_objects.at(sym.name);
        TupleSet ts;
        for (const auto& g : solve_mappings(ro.object, m)) {
            Tuple t(sym.arity);
            bool ok = true;
            for (int i = 0; i < sym.arity && ok; ++i) {
                auto it = pos.find(compose_mappings(ro.h[i], g));
                if (it == pos.end()) ok = false;
                else t[i] = it->second;
            }
            if (ok) ts.push_back(std::move(t));
        }
        sort_unique(ts);
        out.relations[sym.name] = std::move(ts);
    }
    return out;
}

// The graph category's interpretation data: a free point and a free edge.
inline InterpretableSpec gra_spec() {
    InterpretableSpec spec;
    spec.out_signature = Signature::graph();
    spec.bullet = make_structure(Signature::graph(), 1);
    InterpretableSpec::RelObject edge;
    edge.object = make_graph(2, {{0, 1}});
    edge.h = {Mapping{0}, Mapping{1}};
    spec.relation_objects["E"] = std::move(edge);
    return spec;
}

} // namespace relgadget

#endif

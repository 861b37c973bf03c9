#ifndef RELGADGET_GADGET_HPP
#define RELGADGET_GADGET_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "relgadget/core.hpp"
#include "relgadget/hom.hpp"

namespace relgadget {

// An ℒ-gadget (M, α, β, A, B, P): a structure with distinguished entry and
// exit points and disjoint marked sharing sets.
struct Gadget {
    Structure carrier;
    int alpha = 0;
    int beta = 1;
    std::vector<int> A, B, P; // sorted, pairwise disjoint, avoid alpha/beta

    bool simple() const { return A.empty() && B.empty() && P.empty(); }
};

inline void require_gadget(const Gadget& g) {
    require_valid(g.carrier);
    auto in_range = [&](int x) { return x >= 0 && x < g.carrier.size; };
    if (!in_range(g.alpha) || !in_range(g.beta))
        throw Error(Err::BadInput, "gadget points out of range");
    if (g.alpha == g.beta) throw Error(Err::AlphaEqualsBeta, "alpha equals beta");
    std::set<int> seen{g.alpha, g.beta};
    for (const auto* marks : {&g.A, &g.B, &g.P})
        for (int x : *marks) {
            if (!in_range(x)) throw Error(Err::BadInput, "mark out of range");
            if (!seen.insert(x).second)
                throw Error(Err::OverlappingMarks, "marks overlap or meet alpha/beta");
        }
}

inline Gadget make_gadget(Structure carrier, int alpha, int beta, std::vector<int> a = {},
                          std::vector<int> b = {}, std::vector<int> p = {}) {
    auto norm = [](std::vector<int>& v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    norm(a);
    norm(b);
    norm(p);
    Gadget g{std::move(carrier), alpha, beta, std::move(a), std::move(b), std::move(p)};
    require_gadget(g);
    return g;
}

inline bool contains(const std::vector<int>& sorted, int x) {
    return std::binary_search(sorted.begin(), sorted.end(), x);
}

// Where φ_{(u,v)} sends carrier element x, as a provenance tag.
inline Tag phi_tag(const Gadget& m, int u, int v, int x) {
    if (x == m.alpha) return Tag::native(u);
    if (x == m.beta) return Tag::native(v);
    if (contains(m.P, x)) return Tag::shared(x);
    if (contains(m.A, x)) return Tag::apoint(u, x);
    if (contains(m.B, x)) return Tag::bpoint(v, x);
    return Tag::inner(u, v, x);
}

// Carrier elements outside {α,β} ∪ A ∪ B ∪ P: one copy per edge in G ⋆ M.
inline std::vector<int> gadget_rest(const Gadget& m) {
    std::vector<int> out;
    for (int x = 0; x < m.carrier.size; ++x)
        if (x != m.alpha && x != m.beta && !contains(m.A, x) && !contains(m.B, x) &&
            !contains(m.P, x))
            out.push_back(x);
    return out;
}

// G ⋆ M: one copy of the gadget glued along every edge of G.  Copies share
// A-points per source vertex, B-points per target vertex, and P globally.
// Domain order: natives, shared P, A-points by (source, element), B-points
// by (target, element), inner copies by (edge, element).
inline Labeled star(const Structure& g, const Gadget& m) {
    require_graph(g);
    require_gadget(m);
    auto edges = graph_edges(g);
    std::set<int> src_set, tgt_set;
    for (auto [u, v] : edges) {
        src_set.insert(u);
        tgt_set.insert(v);
    }
    auto rest = gadget_rest(m);

    Labeled out;
    auto& tags = out.table.tags;
    for (int i = 0; i < g.size; ++i) tags.push_back(Tag::native(i));
    for (int p : m.P) tags.push_back(Tag::shared(p));
    for (int u : src_set)
        for (int a : m.A) tags.push_back(Tag::apoint(u, a));
    for (int v : tgt_set)
        for (int b : m.B) tags.push_back(Tag::bpoint(v, b));
    for (auto [u, v] : edges)
        for (int c : rest) tags.push_back(Tag::inner(u, v, c));

    auto index = out.table.index();
    Structure s;
    s.signature = m.carrier.signature;
    s.size = static_cast<int>(tags.size());
    for (const auto& sym : s.signature.symbols) {
        TupleSet ts;
        for (const auto& t : m.carrier.tuples(sym.name))
            for (auto [u, v] : edges) {
                Tuple img(t.size());
                for (size_t k = 0; k < t.size(); ++k) img[k] = index.at(phi_tag(m, u, v, t[k]));
                ts.push_back(std::move(img));
            }
        sort_unique(ts);
        s.relations[sym.name] = std::move(ts);
    }
    s.labels = out.table.names();
    out.structure = std::move(s);
    return out;
}

inline Mapping phi_mapping(const Gadget& m, const std::map<Tag, int>& star_index, int u, int v) {
    Mapping f(m.carrier.size);
    for (int x = 0; x < m.carrier.size; ++x) f[x] = star_index.at(phi_tag(m, u, v, x));
    return f;
}

// φ^{G,M}_{(u,v)}: the canonical copy of the gadget carrier inside G ⋆ M.
inline Hom phi(const Structure& g, const Gadget& m, int u, int v) {
    require_graph(g);
    if (!g.has_tuple("E", {u, v})) throw Error(Err::EdgeAbsent, "phi on a missing edge");
    auto st = star(g, m);
    auto index = st.table.index();
    return {std::make_shared<const Structure>(m.carrier),
            std::make_shared<const Structure>(st.structure), phi_mapping(m, index, u, v)};
}

// --- gadget homomorphisms ----------------------------------------------------

inline bool is_gadget_hom(const Mapping& rho, const Gadget& m, const Gadget& n) {
    if (!is_homomorphism(rho, m.carrier, n.carrier)) return false;
    if (rho[m.alpha] != n.alpha || rho[m.beta] != n.beta) return false;
    for (int a : m.A)
        if (!contains(n.A, rho[a])) return false;
    for (int b : m.B)
        if (!contains(n.B, rho[b])) return false;
    for (int p : m.P)
        if (!contains(n.P, rho[p])) return false;
    return true;
}

inline std::vector<Mapping> gadget_homs(const Gadget& m, const Gadget& n) {
    HomOptions opt;
    opt.pinned = {{m.alpha, n.alpha}, {m.beta, n.beta}};
    std::vector<Mapping> out;
    for (auto& f : solve_mappings(m.carrier, n.carrier, opt))
        if (is_gadget_hom(f, m, n)) out.push_back(std::move(f));
    return out;
}

// --- the three morphism actions of ⋆ ----------------------------------------

// f ⋆ M on the domain tags, writing into the target star's index.
inline Mapping star_graph_hom_mapping(const Mapping& f, const LabelTable& src_tags,
                                      const std::map<Tag, int>& dst_index) {
    Mapping out(src_tags.tags.size());
    for (size_t i = 0; i < src_tags.tags.size(); ++i) {
        const Tag& t = src_tags.tags[i];
        Tag img;
        switch (t.kind) {
            case TagKind::Native: img = Tag::native(f[t.a]); break;
            case TagKind::Shared: img = t; break;
            case TagKind::APoint: img = Tag::apoint(f[t.a], t.b); break;
            case TagKind::BPoint: img = Tag::bpoint(f[t.a], t.b); break;
            case TagKind::Inner: img = Tag::inner(f[t.a], f[t.b], t.c); break;
            default: throw Error(Err::BadInput, "star of an untagged element");
        }
        out[i] = dst_index.at(img);
    }
    return out;
}

inline Hom star_graph_hom(const Mapping& f, const Structure& g, const Structure& h,
                          const Gadget& m) {
    require_graph(g);
    require_graph(h);
    if (!is_homomorphism(f, g, h)) throw Error(Err::NotAHom, "f is not a graph homomorphism");
    auto sg = star(g, m);
    auto sh = star(h, m);
    auto idx = sh.table.index();
    return {std::make_shared<const Structure>(sg.structure),
            std::make_shared<const Structure>(sh.structure),
            star_graph_hom_mapping(f, sg.table, idx)};
}

// G ⋆ ρ.  Inner copies are routed through φ of the target gadget, so gadget
// homomorphisms that move an inner element onto α, β or a mark stay total.
inline Mapping star_gadget_hom_mapping(const Mapping& rho, const Gadget& n,
                                       const LabelTable& src_tags,
                                       const std::map<Tag, int>& dst_index) {
    Mapping out(src_tags.tags.size());
    for (size_t i = 0; i < src_tags.tags.size(); ++i) {
        const Tag& t = src_tags.tags[i];
        Tag img;
        switch (t.kind) {
            case TagKind::Native: img = t; break;
            case TagKind::Shared: img = phi_tag(n, -1, -1, rho[t.a]); break;
            case TagKind::APoint: img = phi_tag(n, t.a, -1, rho[t.b]); break;
            case TagKind::BPoint: img = phi_tag(n, -1, t.a, rho[t.b]); break;
            case TagKind::Inner: img = phi_tag(n, t.a, t.b, rho[t.c]); break;
            default: throw Error(Err::BadInput, "star of an untagged element");
        }
        out[i] = dst_index.at(img);
    }
    return out;
}

inline Hom star_gadget_hom(const Structure& g, const Gadget& m, const Gadget& n,
                           const Mapping& rho) {
    if (!is_gadget_hom(rho, m, n))
        throw Error(Err::NotAGadgetHom, "rho is not a gadget homomorphism");
    auto sm = star(g, m);
    auto sn = star(g, n);
    auto idx = sn.table.index();
    return {std::make_shared<const Structure>(sm.structure),
            std::make_shared<const Structure>(sn.structure),
            star_gadget_hom_mapping(rho, n, sm.table, idx)};
}

// f ⋆ ρ: the combined action; equals either composition of one-sided actions.
inline Mapping star_bi_mapping(const Mapping& f, const Mapping& rho, const Gadget& n,
                               const LabelTable& src_tags, const std::map<Tag, int>& dst_index) {
    Mapping out(src_tags.tags.size());
    for (size_t i = 0; i < src_tags.tags.size(); ++i) {
        const Tag& t = src_tags.tags[i];
        Tag img;
        switch (t.kind) {
            case TagKind::Native: img = Tag::native(f[t.a]); break;
            case TagKind::Shared: img = phi_tag(n, -1, -1, rho[t.a]); break;
            case TagKind::APoint: img = phi_tag(n, f[t.a], -1, rho[t.b]); break;
            case TagKind::BPoint: img = phi_tag(n, -1, f[t.a], rho[t.b]); break;
            case TagKind::Inner: img = phi_tag(n, f[t.a], f[t.b], rho[t.c]); break;
            default: throw Error(Err::BadInput, "star of an untagged element");
        }
        out[i] = dst_index.at(img);
    }
    return out;
}

inline Hom star_bi(const Mapping& f, const Structure& g, const Structure& h, const Gadget& m,
                   const Gadget& n, const Mapping& rho) {
    require_graph(g);
    require_graph(h);
    if (!is_homomorphism(f, g, h)) throw Error(Err::NotAHom, "f is not a graph homomorphism");
    if (!is_gadget_hom(rho, m, n))
        throw Error(Err::NotAGadgetHom, "rho is not a gadget homomorphism");
    auto sm = star(g, m);
    auto sn = star(h, n);
    auto idx = sn.table.index();
    return {std::make_shared<const Structure>(sm.structure),
            std::make_shared<const Structure>(sn.structure),
            star_bi_mapping(f, rho, n, sm.table, idx)};
}

// --- ⊛ and fixed gadgets -----------------------------------------------------

struct LabeledGadget {
    Gadget gadget;
    LabelTable table;
};

// H ⊛ M for a simple graph gadget (H, s, t): the star H ⋆ M re-equipped with
// s, t as entry/exit, A-points at s, B-points at t, and the shared P.
inline LabeledGadget ostar(const Gadget& h, const Gadget& m) {
    if (!is_graph(h.carrier)) throw Error(Err::NotAGraph, "ostar needs a graph gadget");
    if (!h.simple()) throw Error(Err::NotSimple, "ostar needs a simple graph gadget");
    auto st = star(h.carrier, m);
    auto idx = st.table.index();
    std::vector<int> a2, b2, p2;
    for (int a : m.A) {
        auto it = idx.find(Tag::apoint(h.alpha, a));
        if (it == idx.end())
            throw Error(Err::BadInput, "ostar: s is not an edge source but A is nonempty");
        a2.push_back(it->second);
    }
    for (int b : m.B) {
        auto it = idx.find(Tag::bpoint(h.beta, b));
        if (it == idx.end())
            throw Error(Err::BadInput, "ostar: t is not an edge target but B is nonempty");
        b2.push_back(it->second);
    }
    for (int p : m.P) p2.push_back(idx.at(Tag::shared(p)));
    return {make_gadget(st.structure, idx.at(Tag::native(h.alpha)), idx.at(Tag::native(h.beta)),
                        std::move(a2), std::move(b2), std::move(p2)),
            st.table};
}

// The fixed rigid graph ℋ on vertices s, v0, v1, v2, t (indices 0..4).
inline Structure h_graph() {
    return make_graph(5, {{0, 1}, {1, 2}, {4, 2}, {3, 0}, {3, 2}, {3, 4}},
                      {"s", "v0", "v1", "v2", "t"});
}

inline Gadget h_gadget() { return make_gadget(h_graph(), 0, 4); }

// Simple gadget on a directed path with r+1 edges from alpha to beta.
inline Gadget path_gadget(int r) {
    if (r < 0) throw Error(Err::BadInput, "path_gadget needs r >= 0");
    return make_gadget(directed_path_graph(r + 1), 0, r + 1);
}

// --- associativity -----------------------------------------------------------

// Witness for (G ⋆ H) ⋆ M ≅ G ⋆ (H ⊛ M).  Requires s to occur as a source
// and t as a target of E(H).
inline Hom assoc_check(const Structure& g, const Gadget& h, const Gadget& m) {
    require_graph(g);
    if (!is_graph(h.carrier) || !h.simple())
        throw Error(Err::NotSimple, "assoc_check needs a simple graph gadget");
    bool s_src = false, t_tgt = false;
    for (auto [u, v] : graph_edges(h.carrier)) {
        s_src |= u == h.alpha;
        t_tgt |= v == h.beta;
    }
    if (!s_src || !t_tgt)
        throw Error(Err::HypothesisFailed, "s must be a source and t a target of E(H)");
    Structure left = star(star(g, h).structure, m).structure;
    Structure right = star(g, ostar(h, m).gadget).structure;
    auto iso = first_isomorphism_mapping(left, right);
    if (!iso) throw Error(Err::NoIsoFound, "no isomorphism found; implementation bug");
    return {std::make_shared<const Structure>(std::move(left)),
            std::make_shared<const Structure>(std::move(right)), std::move(*iso)};
}

// --- full-embedding verification ---------------------------------------------

struct FullEmbeddingObject {
    long long homs_into_star = 0;
    long long phi_count = 0;
    bool only_phis = false;
};

struct FullEmbeddingPair {
    long long graph_homs = 0;
    long long star_homs = 0;
    bool injective = false;
    bool surjective = false;
};

struct FullEmbeddingReport {
    std::vector<FullEmbeddingObject> objects;
    std::map<std::pair<int, int>, FullEmbeddingPair> pairs;
    bool condition2 = true; // the φ maps are the only morphisms M -> G ⋆ M
    bool faithful = true;
    bool full = true;
    bool ok() const { return condition2 && faithful && full; }
};

// Checks, on a finite set of graphs, the full-embedding property of
// Φ = - ⋆ M: per graph, that the φ maps are the
// only homomorphisms M -> G ⋆ M; per ordered pair, that f ↦ f ⋆ M is a
// bijection Hom(G,H) -> Hom(G ⋆ M, H ⋆ M).
inline FullEmbeddingReport verify_full_embedding(const Gadget& m,
                                                 const std::vector<Structure>& graphs) {
    require_gadget(m);
    for (const auto& g : graphs) {
        require_graph(g);
        if (has_isolated_points(g))
            throw Error(Err::IsolatedPoint, "full embedding needs graphs without isolated points");
    }
    std::vector<Labeled> stars;
    std::vector<std::map<Tag, int>> indices;
    for (const auto& g : graphs) {
        stars.push_back(star(g, m));
        indices.push_back(stars.back().table.index());
    }
    FullEmbeddingReport rep;
    for (size_t i = 0; i < graphs.size(); ++i) {
        FullEmbeddingObject obj;
        std::set<Mapping> phis;
        for (auto [u, v] : graph_edges(graphs[i]))
            phis.insert(phi_mapping(m, indices[i], u, v));
        auto homs = solve_mappings(m.carrier, stars[i].structure);
        obj.homs_into_star = static_cast<long long>(homs.size());
        obj.phi_count = static_cast<long long>(phis.size());
        obj.only_phis = std::set<Mapping>(homs.begin(), homs.end()) == phis;
        rep.condition2 = rep.condition2 && obj.only_phis;
        rep.objects.push_back(obj);
    }
    for (size_t i = 0; i < graphs.size(); ++i)
        for (size_t j = 0; j < graphs.size(); ++j) {
            FullEmbeddingPair pr;
            auto graph_homs = solve_mappings(graphs[i], graphs[j]);
            pr.graph_homs = static_cast<long long>(graph_homs.size());
            std::set<Mapping> image;
            for (const auto& f : graph_homs)
                image.insert(star_graph_hom_mapping(f, stars[i].table, indices[j]));
            auto star_homs = solve_mappings(stars[i].structure, stars[j].structure);
            pr.star_homs = static_cast<long long>(star_homs.size());
            pr.injective = static_cast<long long>(image.size()) == pr.graph_homs;
            pr.surjective = true;
            for (const auto& h : star_homs)
                if (!image.count(h)) {
                    pr.surjective = false;
                    break;
                }
            rep.faithful = rep.faithful && pr.injective;
            rep.full = rep.full && pr.surjective;
            rep.pairs[{static_cast<int>(i), static_cast<int>(j)}] = pr;
        }
    return rep;
}

// --- systems and the universal construction ----------------------------------

inline bool is_system(const Gadget& m) {
    if (!is_directed(m.carrier)) return false;
    auto v = arc_vertex_set(m.carrier);
    if (!std::binary_search(v.begin(), v.end(), m.alpha)) return false;
    if (!std::binary_search(v.begin(), v.end(), m.beta)) return false;
    for (const auto* marks : {&m.A, &m.B, &m.P})
        for (int x : *marks)
            if (std::binary_search(v.begin(), v.end(), x)) return false;
    return true;
}

inline void require_system(const Gadget& m) {
    require_gadget(m);
    if (!is_system(m))
        throw Error(Err::NotASystem,
                    "need a directed carrier with alpha/beta in the arc graph and marks outside");
}

struct ArcGadget {
    Gadget gadget;             // the arc graph as a simple gadget
    std::vector<int> vertices; // arc vertex i corresponds to this carrier element
};

inline ArcGadget arc_gadget(const Gadget& m) {
    require_system(m);
    auto arc = arc_graph(m.carrier);
    auto pos = [&](int x) {
        return static_cast<int>(std::lower_bound(arc.vertices.begin(), arc.vertices.end(), x) -
                                arc.vertices.begin());
    };
    return {make_gadget(arc.graph, pos(m.alpha), pos(m.beta)), arc.vertices};
}

// True when the arc graph is a single directed path alpha -> ... -> beta.
inline bool arc_is_path(const Gadget& m) {
    if (!is_system(m)) return false;
    auto arc = arc_graph(m.carrier);
    const auto& g = arc.graph;
    int n = g.size;
    std::vector<int> out(n, -1), indeg(n, 0);
    for (auto [u, v] : graph_edges(g)) {
        if (out[u] != -1) return false;
        out[u] = v;
        ++indeg[v];
    }
    auto pos = [&](int x) {
        return static_cast<int>(std::lower_bound(arc.vertices.begin(), arc.vertices.end(), x) -
                                arc.vertices.begin());
    };
    int cur = pos(m.alpha);
    if (indeg[cur] != 0) return false;
    std::vector<char> seen(n, 0);
    int visited = 0;
    while (cur != -1 && !seen[cur]) {
        seen[cur] = 1;
        ++visited;
        if (indeg[cur] > 1) return false;
        cur = out[cur];
    }
    if (cur != -1) return false; // ran into a repeat: a cycle
    return visited == n && seen[pos(m.beta)] && out[pos(m.beta)] == -1;
}

// Number of edges of the arc path.
inline int arc_path_length(const Gadget& m) {
    return static_cast<int>(arc_graph(m.carrier).graph.tuples("E").size());
}

// Φ(G) = G ⋆ (ℋ ⊛ M) for a system M whose arc graph is a path α -> ... -> β.
inline Labeled universal_apply(const Structure& g, const Gadget& m) {
    require_graph(g);
    if (!is_directed_graph(g)) throw Error(Err::NotDirected, "universal_apply needs a digraph");
    require_system(m);
    if (!arc_is_path(m))
        throw Error(Err::ArcNotAPath, "universal_apply needs an arc path from alpha to beta");
    return star(g, ostar(h_gadget(), m).gadget);
}

} // namespace relgadget

#endif

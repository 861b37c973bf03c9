#ifndef RELGADGET_CORE_HPP
#define RELGADGET_CORE_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <utility>
#include <vector>

#include "relgadget/structure.hpp"

namespace relgadget {

// --- graphs ({E:2} structures) ---------------------------------------------

inline bool is_graph(const Structure& s) { return s.signature == Signature::graph(); }

inline void require_graph(const Structure& s) {
    if (!is_graph(s)) throw Error(Err::NotAGraph, "expected a structure over {E:2}");
}

inline Structure make_graph(int n, const std::vector<std::pair<int, int>>& edges,
                            std::vector<std::string> labels = {}) {
    Structure g;
    g.signature = Signature::graph();
    g.size = n;
    g.labels = std::move(labels);
    for (auto [u, v] : edges) g.add("E", {u, v});
    g.normalize();
    require_valid(g);
    return g;
}

inline std::vector<std::pair<int, int>> graph_edges(const Structure& g) {
    std::vector<std::pair<int, int>> out;
    for (const auto& t : g.tuples("E")) out.emplace_back(t[0], t[1]);
    return out;
}

inline bool is_undirected_graph(const Structure& g) {
    if (!is_graph(g)) return false;
    for (const auto& t : g.tuples("E")) {
        if (t[0] == t[1]) return false;
        if (!g.has_tuple("E", {t[1], t[0]})) return false;
    }
    return true;
}

inline bool is_directed_graph(const Structure& g) {
    if (!is_graph(g)) return false;
    for (const auto& t : g.tuples("E")) {
        if (t[0] == t[1]) return false;
        if (g.has_tuple("E", {t[1], t[0]})) return false;
    }
    return true;
}

inline Structure complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) edges.emplace_back(u, v);
    return make_graph(n, edges);
}

// Directed path with `length` edges: 0 -> 1 -> ... -> length.
inline Structure directed_path_graph(int length) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < length; ++i) edges.emplace_back(i, i + 1);
    return make_graph(length + 1, edges);
}

inline Structure directed_cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return make_graph(n, edges);
}

inline Structure undirected_cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        edges.emplace_back(i, (i + 1) % n);
        edges.emplace_back((i + 1) % n, i);
    }
    return make_graph(n, edges);
}

inline Structure single_edge_graph() { return make_graph(2, {{0, 1}}); }

// Undirected edges as unordered pairs (u < v), each listed once.
inline std::vector<std::pair<int, int>> undirected_edge_list(const Structure& g) {
    std::set<std::pair<int, int>> seen;
    for (const auto& t : g.tuples("E"))
        if (t[0] != t[1]) seen.insert({std::min(t[0], t[1]), std::max(t[0], t[1])});
    return {seen.begin(), seen.end()};
}

// --- Gaifman graph and isolation -------------------------------------------

// Undirected graph joining x != y whenever they co-occur in some tuple.
// Tuples with a repeated element contribute no loop.
inline Structure gaifman(const Structure& m) {
    Structure g;
    g.signature = Signature::graph();
    g.size = m.size;
    g.labels = m.labels;
    auto& es = g.relations["E"];
    for (const auto& [rel, ts] : m.relations) {
        for (const auto& t : ts)
            for (size_t i = 0; i < t.size(); ++i)
                for (size_t j = i + 1; j < t.size(); ++j)
                    if (t[i] != t[j]) {
                        es.push_back({t[i], t[j]});
                        es.push_back({t[j], t[i]});
                    }
    }
    g.normalize();
    return g;
}

// Elements that appear in no tuple of any relation.
inline std::vector<int> isolated_points(const Structure& m) {
    std::vector<char> hit(m.size, 0);
    for (const auto& [rel, ts] : m.relations)
        for (const auto& t : ts)
            for (int x : t) hit[x] = 1;
    std::vector<int> out;
    for (int i = 0; i < m.size; ++i)
        if (!hit[i]) out.push_back(i);
    return out;
}

inline bool has_isolated_points(const Structure& m) { return !isolated_points(m).empty(); }

// --- directed structures and arc graphs ------------------------------------

// Elements occurring in the first two coordinates of any tuple.
inline std::vector<int> arc_vertex_set(const Structure& m) {
    std::set<int> v;
    for (const auto& [rel, ts] : m.relations)
        for (const auto& t : ts) {
            v.insert(t[0]);
            if (t.size() >= 2) v.insert(t[1]);
        }
    return {v.begin(), v.end()};
}

// A structure is directed when each unordered pair of arc vertices is spanned
// (in the first two coordinates, either way round) by at most one tuple of at
// most one relation, and no tuple starts with a repeated element.
inline bool is_directed(const Structure& m) {
    std::map<std::pair<int, int>, int> span;
    for (const auto& [rel, ts] : m.relations)
        for (const auto& t : ts) {
            if (t.size() < 2) continue;
            if (t[0] == t[1]) return false;
            auto key = std::minmax(t[0], t[1]);
            if (++span[{key.first, key.second}] > 1) return false;
        }
    return true;
}

struct ArcGraph {
    Structure graph;           // directed graph on 0..|vertices|-1
    std::vector<int> vertices; // vertices[i] = element of the source structure
};

inline ArcGraph arc_graph(const Structure& m) {
    if (!is_directed(m)) throw Error(Err::NotDirected, "arc graph of a non-directed structure");
    ArcGraph out;
    out.vertices = arc_vertex_set(m);
    std::map<int, int> pos;
    for (size_t i = 0; i < out.vertices.size(); ++i) pos[out.vertices[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (const auto& [rel, ts] : m.relations)
        for (const auto& t : ts)
            if (t.size() >= 2) edges.emplace_back(pos[t[0]], pos[t[1]]);
    std::vector<std::string> labels;
    if (!m.labels.empty())
        for (int v : out.vertices) labels.push_back(m.labels[v]);
    out.graph = make_graph(static_cast<int>(out.vertices.size()), edges, std::move(labels));
    return out;
}

// --- subdivision ------------------------------------------------------------

enum class SubdivideMode { Undirected, Directed };

// Replace each edge by a path of length r+1.  Natives keep their indices;
// the r new points of each edge follow, edges in lexicographic order,
// ordered along the path from the smaller endpoint (undirected) or the
// source (directed).
inline Labeled subdivide(const Structure& g, int r, SubdivideMode mode) {
    require_graph(g);
    if (r < 0) throw Error(Err::BadInput, "negative subdivision depth");
    const bool undirected = mode == SubdivideMode::Undirected;
    if (undirected && !is_undirected_graph(g))
        throw Error(Err::ModeMismatch, "undirected subdivision of a non-undirected graph");
    if (!undirected && !is_directed_graph(g))
        throw Error(Err::ModeMismatch, "directed subdivision of a non-directed graph");

    std::vector<std::pair<int, int>> base =
        undirected ? undirected_edge_list(g) : graph_edges(g);

    Labeled out;
    for (int i = 0; i < g.size; ++i) out.table.tags.push_back(Tag::native(i));
    std::vector<std::pair<int, int>> edges;
    int next = g.size;
    for (auto [u, v] : base) {
        std::vector<int> path{u};
        for (int k = 0; k < r; ++k) {
            out.table.tags.push_back(Tag::inner(u, v, k));
            path.push_back(next++);
        }
        path.push_back(v);
        for (size_t k = 0; k + 1 < path.size(); ++k) {
            edges.emplace_back(path[k], path[k + 1]);
            if (undirected) edges.emplace_back(path[k + 1], path[k]);
        }
    }
    std::vector<std::string> labels;
    if (!g.labels.empty()) {
        labels = g.labels;
        for (int i = g.size; i < next; ++i) labels.push_back(out.table.tags[i].str());
    }
    out.structure = make_graph(next, edges, std::move(labels));
    return out;
}

// K_n^r: the r-subdivision of the complete undirected graph on n vertices.
inline Labeled subdivided_clique(int n, int r) {
    if (n < 1) throw Error(Err::BadInput, "subdivided_clique needs n >= 1");
    return subdivide(complete_graph(n), r, SubdivideMode::Undirected);
}

// --- well-foundedness -------------------------------------------------------

// Finite well-foundedness: the edge relation is acyclic (no loops, no cycles).
inline bool is_well_founded(const Structure& g) {
    require_graph(g);
    std::vector<std::vector<int>> adj(g.size);
    for (const auto& t : g.tuples("E")) {
        if (t[0] == t[1]) return false;
        adj[t[0]].push_back(t[1]);
    }
    // iterative DFS, colors: 0 new, 1 on stack, 2 done
    std::vector<char> color(g.size, 0);
    for (int s = 0; s < g.size; ++s) {
        if (color[s]) continue;
        std::vector<std::pair<int, size_t>> stack{{s, 0}};
        color[s] = 1;
        while (!stack.empty()) {
            auto& [v, i] = stack.back();
            if (i < adj[v].size()) {
                int w = adj[v][i++];
                if (color[w] == 1) return false;
                if (color[w] == 0) {
                    color[w] = 1;
                    stack.push_back({w, 0});
                }
            } else {
                color[v] = 2;
                stack.pop_back();
            }
        }
    }
    return true;
}

// Injective order-preserving map into (n, <): a topological order, smallest
// eligible vertex first.  f[u] < f[v] whenever (u,v) is an edge.
inline Mapping ordinal_embedding(const Structure& g) {
    require_graph(g);
    std::vector<std::vector<int>> adj(g.size);
    std::vector<int> indeg(g.size, 0);
    for (const auto& t : g.tuples("E")) {
        adj[t[0]].push_back(t[1]);
        ++indeg[t[1]];
    }
    std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
    for (int v = 0; v < g.size; ++v)
        if (indeg[v] == 0) ready.push(v);
    Mapping f(g.size, -1);
    int next = 0;
    while (!ready.empty()) {
        int v = ready.top();
        ready.pop();
        f[v] = next++;
        for (int w : adj[v])
            if (--indeg[w] == 0) ready.push(w);
    }
    if (next != g.size) throw Error(Err::NotWellFounded, "graph contains a cycle");
    return f;
}

// --- permutation equivalence -------------------------------------------------

// One-line permutation: result[i] = t[perm[i]].
inline Tuple apply_perm(const Mapping& perm, const Tuple& t) {
    Tuple out(t.size());
    for (size_t i = 0; i < t.size(); ++i) out[i] = t[perm[i]];
    return out;
}

struct PermutationWitness {
    Mapping bijection;
    // per relation, per source tuple: the permutation applied to its image
    std::map<std::string, std::map<Tuple, Mapping>> sigma;
};

inline bool check_permutation_witness(const Structure& m, const Structure& n,
                                      const PermutationWitness& w) {
    if (m.size != n.size || !(m.signature == n.signature)) return false;
    std::vector<char> used(n.size, 0);
    if (static_cast<int>(w.bijection.size()) != m.size) return false;
    for (int x : w.bijection) {
        if (x < 0 || x >= n.size || used[x]) return false;
        used[x] = 1;
    }
    for (const auto& sym : m.signature.symbols) {
        TupleSet image;
        auto sig_it = w.sigma.find(sym.name);
        for (const auto& t : m.tuples(sym.name)) {
            if (sig_it == w.sigma.end()) return false;
            auto it = sig_it->second.find(t);
            if (it == sig_it->second.end()) return false;
            image.push_back(apply_perm(it->second, apply_map(w.bijection, t)));
        }
        sort_unique(image);
        if (image != n.tuples(sym.name)) return false;
    }
    return true;
}

namespace detail {

inline std::map<int, int> occurrence_counts(const TupleSet& ts) {
    std::map<int, int> c;
    for (const auto& t : ts)
        for (int x : t) ++c[x];
    return c;
}

// Pick for each source tuple an image tuple (same multiset, lying in R^N and
// compatible under f) so that the images cover R^N exactly.
inline bool choose_tuple_images(const TupleSet& src, const TupleSet& dst, const Mapping& f,
                                size_t i, std::set<Tuple>& covered,
                                std::vector<Tuple>& chosen) {
    if (i == src.size()) return covered.size() == dst.size();
    Tuple mapped = apply_map(f, src[i]);
    Tuple key = mapped;
    std::sort(key.begin(), key.end());
    for (const auto& cand : dst) {
        Tuple ck = cand;
        std::sort(ck.begin(), ck.end());
        if (ck != key) continue;
        bool fresh = !covered.count(cand);
        if (fresh) covered.insert(cand);
        // remaining tuples must still be able to cover the rest
        if (dst.size() - covered.size() <= src.size() - i - 1 || !fresh) {
            chosen.push_back(cand);
            if (choose_tuple_images(src, dst, f, i + 1, covered, chosen)) return true;
            chosen.pop_back();
        }
        if (fresh) covered.erase(cand);
    }
    return false;
}

inline bool perm_equiv_search(const Structure& m, const Structure& n, Mapping& f,
                              std::vector<char>& used, int v, bool prune_degrees,
                              PermutationWitness& out) {
    if (v == m.size) {
        PermutationWitness w;
        w.bijection = f;
        for (const auto& sym : m.signature.symbols) {
            const auto& src = m.tuples(sym.name);
            const auto& dst = n.tuples(sym.name);
            std::set<Tuple> covered;
            std::vector<Tuple> chosen;
            if (!choose_tuple_images(src, dst, f, 0, covered, chosen)) return false;
            for (size_t i = 0; i < src.size(); ++i) {
                // lexicographically least permutation realizing the chosen image
                Mapping perm(src[i].size());
                std::iota(perm.begin(), perm.end(), 0);
                Tuple mapped = apply_map(f, src[i]);
                do {
                    if (apply_perm(perm, mapped) == chosen[i]) break;
                } while (std::next_permutation(perm.begin(), perm.end()));
                w.sigma[sym.name][src[i]] = perm;
            }
        }
        out = std::move(w);
        return true;
    }
    for (int x = 0; x < n.size; ++x) {
        if (used[x]) continue;
        if (prune_degrees) {
            bool ok = true;
            for (const auto& sym : m.signature.symbols) {
                auto cm = occurrence_counts(m.tuples(sym.name));
                auto cn = occurrence_counts(n.tuples(sym.name));
                if ((cm.count(v) ? cm[v] : 0) != (cn.count(x) ? cn[x] : 0)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
        }
        f[v] = x;
        used[x] = 1;
        if (perm_equiv_search(m, n, f, used, v + 1, prune_degrees, out)) return true;
        used[x] = 0;
        f[v] = -1;
    }
    return false;
}

} // namespace detail

// Witness that N arises from M by permuting each related tuple, or nullopt.
// First witness in lexicographic bijection order.
inline std::optional<PermutationWitness> permutation_equivalent(const Structure& m,
                                                                const Structure& n) {
    if (!(m.signature == n.signature))
        throw Error(Err::SignatureMismatch, "permutation equivalence needs equal signatures");
    if (m.size != n.size) return std::nullopt;
    bool prune = true;
    for (const auto& sym : m.signature.symbols) {
        if (m.tuples(sym.name).size() < n.tuples(sym.name).size()) return std::nullopt;
        if (m.tuples(sym.name).size() != n.tuples(sym.name).size()) prune = false;
    }
    Mapping f(m.size, -1);
    std::vector<char> used(n.size, 0);
    PermutationWitness w;
    if (detail::perm_equiv_search(m, n, f, used, 0, prune, w)) return w;
    return std::nullopt;
}

} // namespace relgadget

#endif

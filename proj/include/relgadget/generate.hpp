#ifndef RELGADGET_GENERATE_HPP
#define RELGADGET_GENERATE_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "relgadget/core.hpp"

namespace relgadget {

// All {E:2} structures on n vertices (loops and symmetric pairs included).
// 2^(n^2) of them, so keep n tiny.
inline std::vector<Structure> all_raw_graphs(int n) {
    std::vector<Structure> out;
    const int cells = n * n;
    for (uint64_t mask = 0; mask < (uint64_t(1) << cells); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (int c = 0; c < cells; ++c)
            if (mask & (uint64_t(1) << c)) edges.emplace_back(c / n, c % n);
        out.push_back(make_graph(n, edges));
    }
    return out;
}

inline bool is_weakly_connected(const Structure& g) {
    if (g.size == 0) return true;
    std::vector<std::vector<int>> adj(g.size);
    for (const auto& t : g.tuples("E")) {
        adj[t[0]].push_back(t[1]);
        adj[t[1]].push_back(t[0]);
    }
    std::vector<char> seen(g.size, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == g.size;
}

namespace detail {

inline uint64_t digraph_mask(const Structure& g) {
    uint64_t m = 0;
    for (const auto& t : g.tuples("E")) m |= uint64_t(1) << (t[0] * g.size + t[1]);
    return m;
}

inline uint64_t permuted_mask(uint64_t mask, int n, const std::vector<int>& perm) {
    uint64_t out = 0;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (mask & (uint64_t(1) << (u * n + v)))
                out |= uint64_t(1) << (perm[u] * n + perm[v]);
    return out;
}

inline uint64_t canonical_mask(uint64_t mask, int n) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    uint64_t best = ~uint64_t(0);
    do {
        best = std::min(best, permuted_mask(mask, n, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

} // namespace detail

// All antisymmetric irreflexive digraphs on n vertices, one per isomorphism
// class, in ascending order of the canonical adjacency mask.
inline std::vector<Structure> oriented_graphs_up_to_iso(int n) {
    std::vector<std::pair<int, int>> cells;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) cells.emplace_back(u, v);
    std::set<uint64_t> seen;
    long long total = 1;
    for (size_t i = 0; i < cells.size(); ++i) total *= 3;
    for (long long code = 0; code < total; ++code) {
        long long c = code;
        uint64_t mask = 0;
        for (auto [u, v] : cells) {
            int state = static_cast<int>(c % 3);
            c /= 3;
            if (state == 1) mask |= uint64_t(1) << (u * n + v);
            if (state == 2) mask |= uint64_t(1) << (v * n + u);
        }
        seen.insert(detail::canonical_mask(mask, n));
    }
    std::vector<Structure> out;
    for (uint64_t mask : seen) {
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (mask & (uint64_t(1) << (u * n + v))) edges.emplace_back(u, v);
        out.push_back(make_graph(n, edges));
    }
    return out;
}

template <typename Pred>
inline std::vector<Structure> oriented_graphs_up_to_iso(int min_n, int max_n, Pred keep) {
    std::vector<Structure> out;
    for (int n = min_n; n <= max_n; ++n)
        for (auto& g : oriented_graphs_up_to_iso(n))
            if (keep(g)) out.push_back(std::move(g));
    return out;
}

// Raw random graph: each ordered pair (loops included) present with the given
// percentage.  Only operator() and % of the engine are used, so sequences are
// reproducible everywhere.
inline Structure random_raw_graph(std::mt19937& rng, int n, int percent) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (static_cast<int>(rng() % 100) < percent) edges.emplace_back(u, v);
    return make_graph(n, edges);
}

inline Structure random_structure(std::mt19937& rng, const Signature& sig, int n,
                                  int tuples_per_relation) {
    Structure s;
    s.signature = sig;
    s.size = n;
    for (const auto& sym : sig.symbols) {
        int count = tuples_per_relation > 0 ? static_cast<int>(rng() % (tuples_per_relation + 1)) : 0;
        for (int k = 0; k < count; ++k) {
            Tuple t(sym.arity);
            for (int& x : t) x = static_cast<int>(rng() % n);
            s.add(sym.name, std::move(t));
        }
    }
    s.normalize();
    return s;
}

inline Structure random_undirected_graph(std::mt19937& rng, int n, int percent) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (static_cast<int>(rng() % 100) < percent) {
                edges.emplace_back(u, v);
                edges.emplace_back(v, u);
            }
    return make_graph(n, edges);
}

} // namespace relgadget

#endif

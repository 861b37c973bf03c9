#ifndef RELGADGET_FIXTURES_HPP
#define RELGADGET_FIXTURES_HPP

#include <vector>

#include "relgadget/gadget.hpp"
#include "relgadget/logic.hpp"

namespace relgadget::fixtures {

// Gadget over {R:3, S:4} with all three mark sets in use.  The carrier is an
// oriented path 0 -> 1 -> 3 -> 6 with a hair off every step: 2 is an A-point,
// 4 a B-point, 5 a shared point.
inline Gadget ternary_gadget() {
    Structure s;
    s.signature = Signature{{{"R", 3}, {"S", 4}}};
    s.size = 7;
    s.add("R", {0, 1, 2});
    s.add("R", {1, 3, 4});
    s.add("S", {3, 6, 5, 5});
    s.normalize();
    return make_gadget(std::move(s), 0, 6, {2}, {4}, {5});
}

inline LPath ternary_gadget_path() {
    auto g = ternary_gadget();
    auto p = is_lpath(g.carrier, {0, 1, 3, 6});
    return *p;
}

// Simple ternary oriented path of length 2: R(0,1,2), R(1,3,4).
inline Gadget ternary_path_system() {
    Structure s;
    s.signature = Signature{{{"R", 3}}};
    s.size = 5;
    s.add("R", {0, 1, 2});
    s.add("R", {1, 3, 4});
    s.normalize();
    return make_gadget(std::move(s), 0, 3);
}

// Fully marked path gadget whose shared point sits in the middle step, away
// from α and β.  A shared point co-occurring with β puts every pair of
// target natives at Gaifman distance two, which hands the clique detector a
// shortcut route that types to nothing; keeping it mid-path leaves the
// witness paths forced, so the miner can recover all three mark kinds.
inline Gadget mid_shared_gadget() {
    Structure s;
    s.signature = Signature{{{"R", 3}, {"S", 4}}};
    s.size = 8;
    s.add("R", {0, 1, 2});
    s.add("S", {1, 3, 4, 5});
    s.add("R", {3, 6, 7});
    s.normalize();
    return make_gadget(std::move(s), 0, 6, {2}, {7}, {4});
}

inline LPath mid_shared_gadget_path() {
    auto g = mid_shared_gadget();
    return *is_lpath(g.carrier, {0, 1, 3, 6});
}

// Ternary path with one globally shared point and no A/B marks.  Safe on the
// ⊛ side: A/B marks break the star associativity over graphs with composable
// edges (the copies merge A-points per source of G ⋆ H), so the associativity
// grid runs on this fixture.
inline Gadget ternary_shared_gadget() {
    Structure s;
    s.signature = Signature{{{"R", 3}}};
    s.size = 6;
    s.add("R", {0, 1, 2});
    s.add("R", {1, 3, 4});
    s.normalize();
    return make_gadget(std::move(s), 0, 3, {}, {}, {5});
}

// Two parallel middle vertices; admits two gadget homs from path_gadget(1).
inline Gadget diamond_gadget() {
    return make_gadget(make_graph(4, {{0, 1}, {1, 3}, {0, 2}, {2, 3}}), 0, 3);
}

inline std::vector<Gadget> gadgets() {
    return {h_gadget(),      path_gadget(0),       path_gadget(1),    path_gadget(2),
            ternary_gadget(), ternary_path_system(), mid_shared_gadget()};
}

// Antisymmetric loop-free graphs on at most 5 vertices.  Anti-parallel edge
// pairs would defeat the strongness of φ whenever the gadget relates a tuple
// inside {α, β}, so the φ fixture grid stays on digraphs.
inline std::vector<Structure> graphs() {
    return {
        single_edge_graph(),
        directed_path_graph(2),
        directed_cycle(3),
        make_graph(3, {{0, 1}, {0, 2}, {1, 2}}), // transitive tournament
        make_graph(4, {{0, 1}, {0, 2}, {0, 3}}), // out-star
        make_graph(4, {{1, 0}, {2, 0}, {3, 0}}), // in-star
        make_graph(4, {{0, 1}, {2, 3}}),         // matching
        directed_path_graph(4),
        h_graph(),
    };
}

inline std::vector<Gadget> systems() {
    return {path_gadget(0),        path_gadget(1),   path_gadget(2),     h_gadget(),
            ternary_path_system(), ternary_gadget(), mid_shared_gadget()};
}

// Systems whose arc graph is a directed path from alpha to beta.
inline std::vector<Gadget> path_systems() {
    return {path_gadget(0), path_gadget(1), path_gadget(2), ternary_path_system(),
            ternary_gadget(), mid_shared_gadget()};
}

inline std::vector<LPath> lpaths() {
    std::vector<LPath> out;
    out.push_back(*is_lpath(directed_path_graph(2), {0, 1, 2}));
    out.push_back(*is_lpath(directed_path_graph(3), {0, 1, 2, 3}));
    out.push_back(*is_lpath(make_graph(3, {{1, 0}, {1, 2}}), {0, 1, 2}));
    {
        Structure s;
        s.signature = Signature{{{"R", 3}, {"S", 3}}};
        s.size = 5;
        s.add("R", {0, 1, 3});
        s.add("S", {1, 2, 4});
        s.normalize();
        out.push_back(*is_lpath(s, {0, 1, 2}));
    }
    {
        Structure s;
        s.signature = Signature{{{"R", 4}, {"S", 4}}};
        s.size = 6;
        s.add("R", {3, 1, 0, 4});
        s.add("S", {1, 2, 5, 5});
        s.normalize();
        out.push_back(*is_lpath(s, {0, 1, 2}));
    }
    out.push_back(ternary_gadget_path());
    out.push_back(mid_shared_gadget_path());
    return out;
}

} // namespace relgadget::fixtures

#endif

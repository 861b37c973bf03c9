#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "relgadget/fixtures.hpp"
#include "relgadget/gadget.hpp"
#include "relgadget/generate.hpp"

using namespace relgadget;

namespace {

long long expected_star_size(const Structure& g, const Gadget& m) {
    auto edges = graph_edges(g);
    std::set<int> src, tgt;
    for (auto [u, v] : edges) {
        src.insert(u);
        tgt.insert(v);
    }
    return g.size + static_cast<long long>(src.size()) * m.A.size() +
           static_cast<long long>(tgt.size()) * m.B.size() +
           static_cast<long long>(edges.size()) * gadget_rest(m).size() +
           static_cast<long long>(m.P.size());
}

// φ image intersection predicted from the gluing pattern: marks shared per
// matching endpoint, P always, natives wherever endpoints coincide.
std::set<int> expected_intersection(const Gadget& m, const std::map<Tag, int>& idx,
                                    std::pair<int, int> e, std::pair<int, int> f) {
    auto [u, v] = e;
    auto [s, t] = f;
    std::set<int> out;
    for (int p : m.P) out.insert(idx.at(Tag::shared(p)));
    if (u == s)
        for (int a : m.A) out.insert(idx.at(Tag::apoint(u, a)));
    if (v == t)
        for (int b : m.B) out.insert(idx.at(Tag::bpoint(v, b)));
    if (u == s) out.insert(idx.at(Tag::native(u)));
    if (v == t) out.insert(idx.at(Tag::native(v)));
    if (u == t) out.insert(idx.at(Tag::native(u)));
    if (v == s) out.insert(idx.at(Tag::native(v)));
    return out;
}

} // namespace

TEST_CASE("make_gadget validates its marks") {
    auto path = directed_path_graph(2);
    CHECK_NOTHROW(make_gadget(path, 0, 2));
    CHECK_THROWS_AS(make_gadget(path, 1, 1), Error);
    CHECK_THROWS_AS(make_gadget(path, 0, 2, {0}), Error);      // alpha in A
    CHECK_THROWS_AS(make_gadget(path, 0, 2, {1}, {1}), Error); // A meets B
    auto h = h_gadget();
    CHECK(h.carrier.size == 5);
    CHECK(h.simple());
}

TEST_CASE("star of a single edge with the H gadget is H itself") {
    auto st = star(single_edge_graph(), h_gadget());
    CHECK(st.structure.size == 5);
    CHECK(is_isomorphic(st.structure, h_graph()));
}

TEST_CASE("star with no edges keeps natives and shared points only") {
    auto g = make_structure(Signature::graph(), 3);
    auto m = fixtures::ternary_gadget();
    auto st = star(g, m);
    CHECK(st.structure.size == 3 + static_cast<int>(m.P.size()));
    CHECK(st.structure.tuple_count() == 0);
}

TEST_CASE("star size formula") {
    auto two_path = directed_path_graph(2);
    CHECK(star(two_path, h_gadget()).structure.size == 3 + 2 * 3);
    for (const auto& m : fixtures::gadgets())
        for (const auto& g : fixtures::graphs())
            CHECK(star(g, m).structure.size == expected_star_size(g, m));
}

TEST_CASE("phi is an injective strong homomorphism with the six-case shape") {
    auto g = directed_path_graph(2);
    auto m = fixtures::ternary_gadget();
    auto st = star(g, m);
    auto idx = st.table.index();
    auto f = phi(g, m, 0, 1);
    CHECK(f.map[m.alpha] == idx.at(Tag::native(0)));
    CHECK(f.map[m.beta] == idx.at(Tag::native(1)));
    for (int p : m.P) CHECK(f.map[p] == idx.at(Tag::shared(p)));
    for (int a : m.A) CHECK(f.map[a] == idx.at(Tag::apoint(0, a)));
    for (int b : m.B) CHECK(f.map[b] == idx.at(Tag::bpoint(1, b)));
    CHECK(is_homomorphism(f.map, m.carrier, st.structure, true));
    CHECK_THROWS_AS(phi(g, m, 2, 0), Error);

    // shared points receive the same image under every phi
    auto f2 = phi(g, m, 1, 2);
    for (int p : m.P) CHECK(f.map[p] == f2.map[p]);
}

TEST_CASE("phi checks across the fixture grid, with image intersections") {
    for (const auto& m : fixtures::gadgets()) {
        for (const auto& g : fixtures::graphs()) {
            auto st = star(g, m);
            auto idx = st.table.index();
            auto edges = graph_edges(g);
            std::vector<Mapping> phis;
            for (auto [u, v] : edges) {
                auto f = phi_mapping(m, idx, u, v);
                CHECK(is_homomorphism(f, m.carrier, st.structure, true));
                std::set<int> img(f.begin(), f.end());
                CHECK(img.size() == f.size());
                phis.push_back(std::move(f));
            }
            for (size_t i = 0; i < edges.size(); ++i)
                for (size_t j = 0; j < edges.size(); ++j) {
                    if (i == j) continue;
                    std::set<int> a(phis[i].begin(), phis[i].end());
                    std::set<int> b(phis[j].begin(), phis[j].end());
                    std::set<int> got;
                    for (int x : a)
                        if (b.count(x)) got.insert(x);
                    CHECK(got == expected_intersection(m, idx, edges[i], edges[j]));
                }
        }
    }
}

TEST_CASE("phi is not strong over anti-parallel edges") {
    // On K_3 the copy for (v,u) relates the pair (v,u); the phi of (u,v)
    // maps the non-tuple (beta, alpha) onto it, defeating reflection.
    auto k3 = complete_graph(3);
    auto m = path_gadget(0);
    auto st = star(k3, m);
    auto f = phi_mapping(m, st.table.index(), 0, 1);
    CHECK(is_homomorphism(f, m.carrier, st.structure, false));
    CHECK_FALSE(is_homomorphism(f, m.carrier, st.structure, true));
}

TEST_CASE("distinct edges give distinct inner copies") {
    auto g = directed_path_graph(2);
    auto m = path_gadget(1); // one inner point
    auto st = star(g, m);
    auto idx = st.table.index();
    auto f1 = phi_mapping(m, idx, 0, 1);
    auto f2 = phi_mapping(m, idx, 1, 2);
    CHECK(f1[1] != f2[1]);
}

TEST_CASE("star_graph_hom: identities, collapses, commuting squares") {
    auto m = fixtures::ternary_gadget();
    auto p2 = directed_path_graph(2);

    Mapping id{0, 1, 2};
    auto idh = star_graph_hom(id, p2, p2, m);
    for (size_t i = 0; i < idh.map.size(); ++i) CHECK(idh.map[i] == static_cast<int>(i));

    // collapse onto a loop
    auto loop = make_graph(1, {{0, 0}});
    Mapping collapse{0, 0, 0};
    auto ch = star_graph_hom(collapse, p2, loop, m);
    CHECK(is_homomorphism(ch.map, star(p2, m).structure, star(loop, m).structure));

    // (f ⋆ M) ∘ phi_(u,v) = phi_(f u, f v)
    auto c3 = directed_cycle(3);
    Mapping f{0, 1, 2};
    REQUIRE(is_homomorphism(f, p2, c3));
    auto sf = star_graph_hom(f, p2, c3, m);
    auto idx_c3 = star(c3, m).table.index();
    auto idx_p2 = star(p2, m).table.index();
    for (auto [u, v] : graph_edges(p2)) {
        auto left = compose_mappings(phi_mapping(m, idx_p2, u, v), sf.map);
        auto right = phi_mapping(m, idx_c3, f[u], f[v]);
        CHECK(left == right);
    }
    CHECK_THROWS_AS(star_graph_hom(Mapping{0, 0, 0}, p2, p2, m), Error);
}

TEST_CASE("star_gadget_hom: identity, inclusion, commuting squares") {
    auto small = path_gadget(1);
    auto big = fixtures::diamond_gadget();
    auto g = directed_cycle(3);

    Mapping id{0, 1, 2};
    auto idh = star_gadget_hom(g, small, small, id);
    for (size_t i = 0; i < idh.map.size(); ++i) CHECK(idh.map[i] == static_cast<int>(i));

    auto rhos = gadget_homs(small, big);
    REQUIRE(rhos.size() == 2);
    for (const auto& rho : rhos) {
        auto sh = star_gadget_hom(g, small, big, rho);
        CHECK(is_homomorphism(sh.map, star(g, small).structure, star(g, big).structure));
        std::set<int> img(sh.map.begin(), sh.map.end());
        CHECK(img.size() == sh.map.size());
        auto idx_small = star(g, small).table.index();
        auto idx_big = star(g, big).table.index();
        for (auto [u, v] : graph_edges(g)) {
            auto left = compose_mappings(phi_mapping(small, idx_small, u, v), sh.map);
            auto right = compose_mappings(rho, phi_mapping(big, idx_big, u, v));
            CHECK(left == right);
        }
    }
    CHECK_THROWS_AS(star_gadget_hom(g, big, small, Mapping{0, 1, 1, 1}), Error);
}

TEST_CASE("star_bi agrees with one-sided actions and their compositions") {
    auto small = path_gadget(1);
    auto big = fixtures::diamond_gadget();
    auto p2 = directed_path_graph(2);
    auto c3 = directed_cycle(3);
    Mapping f{0, 1, 2};
    auto rhos = gadget_homs(small, big);
    REQUIRE(!rhos.empty());
    const Mapping& rho = rhos.front();

    Mapping idg{0, 1, 2};
    Mapping idm{0, 1, 2};
    auto both_id = star_bi(idg, p2, p2, small, small, idm);
    for (size_t i = 0; i < both_id.map.size(); ++i) CHECK(both_id.map[i] == static_cast<int>(i));

    auto left_only = star_bi(f, p2, c3, small, small, idm);
    CHECK(left_only.map == star_graph_hom(f, p2, c3, small).map);

    auto bi = star_bi(f, p2, c3, small, big, rho);
    auto route1 = compose_mappings(star_gadget_hom(p2, small, big, rho).map,
                                   star_graph_hom(f, p2, c3, big).map);
    auto route2 = compose_mappings(star_graph_hom(f, p2, c3, small).map,
                                   star_gadget_hom(c3, small, big, rho).map);
    CHECK(bi.map == route1);
    CHECK(bi.map == route2);
    CHECK(is_homomorphism(bi.map, star(p2, small).structure, star(c3, big).structure));
}

TEST_CASE("one-sided functor composition laws") {
    auto m = fixtures::ternary_gadget();
    auto p2 = directed_path_graph(2);
    auto c3 = directed_cycle(3);
    Mapping f{0, 1, 2};            // p2 -> c3
    Mapping g{1, 2, 0};            // rotate c3
    REQUIRE(is_homomorphism(g, c3, c3));
    auto fg = compose_mappings(f, g);
    auto lhs = star_graph_hom(fg, p2, c3, m);
    auto rhs = compose_mappings(star_graph_hom(f, p2, c3, m).map,
                                star_graph_hom(g, c3, c3, m).map);
    CHECK(lhs.map == rhs);

    auto small = path_gadget(1);
    auto big = fixtures::diamond_gadget();
    auto up = gadget_homs(small, big);
    auto down = gadget_homs(big, small);
    REQUIRE(!up.empty());
    REQUIRE(!down.empty());
    auto rho_mu = compose_mappings(up[0], down[0]);
    auto left = star_gadget_hom(c3, small, small, rho_mu);
    auto right = compose_mappings(star_gadget_hom(c3, small, big, up[0]).map,
                                  star_gadget_hom(c3, big, small, down[0]).map);
    CHECK(left.map == right);
}

TEST_CASE("ostar re-equips the star as a gadget") {
    auto m = fixtures::ternary_gadget();

    // single-edge star collapse: carrier of (edge) ⊛ M is a copy of M
    auto edge_g = make_gadget(single_edge_graph(), 0, 1);
    auto om = ostar(edge_g, m);
    CHECK(om.gadget.carrier.size == m.carrier.size);
    CHECK(is_isomorphic(om.gadget.carrier, m.carrier));
    CHECK(om.gadget.A.size() == m.A.size());
    CHECK(om.gadget.B.size() == m.B.size());
    CHECK(om.gadget.P.size() == m.P.size());

    // (H,s,t) ⊛ path_gadget(r) has carrier H^(r)
    for (int r = 0; r <= 2; ++r) {
        auto hp = ostar(h_gadget(), path_gadget(r));
        CHECK(is_isomorphic(hp.gadget.carrier,
                            subdivide(h_graph(), r, SubdivideMode::Directed).structure));
    }

    CHECK_THROWS_AS(ostar(m, path_gadget(0)), Error); // not a graph gadget
}

TEST_CASE("ostar rejects a non-simple left factor") {
    auto marked = make_gadget(directed_path_graph(2), 0, 2, {1});
    CHECK_THROWS_AS(ostar(marked, path_gadget(0)), Error);
}

TEST_CASE("associativity grid") {
    std::vector<Structure> gs{single_edge_graph(), directed_path_graph(2), directed_cycle(3)};
    std::vector<Gadget> hs{h_gadget(), path_gadget(0)};
    std::vector<Gadget> ms{path_gadget(1), fixtures::ternary_shared_gadget()};
    for (const auto& g : gs)
        for (const auto& h : hs)
            for (const auto& m : ms) {
                auto iso = assoc_check(g, h, m);
                CHECK(is_homomorphism(iso.map, *iso.source, *iso.target, true));
            }
    // degenerate: G edgeless; both sides are natives plus shared points
    auto edgeless = make_structure(Signature::graph(), 2);
    auto iso = assoc_check(edgeless, h_gadget(), fixtures::ternary_gadget());
    CHECK(iso.source->size == 2 + 1);

    // hypothesis failure: t is not a target
    auto bad = make_gadget(make_graph(3, {{0, 1}, {2, 1}}), 0, 2);
    CHECK_THROWS_AS(assoc_check(single_edge_graph(), bad, path_gadget(1)), Error);
}

TEST_CASE("star associativity breaks for A/B marks over composable edges") {
    // With an A-point in M and exit t of H carrying an out-edge, the left
    // side merges A-points per source vertex of G ⋆ H while the right side
    // keeps one per copy: the domains differ already in size.
    auto g = directed_path_graph(2);
    auto h = h_gadget();
    auto m = fixtures::ternary_gadget();
    auto left = star(star(g, h).structure, m).structure;
    auto right = star(g, ostar(h, m).gadget).structure;
    CHECK(left.size == 48);
    CHECK(right.size == 50);
    CHECK_FALSE(is_isomorphic(left, right));
}

TEST_CASE("the H gadget matches its defining figure") {
    auto h = h_graph();
    REQUIRE(h.tuples("E").size() == 6);
    // index 3 (the apex) has no incoming edge, index 2 no outgoing edge
    for (const auto& t : h.tuples("E")) {
        CHECK(t[1] != 3);
        CHECK(t[0] != 2);
    }
    CHECK(structures_equal(path_gadget(0).carrier, single_edge_graph()));
}

TEST_CASE("full-embedding verification") {
    std::vector<Structure> graphs{single_edge_graph(), directed_path_graph(2), directed_cycle(3)};
    auto rep = verify_full_embedding(h_gadget(), graphs);
    CHECK(rep.ok());
    for (const auto& [pr, p] : rep.pairs) CHECK(p.graph_homs == p.star_homs);

    // the symmetric-edge gadget is not full on P_2: the star symmetrizes the
    // graph, and the extra homomorphisms are not of the form f ⋆ M
    auto sym_edge = make_gadget(make_graph(2, {{0, 1}, {1, 0}}), 0, 1);
    auto rep2 = verify_full_embedding(sym_edge, {directed_path_graph(2)});
    CHECK_FALSE(rep2.ok());
    CHECK_FALSE(rep2.condition2);

    CHECK(verify_full_embedding(h_gadget(), {}).ok());

    CHECK_THROWS_AS(verify_full_embedding(h_gadget(), {make_structure(Signature::graph(), 1)}),
                    Error);
}

TEST_CASE("universal_apply produces subdivided star arcs") {
    auto g = single_edge_graph();
    for (int r = 0; r <= 1; ++r) {
        auto res = universal_apply(g, path_gadget(r));
        auto arc = arc_graph(res.structure);
        auto expect = subdivide(star(g, h_gadget()).structure, r, SubdivideMode::Directed);
        CHECK(is_isomorphic(arc.graph, expect.structure));
    }
    auto p2 = directed_path_graph(2);
    auto res = universal_apply(p2, path_gadget(1));
    auto arc = arc_graph(res.structure);
    auto expect = subdivide(star(p2, h_gadget()).structure, 1, SubdivideMode::Directed);
    CHECK(is_isomorphic(arc.graph, expect.structure));

    // a system with marks and a length-3 arc path
    auto tern = universal_apply(g, fixtures::ternary_gadget());
    auto tern_arc = arc_graph(tern.structure);
    auto tern_expect = subdivide(star(g, h_gadget()).structure, 2, SubdivideMode::Directed);
    CHECK(is_isomorphic(tern_arc.graph, tern_expect.structure));

    CHECK_THROWS_AS(universal_apply(complete_graph(3), path_gadget(0)), Error); // not a digraph
    CHECK_THROWS_AS(universal_apply(g, h_gadget()), Error);                     // arc not a path
    CHECK_THROWS_AS(universal_apply(g, fixtures::diamond_gadget()), Error);
}

TEST_CASE("systems are recognized") {
    CHECK(is_system(h_gadget()));
    CHECK(is_system(path_gadget(2)));
    CHECK(is_system(fixtures::ternary_gadget()));
    CHECK(is_system(fixtures::ternary_path_system()));
    CHECK_FALSE(is_system(make_gadget(complete_graph(3), 0, 1)));
    auto bad = make_gadget(directed_path_graph(3), 0, 3, {1});
    CHECK_FALSE(is_system(bad));
}

#include <catch2/catch_amalgamated.hpp>

#include "relgadget/fixtures.hpp"
#include "relgadget/generate.hpp"
#include "relgadget/logic.hpp"

using namespace relgadget;

namespace {

// φ(x) = ∃y E(x,y)
PPFormula exists_out_edge() {
    return make_pp_formula(make_graph(2, {{0, 1}}), {0});
}

} // namespace

TEST_CASE("pp satisfaction is pointed hom existence") {
    auto phi = exists_out_edge();
    auto two_cycle = make_graph(2, {{0, 1}, {1, 0}});
    CHECK(pp_satisfies(two_cycle, {0}, phi));
    CHECK_FALSE(pp_satisfies(make_structure(Signature::graph(), 2), {0}, phi));

    // no conjuncts: always satisfied
    auto top = make_pp_formula(make_structure(Signature::graph(), 1), {0});
    CHECK(pp_satisfies(make_structure(Signature::graph(), 3), {2}, top));

    CHECK_THROWS_AS(pp_satisfies(two_cycle, {0, 1}, phi), Error);
    CHECK_THROWS_AS(make_pp_formula(make_graph(2, {{0, 1}}), {0, 0}), Error);
}

TEST_CASE("pp component split") {
    // ∃y,z (E(x,y) ∧ E(x,z)): two components off the free point
    auto branching = make_pp_formula(make_graph(3, {{0, 1}, {0, 2}}), {0});
    auto comps = pp_components(branching);
    REQUIRE(comps.size() == 2);
    for (const auto& c : comps) {
        CHECK(c.canonical.size == 2);
        CHECK(c.canonical.tuples("E").size() == 1);
        CHECK(c.free == std::vector<int>{0});
    }

    // quantifier-free: one component carrying only the free part
    auto qf = make_pp_formula(make_graph(2, {{0, 1}}), {0, 1});
    auto qfc = pp_components(qf);
    REQUIRE(qfc.size() == 1);
    CHECK(structures_equal(qfc[0].canonical, qf.canonical));

    // connected witness graph: one component
    auto conn = make_pp_formula(make_graph(3, {{0, 1}, {1, 2}}), {0});
    CHECK(pp_components(conn).size() == 1);
}

TEST_CASE("component-wise satisfaction agreement") {
    auto branching = make_pp_formula(make_graph(3, {{0, 1}, {0, 2}}), {0});
    auto host = make_graph(3, {{0, 1}, {0, 2}});
    CHECK(pp_components_agree(host, {0}, branching));
    CHECK(pp_components_agree(make_structure(Signature::graph(), 1), {0}, branching));

    std::mt19937 rng(17);
    for (int it = 0; it < 200; ++it) {
        int vars = 2 + static_cast<int>(rng() % 4);
        auto canon = random_raw_graph(rng, vars, 35);
        int nfree = 1 + static_cast<int>(rng() % std::min(2, vars));
        std::vector<int> free;
        for (int k = 0; k < nfree; ++k) free.push_back(k);
        auto phi = make_pp_formula(canon, free);
        int asize = 1 + static_cast<int>(rng() % 4);
        auto a = random_raw_graph(rng, asize, 45);
        Tuple abar;
        for (int k = 0; k < nfree; ++k) abar.push_back(static_cast<int>(rng() % asize));
        CHECK(pp_components_agree(a, abar, phi));
    }
}

TEST_CASE("is_lpath recovers step decompositions") {
    auto p = is_lpath(directed_path_graph(2), {0, 1, 2});
    REQUIRE(p.has_value());
    REQUIRE(p->steps.size() == 2);
    CHECK(p->steps[0].tuple == Tuple{0, 1});
    CHECK(p->steps[1].tuple == Tuple{1, 2});

    // a symmetric edge pair cannot be a path: two tuples, one step
    auto sym = make_graph(2, {{0, 1}, {1, 0}});
    CHECK_FALSE(is_lpath(sym, {0, 1}).has_value());

    // ternary chain with distinct relations
    Structure chain;
    chain.signature = Signature{{{"R", 3}, {"S", 3}}};
    chain.size = 5;
    chain.add("R", {0, 1, 3});
    chain.add("S", {1, 2, 4});
    chain.normalize();
    auto q = is_lpath(chain, {0, 1, 2});
    REQUIRE(q.has_value());
    CHECK(q->steps[0].rel == "R");
    CHECK(q->steps[1].rel == "S");

    // uncovered element defeats the union clause
    Structure loose = chain;
    loose.size = 6;
    CHECK_FALSE(is_lpath(loose, {0, 1, 2}).has_value());

    // single element path function is never an L-path
    CHECK_FALSE(is_lpath(directed_path_graph(1), {0}).has_value());
}

TEST_CASE("path types enumerate relational realizations") {
    auto n = directed_path_graph(2);
    auto types = path_types(n, {0, 1, 2});
    REQUIRE(types.size() == 1);
    CHECK(structures_equal(types[0].path.carrier, n));
    CHECK(types[0].embedding == std::vector<int>{0, 1, 2});

    // parallel tuples in two relations: at least two types for one step
    Structure par;
    par.signature = Signature{{{"R", 2}, {"S", 2}}};
    par.size = 2;
    par.add("R", {0, 1});
    par.add("S", {0, 1});
    par.normalize();
    auto ptypes = path_types(par, {0, 1});
    CHECK(ptypes.size() == 2);
    CHECK(ptypes[0].path.steps[0].rel == "R"); // signature order first

    // ternary recovery
    Structure chain;
    chain.signature = Signature{{{"R", 3}, {"S", 3}}};
    chain.size = 5;
    chain.add("R", {0, 1, 3});
    chain.add("S", {1, 2, 4});
    chain.normalize();
    auto ct = path_types(chain, {0, 1, 2});
    REQUIRE(ct.size() == 1);
    CHECK(is_lpath(ct[0].path.carrier, ct[0].path.p).has_value());

    // every output passes is_lpath and embeds injectively
    for (const auto& t : ct) {
        CHECK(is_lpath(t.path.carrier, t.path.p).has_value());
        CHECK(is_homomorphism(t.embedding, t.path.carrier, chain));
        std::set<int> img(t.embedding.begin(), t.embedding.end());
        CHECK(img.size() == t.embedding.size());
    }

    CHECK_THROWS_AS(path_types(n, {0, 2}), Error);
    CHECK_THROWS_AS(path_types(n, {0}), Error);
}

TEST_CASE("orientation turns paths into directed structures") {
    for (const auto& path : fixtures::lpaths()) {
        auto o = orient_lpath(path);
        CHECK(is_directed(o.structure));
        CHECK(check_permutation_witness(path.carrier, o.structure, o.witness));
        auto generic = permutation_equivalent(path.carrier, o.structure);
        CHECK(generic.has_value());
        auto arc = arc_graph(o.structure);
        REQUIRE(arc.vertices.size() == path.p.size());
        // arc graph is exactly the directed path p(0) -> ... -> p(n)
        std::vector<std::pair<int, int>> expect;
        auto pos = [&](int x) {
            return static_cast<int>(std::lower_bound(arc.vertices.begin(), arc.vertices.end(), x) -
                                    arc.vertices.begin());
        };
        for (size_t i = 0; i + 1 < path.p.size(); ++i)
            expect.emplace_back(pos(path.p[i]), pos(path.p[i + 1]));
        std::sort(expect.begin(), expect.end());
        CHECK(graph_edges(arc.graph) == expect);
    }

    // already-oriented input gets identity permutations
    auto straight = *is_lpath(directed_path_graph(2), {0, 1, 2});
    auto o = orient_lpath(straight);
    CHECK(structures_equal(o.structure, straight.carrier));
    for (const auto& s : o.sigmas) CHECK(s == Mapping{0, 1});

    // arity-4 reorder: (a, p1, p0, b) becomes (p0, p1, a, b)
    auto wide = fixtures::lpaths()[4];
    auto ow = orient_lpath(wide);
    CHECK(ow.sigmas[0] == Mapping{2, 1, 0, 3});
    CHECK(ow.structure.tuples("R")[0] == Tuple{0, 1, 3, 4});
}

TEST_CASE("reconstruction through the point and edge objects") {
    auto spec = gra_spec();
    CHECK(spec.bullet.size == 1);
    CHECK(spec.relation_objects.at("E").object.tuples("E").size() == 1);
    CHECK(spec.relation_objects.at("E").h[0] != spec.relation_objects.at("E").h[1]);

    for (int n = 1; n <= 3; ++n)
        for (const auto& g : oriented_graphs_up_to_iso(n))
            CHECK(is_isomorphic(reconstruct(spec, g), g));

    // edgeless stays edgeless
    auto edgeless = make_structure(Signature::graph(), 3);
    auto r = reconstruct(spec, edgeless);
    CHECK(r.size == 3);
    CHECK(r.tuples("E").empty());

    // a single loop reconstructs to a single loop
    auto loop = make_graph(1, {{0, 0}});
    auto rl = reconstruct(spec, loop);
    CHECK(rl.size == 1);
    CHECK(rl.tuples("E").size() == 1);
}

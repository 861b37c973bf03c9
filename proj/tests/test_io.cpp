#include <catch2/catch_amalgamated.hpp>

#include "relgadget/dot.hpp"
#include "relgadget/fixtures.hpp"
#include "relgadget/generate.hpp"
#include "relgadget/json_io.hpp"

using namespace relgadget;

TEST_CASE("structure JSON matches the canonical shape") {
    auto g = make_graph(3, {{0, 1}, {1, 2}}, {"a", "b", "c"});
    auto j = structure_to_json(g);
    CHECK(j.dump() ==
          R"({"labels":["a","b","c"],"relations":{"E":[[0,1],[1,2]]},)"
          R"("signature":[{"arity":2,"name":"E"}],"size":3})");
    auto back = structure_from_json(j);
    CHECK(structures_equal(back, g));
    CHECK(back.labels == g.labels);
}

TEST_CASE("JSON round-trips are exact") {
    std::mt19937 rng(41);
    Signature sig{{{"R", 3}, {"S", 2}}};
    for (int it = 0; it < 100; ++it) {
        auto m = random_structure(rng, sig, 1 + static_cast<int>(rng() % 5), 5);
        auto j = structure_to_json(m);
        CHECK(structure_to_json(structure_from_json(j)) == j);
    }

    for (const auto& g : fixtures::gadgets()) {
        auto j = gadget_to_json(g);
        auto back = gadget_from_json(j);
        CHECK(gadget_to_json(back) == j);
        CHECK(structures_equal(back.carrier, g.carrier));
        CHECK(back.alpha == g.alpha);
        CHECK(back.A == g.A);
    }

    for (const auto& p : fixtures::lpaths()) {
        auto j = lpath_to_json(p);
        auto back = lpath_from_json(j);
        CHECK(lpath_to_json(back) == j);
    }

    auto phi = make_pp_formula(make_graph(3, {{0, 1}, {0, 2}}), {0});
    CHECK(pp_formula_to_json(pp_formula_from_json(pp_formula_to_json(phi))) ==
          pp_formula_to_json(phi));
}

TEST_CASE("tags serialize with the star output") {
    auto st = star(single_edge_graph(), fixtures::ternary_gadget());
    auto j = structure_to_json(st.structure, &st.table);
    REQUIRE(j.contains("tags"));
    LabelTable back_tags;
    auto back = structure_from_json(j, &back_tags);
    CHECK(structures_equal(back, st.structure));
    REQUIRE(back_tags.tags.size() == st.table.tags.size());
    CHECK(back_tags.tags == st.table.tags);
    CHECK(structure_to_json(back, &back_tags) == j);

    // an inner tag renders as {"inner":[u,v,c]}
    bool saw_inner = false;
    for (const auto& t : j.at("tags"))
        if (t.contains("inner")) saw_inner = true;
    CHECK(saw_inner);
}

TEST_CASE("witness and mined-gadget JSON round-trip") {
    auto host = subdivided_clique(3, 1).structure;
    auto w = detect_subdivided_clique(host, 3, 1);
    REQUIRE(w.has_value());
    auto j = clique_witness_to_json(*w);
    auto back = clique_witness_from_json(j);
    CHECK(clique_witness_to_json(back) == j);

    auto n_struct = star(complete_graph(3), path_gadget(1)).structure;
    auto mined = mine_gadget(n_struct, 3, 1);
    REQUIRE(mined.has_value());
    auto mj = mined_gadget_to_json(*mined);
    auto mback = mined_gadget_from_json(mj);
    CHECK(mined_gadget_to_json(mback) == mj);
}

TEST_CASE("DOT export distinguishes graph flavors") {
    auto undirected = undirected_cycle(3);
    auto dot = to_dot(undirected);
    CHECK(dot.find("graph G {") == 0);
    CHECK(dot.find("--") != std::string::npos);
    // each unordered edge once
    CHECK(std::count(dot.begin(), dot.end(), '-') == 2 * 3);

    auto directed = directed_cycle(3);
    auto ddot = to_dot(directed);
    CHECK(ddot.find("digraph G {") == 0);
    CHECK(ddot.find("->") != std::string::npos);

    auto st = star(single_edge_graph(), h_gadget());
    auto sdot = to_dot(st.structure, &st.table);
    CHECK(sdot.find("\"n0\"") != std::string::npos);
    CHECK(sdot.find("\"i0_1_1\"") != std::string::npos);

    CHECK_THROWS_AS(to_dot(make_structure(Signature{{{"R", 3}}}, 2)), Error);
}

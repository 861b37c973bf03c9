#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "relgadget/gadget.hpp"
#include "relgadget/generate.hpp"
#include "relgadget/hom.hpp"

using namespace relgadget;

namespace {

// the independent oracle: filter every one of |target|^|source| maps
std::vector<Mapping> naive_solve(const Structure& src, const Structure& tgt,
                                 const HomOptions& opt) {
    std::vector<Mapping> out;
    Mapping f(src.size, 0);
    const long long total = [&] {
        long long t = 1;
        for (int i = 0; i < src.size; ++i) t *= tgt.size;
        return t;
    }();
    if (tgt.size == 0 && src.size > 0) return out;
    for (long long code = 0; code < total; ++code) {
        long long c = code;
        for (int i = 0; i < src.size; ++i) {
            f[i] = static_cast<int>(c % tgt.size);
            c /= tgt.size;
        }
        bool ok = true;
        if (opt.injective) {
            std::set<int> img(f.begin(), f.end());
            ok = img.size() == f.size();
        }
        for (auto [k, v] : opt.pinned)
            if (f[k] != v) ok = false;
        if (ok && is_homomorphism(f, src, tgt, opt.strong)) out.push_back(f);
    }
    std::sort(out.begin(), out.end());
    if (opt.limit && static_cast<long long>(out.size()) > *opt.limit)
        out.resize(static_cast<size_t>(*opt.limit));
    return out;
}

} // namespace

TEST_CASE("solver matches the naive filter on all small graph pairs") {
    std::vector<Structure> all;
    for (int n = 1; n <= 2; ++n)
        for (auto& g : all_raw_graphs(n)) all.push_back(std::move(g));
    // a deterministic slice of size-3 structures to push past 200 pairs
    auto threes = all_raw_graphs(3);
    for (size_t i = 0; i < threes.size(); i += 37) all.push_back(threes[i]);

    long long pairs = 0;
    for (const auto& src : all)
        for (const auto& tgt : all) {
            ++pairs;
            for (bool strong : {false, true})
                for (bool injective : {false, true}) {
                    HomOptions opt;
                    opt.strong = strong;
                    opt.injective = injective;
                    REQUIRE(solve_mappings(src, tgt, opt) == naive_solve(src, tgt, opt));
                }
            if (src.size >= 1 && tgt.size >= 1) {
                HomOptions pinned;
                pinned.pinned[0] = tgt.size - 1;
                REQUIRE(solve_mappings(src, tgt, pinned) == naive_solve(src, tgt, pinned));
            }
        }
    CHECK(pairs >= 200);
}

TEST_CASE("hom counts from the module examples") {
    auto edge = make_graph(2, {{0, 1}});
    CHECK(hom_count(edge, h_graph()) == 6);

    CHECK(hom_count(edge, complete_graph(3)) == 6);

    CHECK(hom_exists(edge, undirected_cycle(3)));
    CHECK_FALSE(hom_exists(undirected_cycle(3), make_structure(Signature::graph(), 1)));

    // injective with |source| > |target| is empty by pigeonhole
    HomOptions inj;
    inj.injective = true;
    CHECK(solve_mappings(undirected_cycle(3), edge, inj).empty());
}

TEST_CASE("limit truncates the lexicographic sequence") {
    auto edge = make_graph(2, {{0, 1}});
    auto k3 = complete_graph(3);
    auto all = solve_mappings(edge, k3);
    HomOptions two;
    two.limit = 2;
    auto head = solve_mappings(edge, k3, two);
    REQUIRE(head.size() == 2);
    CHECK(head[0] == all[0]);
    CHECK(head[1] == all[1]);
}

TEST_CASE("strong homs are plain homs") {
    std::mt19937 rng(5);
    for (int it = 0; it < 60; ++it) {
        auto src = random_raw_graph(rng, 1 + static_cast<int>(rng() % 3), 40);
        auto tgt = random_raw_graph(rng, 1 + static_cast<int>(rng() % 3), 40);
        HomOptions strong;
        strong.strong = true;
        auto strict = solve_mappings(src, tgt, strong);
        auto plain = solve_mappings(src, tgt);
        std::set<Mapping> plain_set(plain.begin(), plain.end());
        for (const auto& f : strict) CHECK(plain_set.count(f));
    }
}

TEST_CASE("is_homomorphism handles the documented cases") {
    auto m = undirected_cycle(4);
    Mapping id{0, 1, 2, 3};
    CHECK(is_homomorphism(id, m, m, true));

    // constant map into a loop vertex
    auto loop = make_graph(1, {{0, 0}});
    Mapping constant{0, 0, 0, 0};
    CHECK(is_homomorphism(constant, m, loop));
    CHECK_FALSE(is_homomorphism(Mapping{0, 0}, make_graph(2, {{0, 1}}),
                                make_structure(Signature::graph(), 1)));

    // edge-reversing map on a single directed edge
    auto e = make_graph(2, {{0, 1}});
    CHECK_FALSE(is_homomorphism(Mapping{1, 0}, e, e));
}

TEST_CASE("isomorphisms are bijective strong homs with strong inverses") {
    auto k3 = complete_graph(3);
    CHECK(isomorphisms(k3, k3).size() == 6);

    auto edge = make_graph(2, {{0, 1}});
    CHECK(isomorphisms(edge, make_structure(Signature::graph(), 2)).empty());
    CHECK(is_isomorphic(edge, edge));

    // relabelled copies are isomorphic
    auto p = make_graph(3, {{0, 1}, {1, 2}});
    auto q = make_graph(3, {{2, 0}, {0, 1}});
    CHECK(is_isomorphic(p, q));

    CHECK_THROWS_AS(isomorphisms(edge, make_structure(Signature{{{"R", 3}}}, 2)), Error);
}

TEST_CASE("rigidity") {
    CHECK(is_rigid(h_graph()));
    CHECK_FALSE(is_rigid(make_graph(2, {{0, 1}, {1, 0}})));
    CHECK_FALSE(is_rigid(make_structure(Signature::graph(), 2)));
    auto endos = endomorphisms(h_graph());
    REQUIRE(endos.size() == 1);
    CHECK(endos[0].map == Mapping{0, 1, 2, 3, 4});
}

TEST_CASE("composition is a homomorphism and respects identities") {
    auto e = make_graph(2, {{0, 1}});
    auto k3 = complete_graph(3);
    auto homs = solve(e, k3);
    REQUIRE(!homs.empty());
    auto id_e = identity_hom(e);
    for (const auto& f : homs) {
        auto left = compose(id_e, f);
        CHECK(left.map == f.map);
    }
    auto k3_endos = solve(k3, k3);
    for (const auto& f : homs)
        for (const auto& g : k3_endos) {
            auto c = compose(f, g);
            CHECK(is_homomorphism(c.map, e, k3));
        }
    CHECK_THROWS_AS(compose(homs[0], homs[0]), Error);
}

TEST_CASE("closure of composition over solver output") {
    std::mt19937 rng(9);
    for (int it = 0; it < 30; ++it) {
        auto a = random_raw_graph(rng, 1 + static_cast<int>(rng() % 3), 50);
        auto b = random_raw_graph(rng, 1 + static_cast<int>(rng() % 3), 50);
        auto c = random_raw_graph(rng, 1 + static_cast<int>(rng() % 3), 50);
        for (const auto& f : solve(a, b))
            for (const auto& g : solve(b, c))
                CHECK(is_homomorphism(compose(f, g).map, a, c));
    }
}

TEST_CASE("solve is deterministic") {
    auto k3 = complete_graph(3);
    auto first = solve_mappings(k3, k3);
    auto second = solve_mappings(k3, k3);
    CHECK(first == second);
}

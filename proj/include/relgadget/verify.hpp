#ifndef RELGADGET_VERIFY_HPP
#define RELGADGET_VERIFY_HPP

#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "relgadget/density.hpp"
#include "relgadget/fixtures.hpp"
#include "relgadget/gadget.hpp"
#include "relgadget/generate.hpp"
#include "relgadget/logic.hpp"

namespace relgadget::verify {

struct CriterionResult {
    std::string id;
    std::string name;
    bool pass = false;
    long long instances = 0;
    std::string detail;
    double seconds = 0.0;
};

using LogFn = std::function<void(const std::string&)>;

namespace detail {

inline void nolog(const std::string&) {}

struct Checker {
    std::string id, name;
    LogFn log;
    long long instances = 0;
    long long failures = 0;
    std::string first_failure;

    Checker(std::string id_, std::string name_, LogFn log_)
        : id(std::move(id_)), name(std::move(name_)), log(std::move(log_)) {}

    void check(const std::string& instance, bool ok, const std::string& expected,
               const std::string& got) {
        ++instances;
        if (log) {
            std::ostringstream line;
            line << id << " " << instance << " expected=" << expected << " got=" << got << " "
                 << (ok ? "PASS" : "FAIL");
            log(line.str());
        }
        if (!ok) {
            ++failures;
            if (first_failure.empty())
                first_failure = instance + " expected=" + expected + " got=" + got;
        }
    }

    void check_eq(const std::string& instance, long long expected, long long got) {
        check(instance, expected == got, std::to_string(expected), std::to_string(got));
    }

    void check_true(const std::string& instance, bool got) {
        check(instance, got, "true", got ? "true" : "false");
    }

    CriterionResult result(double seconds) const {
        return {id, name, failures == 0, instances, first_failure, seconds};
    }
};

template <typename F>
CriterionResult timed(const std::string& id, const std::string& name, LogFn log, F&& body) {
    Checker c(id, name, log);
    auto t0 = std::chrono::steady_clock::now();
    body(c);
    auto t1 = std::chrono::steady_clock::now();
    return c.result(std::chrono::duration<double>(t1 - t0).count());
}

// naive oracle for the hom engine: filter all |target|^|source| maps
inline std::vector<Mapping> naive_homs(const Structure& src, const Structure& tgt,
                                       const HomOptions& opt) {
    std::vector<Mapping> out;
    if (tgt.size == 0 && src.size > 0) return out;
    long long total = 1;
    for (int i = 0; i < src.size; ++i) total *= tgt.size;
    Mapping f(src.size, 0);
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
            if (ok && f[k] != v) ok = false;
        if (ok && is_homomorphism(f, src, tgt, opt.strong)) out.push_back(f);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace detail

// C1: hom engine agrees with naive map filtering, all flag combinations.
inline CriterionResult c1_hom_oracle(unsigned, LogFn log = detail::nolog) {
    return detail::timed("C1", "hom-oracle", log, [&](detail::Checker& c) {
        std::vector<Structure> all;
        for (int n = 1; n <= 2; ++n)
            for (auto& g : all_raw_graphs(n)) all.push_back(std::move(g));
        auto threes = all_raw_graphs(3);
        for (size_t i = 0; i < threes.size(); i += 37) all.push_back(threes[i]);
        long long pairs = 0;
        for (size_t i = 0; i < all.size(); ++i)
            for (size_t j = 0; j < all.size(); ++j) {
                ++pairs;
                bool pair_ok = true;
                for (bool strong : {false, true})
                    for (bool injective : {false, true}) {
                        HomOptions opt;
                        opt.strong = strong;
                        opt.injective = injective;
                        if (solve_mappings(all[i], all[j], opt) !=
                            detail::naive_homs(all[i], all[j], opt))
                            pair_ok = false;
                        if (all[j].size >= 1) {
                            opt.pinned[0] = all[j].size - 1;
                            if (solve_mappings(all[i], all[j], opt) !=
                                detail::naive_homs(all[i], all[j], opt))
                                pair_ok = false;
                        }
                    }
                c.check_true("pair " + std::to_string(i) + "," + std::to_string(j), pair_ok);
            }
        c.check_true("at least 200 pairs", pairs >= 200);
    });
}

// C2: phi injective+strong on the fixture grid, image intersections exact.
inline CriterionResult c2_phi(unsigned, LogFn log = detail::nolog) {
    return detail::timed("C2", "phi-correctness", log, [&](detail::Checker& c) {
        auto gadgets = fixtures::gadgets();
        auto graphs = fixtures::graphs();
        for (size_t mi = 0; mi < gadgets.size(); ++mi) {
            const auto& m = gadgets[mi];
            for (size_t gi = 0; gi < graphs.size(); ++gi) {
                const auto& g = graphs[gi];
                auto st = star(g, m);
                auto idx = st.table.index();
                auto edges = graph_edges(g);
                std::string tag = "gadget" + std::to_string(mi) + " graph" + std::to_string(gi);
                bool inj_strong = true;
                std::vector<Mapping> phis;
                for (auto [u, v] : edges) {
                    auto f = phi_mapping(m, idx, u, v);
                    std::set<int> img(f.begin(), f.end());
                    if (img.size() != f.size() ||
                        !is_homomorphism(f, m.carrier, st.structure, true))
                        inj_strong = false;
                    phis.push_back(std::move(f));
                }
                c.check_true(tag + " phi injective+strong", inj_strong);
                bool inter_ok = true;
                for (size_t i = 0; i < edges.size() && inter_ok; ++i)
                    for (size_t j = 0; j < edges.size() && inter_ok; ++j) {
                        if (i == j) continue;
                        auto [u, v] = edges[i];
                        auto [s, t] = edges[j];
                        std::set<int> expect;
                        for (int p : m.P) expect.insert(idx.at(Tag::shared(p)));
                        if (u == s) {
                            for (int a : m.A) expect.insert(idx.at(Tag::apoint(u, a)));
                            expect.insert(idx.at(Tag::native(u)));
                        }
                        if (v == t) {
                            for (int b : m.B) expect.insert(idx.at(Tag::bpoint(v, b)));
                            expect.insert(idx.at(Tag::native(v)));
                        }
                        if (u == t) expect.insert(idx.at(Tag::native(u)));
                        if (v == s) expect.insert(idx.at(Tag::native(v)));
                        std::set<int> a_img(phis[i].begin(), phis[i].end());
                        std::set<int> got;
                        for (int x : phis[j])
                            if (a_img.count(x)) got.insert(x);
                        if (got != expect) inter_ok = false;
                    }
                c.check_true(tag + " intersections", inter_ok);
            }
        }
    });
}

// C3: bifunctor laws and faithfulness.
inline CriterionResult c3_bifunctor(unsigned, LogFn log = detail::nolog) {
    return detail::timed("C3", "bifunctor-laws", log, [&](detail::Checker& c) {
        auto m = path_gadget(1);
        auto n = fixtures::diamond_gadget();
        auto rhos = gadget_homs(m, n);
        c.check_eq("gadget homs path(1)->diamond", 2, static_cast<long long>(rhos.size()));

        std::vector<Structure> family;
        for (int k = 1; k <= 3; ++k)
            for (auto& g : all_raw_graphs(k))
                if (!g.tuples("E").empty()) family.push_back(std::move(g));

        // identity law on every family member, for each fixture gadget
        bool id_ok = true;
        for (const auto& g : family) {
            for (const auto& fix : fixtures::gadgets()) {
                auto st = star(g, fix);
                auto idx = st.table.index();
                Mapping idg(g.size);
                for (int i = 0; i < g.size; ++i) idg[i] = i;
                Mapping idm(fix.carrier.size);
                for (int i = 0; i < fix.carrier.size; ++i) idm[i] = i;
                auto sb = star_bi_mapping(idg, idm, fix, st.table, idx);
                for (size_t i = 0; i < sb.size(); ++i)
                    if (sb[i] != static_cast<int>(i)) id_ok = false;
            }
        }
        c.check_true("identity law", id_ok);

        // faithfulness: distinct (f, rho) give distinct f ⋆ rho, exhaustively
        std::vector<Labeled> stars_m, stars_n;
        std::vector<std::map<Tag, int>> idx_n;
        stars_m.reserve(family.size());
        for (const auto& g : family) {
            stars_m.push_back(star(g, m));
            stars_n.push_back(star(g, n));
            idx_n.push_back(stars_n.back().table.index());
        }
        bool faithful = true;
        long long checked_pairs = 0;
        for (size_t i = 0; i < family.size() && faithful; ++i)
            for (size_t j = 0; j < family.size() && faithful; ++j) {
                auto homs = solve_mappings(family[i], family[j]);
                std::set<Mapping> images;
                for (const auto& f : homs)
                    for (const auto& rho : rhos) {
                        if (!images.insert(star_bi_mapping(f, rho, n, stars_m[i].table, idx_n[j]))
                                 .second)
                            faithful = false;
                        ++checked_pairs;
                    }
            }
        c.check_true("faithfulness over " + std::to_string(checked_pairs) + " (f,rho) pairs",
                     faithful);

        // composition law on a deterministic slice of triples
        bool comp_ok = true;
        std::vector<Structure> ks{directed_cycle(3), make_graph(1, {{0, 0}})};
        auto rho_back = gadget_homs(n, m);
        for (size_t i = 0; i < family.size() && comp_ok; i += 5)
            for (size_t j = 0; j < family.size() && comp_ok; j += 5)
                for (const auto& k : ks) {
                    auto fs = solve_mappings(family[i], family[j]);
                    auto gs = solve_mappings(family[j], k);
                    size_t fl = std::min<size_t>(fs.size(), 3);
                    size_t gl = std::min<size_t>(gs.size(), 3);
                    auto st_i = star(family[i], m);
                    auto idx_j_n = star(family[j], n).table.index();
                    auto idx_k_m = star(k, m).table.index();
                    for (size_t a = 0; a < fl; ++a)
                        for (size_t b = 0; b < gl; ++b) {
                            for (const auto& rho : rhos)
                                for (const auto& mu : rho_back) {
                                    // (f then g) ⋆ (rho then mu) = (f ⋆ rho) then (g ⋆ mu)
                                    auto fg = compose_mappings(fs[a], gs[b]);
                                    auto rm = compose_mappings(rho, mu);
                                    auto lhs =
                                        star_bi_mapping(fg, rm, m, st_i.table, idx_k_m);
                                    auto r1 = star_bi_mapping(fs[a], rho, n, st_i.table, idx_j_n);
                                    auto r2 = star_bi_mapping(gs[b], mu, m,
                                                              star(family[j], n).table, idx_k_m);
                                    if (compose_mappings(r1, r2) != lhs) comp_ok = false;
                                }
                        }
                }
        c.check_true("composition law", comp_ok);
    });
}

// C4: ⊛ associativity grid, isomorphisms verified by the hom engine.
inline CriterionResult c4_assoc(unsigned, LogFn log = detail::nolog) {
    return detail::timed("C4", "star-associativity", log, [&](detail::Checker& c) {
        std::vector<Structure> gs{single_edge_graph(), directed_path_graph(2), directed_cycle(3)};
        std::vector<Gadget> hs{h_gadget(), path_gadget(0)};
        std::vector<Gadget> ms{path_gadget(1), fixtures::ternary_shared_gadget()};
        for (size_t a = 0; a < gs.size(); ++a)
            for (size_t b = 0; b < hs.size(); ++b)
                for (size_t d = 0; d < ms.size(); ++d) {
                    std::string tag = "G" + std::to_string(a) + " H" + std::to_string(b) + " M" +
                                      std::to_string(d);
                    bool ok = false;
                    try {
                        auto iso = assoc_check(gs[a], hs[b], ms[d]);
                        ok = is_homomorphism(iso.map, *iso.source, *iso.target, true);
                        std::set<int> img(iso.map.begin(), iso.map.end());
                        ok = ok && static_cast<int>(img.size()) == iso.source->size &&
                             iso.source->size == iso.target->size;
                    } catch (const Error&) {
                        ok = false;
                    }
                    c.check_true(tag, ok);
                }
    });
}

// C5: Arc(G ⋆ M) equals G ⋆ Arc(M) exactly, after the canonical bijection.
inline CriterionResult c5_arcstar(unsigned, LogFn log = detail::nolog, int max_vertices = 5) {
    return detail::timed("C5", "arc-star", log, [&](detail::Checker& c) {
        auto graphs = oriented_graphs_up_to_iso(2, max_vertices, [](const Structure& g) {
            return !has_isolated_points(g) && g.size >= 2;
        });
        auto systems = fixtures::systems();
        for (size_t si = 0; si < systems.size(); ++si) {
            const auto& m = systems[si];
            auto am = arc_gadget(m);
            bool all_ok = true;
            long long count = 0;
            for (const auto& g : graphs) {
                auto st = star(g, m);
                auto star_idx = st.table.index();
                auto arc = arc_graph(st.structure);
                auto right = star(g, am.gadget);
                bool ok = right.structure.size == arc.graph.size;
                // canonical bijection: right vertex -> arc position
                std::vector<int> bij(right.structure.size, -1);
                auto arc_pos = [&](int star_elem) {
                    auto it = std::lower_bound(arc.vertices.begin(), arc.vertices.end(), star_elem);
                    return (it != arc.vertices.end() && *it == star_elem)
                               ? static_cast<int>(it - arc.vertices.begin())
                               : -1;
                };
                for (int i = 0; ok && i < right.structure.size; ++i) {
                    const Tag& t = right.table.tags[i];
                    Tag star_tag = t.kind == TagKind::Native
                                       ? Tag::native(t.a)
                                       : Tag::inner(t.a, t.b, am.vertices[t.c]);
                    auto it = star_idx.find(star_tag);
                    if (it == star_idx.end()) {
                        ok = false;
                        break;
                    }
                    bij[i] = arc_pos(it->second);
                    if (bij[i] < 0) ok = false;
                }
                if (ok) {
                    TupleSet mapped;
                    for (const auto& t : right.structure.tuples("E"))
                        mapped.push_back({bij[t[0]], bij[t[1]]});
                    sort_unique(mapped);
                    ok = mapped == arc.graph.tuples("E");
                }
                // second claim: Arc(phi) = phi of the arc gadget
                if (ok) {
                    auto right_idx = right.table.index();
                    for (auto [u, v] : graph_edges(g)) {
                        auto f = phi_mapping(m, star_idx, u, v);
                        auto fa = phi_mapping(am.gadget, right_idx, u, v);
                        for (int k = 0; ok && k < am.gadget.carrier.size; ++k)
                            if (arc_pos(f[am.vertices[k]]) != bij[fa[k]]) ok = false;
                    }
                }
                all_ok = all_ok && ok;
                ++count;
            }
            c.check_true("system " + std::to_string(si) + " over " + std::to_string(count) +
                             " digraphs",
                         all_ok);
        }
    });
}

// C6: the only homs H^(r) -> G ⋆ H^(r) are the phis; count equals |E(G)|.
inline CriterionResult c6_hcal(unsigned, LogFn log = detail::nolog, int max_vertices = 4,
                               int max_r = 1) {
    return detail::timed("C6", "hcal-rigidity", log, [&](detail::Checker& c) {
        auto graphs = oriented_graphs_up_to_iso(2, max_vertices, [](const Structure& g) {
            return !has_isolated_points(g) && is_well_founded(g);
        });
        for (int r = 0; r <= max_r; ++r) {
            auto hr = subdivide(h_graph(), r, SubdivideMode::Directed);
            auto gadget = make_gadget(hr.structure, 0, 4);
            for (size_t gi = 0; gi < graphs.size(); ++gi) {
                const auto& g = graphs[gi];
                auto st = star(g, gadget);
                auto idx = st.table.index();
                std::set<Mapping> phis;
                for (auto [u, v] : graph_edges(g)) phis.insert(phi_mapping(gadget, idx, u, v));
                auto homs = solve_mappings(hr.structure, st.structure);
                std::string tag = "r=" + std::to_string(r) + " graph" + std::to_string(gi);
                c.check_eq(tag + " count", static_cast<long long>(g.tuples("E").size()),
                           static_cast<long long>(homs.size()));
                c.check_true(tag + " all-phi",
                             std::set<Mapping>(homs.begin(), homs.end()) == phis);
            }
        }
    });
}

// C7: - ⋆ (H,s,t) is full and faithful on connected digraphs up to 4 vertices.
inline CriterionResult c7_fullembed(unsigned, LogFn log = detail::nolog, int max_vertices = 4) {
    return detail::timed("C7", "full-embedding", log, [&](detail::Checker& c) {
        auto graphs = oriented_graphs_up_to_iso(2, max_vertices, [](const Structure& g) {
            return !g.tuples("E").empty() && is_weakly_connected(g) && !has_isolated_points(g);
        });
        auto rep = verify_full_embedding(h_gadget(), graphs);
        c.check_true("condition 2 (only phis) on " + std::to_string(graphs.size()) + " graphs",
                     rep.condition2);
        bool counts = true, bijections = true;
        for (const auto& [pr, p] : rep.pairs) {
            if (p.graph_homs != p.star_homs) counts = false;
            if (!p.injective || !p.surjective) bijections = false;
        }
        c.check_true("hom counts equal on " + std::to_string(rep.pairs.size()) + " pairs", counts);
        c.check_true("star action bijective", bijections);
    });
}

// C8: reconstruction through the point/edge objects is the identity up to iso.
inline CriterionResult c8_reconstruct(unsigned, LogFn log = detail::nolog) {
    return detail::timed("C8", "reconstruction", log, [&](detail::Checker& c) {
        auto spec = gra_spec();
        for (int n = 1; n <= 4; ++n) {
            auto graphs = oriented_graphs_up_to_iso(n);
            bool ok = true;
            for (const auto& g : graphs)
                if (!is_isomorphic(reconstruct(spec, g), g)) ok = false;
            c.check_true("all digraphs on " + std::to_string(n) + " vertices (" +
                             std::to_string(graphs.size()) + ")",
                         ok);
        }
    });
}

// C9: component-wise pp satisfaction agrees with direct satisfaction.
inline CriterionResult c9_ppcomp(unsigned seed, LogFn log = detail::nolog) {
    return detail::timed("C9", "pp-components", log, [&](detail::Checker& c) {
        std::vector<Structure> targets;
        for (int n = 1; n <= 3; ++n)
            for (auto& g : all_raw_graphs(n)) targets.push_back(std::move(g));

        long long disagreements = 0, instances = 0;
        for (int vars = 1; vars <= 4; ++vars) {
            std::vector<std::pair<int, int>> cells;
            for (int u = 0; u < vars; ++u)
                for (int v = 0; v < vars; ++v) cells.emplace_back(u, v);
            // all conjunct sets of size <= 3
            std::vector<std::vector<int>> conjunct_sets;
            const int nc = static_cast<int>(cells.size());
            conjunct_sets.push_back({});
            for (int a = 0; a < nc; ++a) {
                conjunct_sets.push_back({a});
                for (int b = a + 1; b < nc; ++b) {
                    conjunct_sets.push_back({a, b});
                    for (int d = b + 1; d < nc; ++d) conjunct_sets.push_back({a, b, d});
                }
            }
            for (const auto& set : conjunct_sets) {
                std::vector<std::pair<int, int>> edges;
                for (int a : set) edges.push_back(cells[a]);
                auto canonical = make_graph(vars, edges);
                for (int nfree = 1; nfree <= std::min(2, vars); ++nfree) {
                    std::vector<int> free;
                    for (int k = 0; k < nfree; ++k) free.push_back(k);
                    PPFormula phi{canonical, free};
                    auto comps = pp_components(phi);
                    for (const auto& a : targets) {
                        if (a.size == 0) continue;
                        long long tuples = 1;
                        for (int k = 0; k < nfree; ++k) tuples *= a.size;
                        for (long long code = 0; code < tuples; ++code) {
                            long long cc = code;
                            Tuple abar(nfree);
                            for (int k = 0; k < nfree; ++k) {
                                abar[k] = static_cast<int>(cc % a.size);
                                cc /= a.size;
                            }
                            bool direct = pp_satisfies(a, abar, phi);
                            bool all = true;
                            for (const auto& gamma : comps)
                                if (!pp_satisfies(a, abar, gamma)) {
                                    all = false;
                                    break;
                                }
                            ++instances;
                            if (direct != all) ++disagreements;
                        }
                    }
                }
            }
        }
        c.check_eq("exhaustive grid disagreements over " + std::to_string(instances) +
                       " instances",
                   0, disagreements);

        std::mt19937 rng(seed);
        long long rand_bad = 0;
        for (int it = 0; it < 500; ++it) {
            int vars = 2 + static_cast<int>(rng() % 5);
            auto canonical = random_raw_graph(rng, vars, 35);
            int nfree = 1 + static_cast<int>(rng() % 2);
            std::vector<int> free;
            for (int k = 0; k < std::min(nfree, vars); ++k) free.push_back(k);
            PPFormula phi{canonical, free};
            int asize = 1 + static_cast<int>(rng() % 4);
            auto a = random_raw_graph(rng, asize, 45);
            Tuple abar;
            for (size_t k = 0; k < free.size(); ++k)
                abar.push_back(static_cast<int>(rng() % asize));
            if (!pp_components_agree(a, abar, phi)) ++rand_bad;
        }
        c.check_eq("500 random instances disagreements", 0, rand_bad);
    });
}

// C10: the four canonical colourings classify as themselves; a non-canonical
// colouring classifies as nothing.
inline CriterionResult c10_classifier(unsigned, LogFn log = detail::nolog) {
    return detail::timed("C10", "canonical-classifier", log, [&](detail::Checker& c) {
        const int n = 5;
        std::map<std::pair<int, int>, int> constant, by_first, by_second, injective, engineered;
        int fresh = 100;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                constant[{i, j}] = 7;
                by_first[{i, j}] = i;
                by_second[{i, j}] = j;
                injective[{i, j}] = i * n + j;
                engineered[{i, j}] = fresh++;
            }
        engineered[{0, 1}] = engineered[{2, 3}] = 0;
        c.check_true("constant -> {1}", classify_canonical(n, constant) == std::set<int>{1});
        c.check_true("chi(i,j)=i -> {2}", classify_canonical(n, by_first) == std::set<int>{2});
        c.check_true("chi(i,j)=j -> {3}", classify_canonical(n, by_second) == std::set<int>{3});
        c.check_true("injective -> {4}", classify_canonical(n, injective) == std::set<int>{4});
        c.check_true("engineered -> {}", classify_canonical(n, engineered).empty());
    });
}

// C11: subdivided-clique detection with a naive-injective oracle.
inline CriterionResult c11_density(unsigned seed, LogFn log = detail::nolog) {
    return detail::timed("C11", "density-detection", log, [&](detail::Checker& c) {
        for (int n = 1; n <= 4; ++n)
            for (int r = 0; r <= 2; ++r) {
                auto host = subdivided_clique(n, r).structure;
                c.check_true("K_" + std::to_string(n) + "^" + std::to_string(r) + " self",
                             detect_subdivided_clique(host, n, r).has_value());
            }
        c.check_true("C6 contains K_3^1",
                     detect_subdivided_clique(undirected_cycle(6), 3, 1).has_value());
        c.check_true("C5 lacks K_3^1",
                     !detect_subdivided_clique(undirected_cycle(5), 3, 1).has_value());

        auto naive = [](const Structure& host, int n, int r) {
            auto pattern = subdivided_clique(n, r).structure;
            if (pattern.size > host.size) return false;
            std::vector<int> f(pattern.size, -1);
            std::vector<char> used(host.size, 0);
            std::function<bool(int)> rec = [&](int v) -> bool {
                if (v == pattern.size) return is_homomorphism(f, pattern, host);
                for (int x = 0; x < host.size; ++x) {
                    if (used[x]) continue;
                    f[v] = x;
                    used[x] = 1;
                    if (rec(v + 1)) return true;
                    used[x] = 0;
                }
                return false;
            };
            return rec(0);
        };
        std::vector<Structure> hosts{undirected_cycle(5), undirected_cycle(6), undirected_cycle(7),
                                     complete_graph(4), subdivided_clique(3, 1).structure};
        std::mt19937 rng(seed);
        for (int it = 0; it < 50; ++it)
            hosts.push_back(random_undirected_graph(rng, 4 + static_cast<int>(rng() % 4), 50));
        bool oracle_ok = true;
        long long cases = 0;
        for (const auto& host : hosts)
            for (auto [n, r] :
                 std::vector<std::pair<int, int>>{{2, 0}, {2, 1}, {2, 2}, {3, 0}, {3, 1}}) {
                ++cases;
                if (detect_subdivided_clique(host, n, r).has_value() != naive(host, n, r))
                    oracle_ok = false;
            }
        c.check_true("oracle agreement on " + std::to_string(cases) + " host/pattern cases",
                     oracle_ok);
    });
}

// C12: well-foundedness agrees with a sink-elimination oracle.
inline CriterionResult c12_wellfounded(unsigned seed, LogFn log = detail::nolog) {
    return detail::timed("C12", "well-foundedness", log, [&](detail::Checker& c) {
        auto oracle = [](const Structure& g) {
            std::vector<std::vector<int>> adj(g.size);
            std::vector<int> outdeg(g.size, 0);
            for (const auto& t : g.tuples("E")) {
                if (t[0] == t[1]) return false;
                adj[t[1]].push_back(t[0]);
                ++outdeg[t[0]];
            }
            std::vector<int> stack;
            for (int v = 0; v < g.size; ++v)
                if (outdeg[v] == 0) stack.push_back(v);
            int removed = 0;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                ++removed;
                for (int w : adj[v])
                    if (--outdeg[w] == 0) stack.push_back(w);
            }
            return removed == g.size;
        };
        for (int n = 1; n <= 4; ++n) {
            bool ok = true;
            long long count = 0;
            for (const auto& g : all_raw_graphs(n)) {
                ++count;
                if (is_well_founded(g) != oracle(g)) ok = false;
            }
            c.check_true("exhaustive n=" + std::to_string(n) + " (" + std::to_string(count) + ")",
                         ok);
        }
        std::mt19937 rng(seed);
        bool ok = true;
        for (int it = 0; it < 1000; ++it) {
            auto g = random_raw_graph(rng, 1 + static_cast<int>(rng() % 8),
                                      5 + static_cast<int>(rng() % 40));
            if (is_well_founded(g) != oracle(g)) ok = false;
        }
        c.check_true("1000 random digraphs <= 8 vertices", ok);
    });
}

// C13: the miner recovers a gadget whose star re-embeds into the source.
inline CriterionResult c13_mine_roundtrip(unsigned, LogFn log = detail::nolog) {
    return detail::timed("C13", "miner-roundtrip", log, [&](detail::Checker& c) {
        std::vector<std::pair<int, Gadget>> grid{
            {3, path_gadget(0)}, {3, path_gadget(1)}, {3, fixtures::ternary_path_system()},
            {4, path_gadget(0)}, {4, path_gadget(1)}, {4, fixtures::ternary_path_system()},
        };
        for (size_t i = 0; i < grid.size(); ++i) {
            auto [m, fixture] = grid[i];
            int r = arc_path_length(fixture) - 1;
            auto n_struct = star(complete_graph(m), fixture).structure;
            auto mined = mine_gadget(n_struct, m, r);
            std::string tag = "m=" + std::to_string(m) + " fixture" + std::to_string(i);
            if (!mined) {
                c.check_true(tag + " mined", false);
                continue;
            }
            c.check_true(tag + " verified_m>=" + std::to_string(m), mined->verified_m >= m);
            HomOptions inj;
            inj.injective = true;
            auto image = star(complete_graph(m), mined->gadget).structure;
            c.check_true(tag + " injective re-embedding", hom_exists(image, n_struct, inj));
        }
    });
}

// C14: orientation of the fixture paths.
inline CriterionResult c14_orientation(unsigned, LogFn log = detail::nolog) {
    return detail::timed("C14", "orientation", log, [&](detail::Checker& c) {
        auto paths = fixtures::lpaths();
        for (size_t i = 0; i < paths.size(); ++i) {
            const auto& path = paths[i];
            auto o = orient_lpath(path);
            std::string tag = "path" + std::to_string(i);
            c.check_true(tag + " directed", is_directed(o.structure));
            c.check_true(tag + " witness",
                         check_permutation_witness(path.carrier, o.structure, o.witness));
            auto arc = arc_graph(o.structure);
            bool arc_ok = arc.vertices.size() == path.p.size();
            if (arc_ok) {
                auto pos = [&](int x) {
                    return static_cast<int>(
                        std::lower_bound(arc.vertices.begin(), arc.vertices.end(), x) -
                        arc.vertices.begin());
                };
                TupleSet expect;
                for (size_t k = 0; k + 1 < path.p.size(); ++k)
                    expect.push_back({pos(path.p[k]), pos(path.p[k + 1])});
                sort_unique(expect);
                arc_ok = expect == arc.graph.tuples("E");
            }
            c.check_true(tag + " arc is the joint path", arc_ok);
        }
    });
}

// --- suite registry -------------------------------------------------------------

inline std::vector<CriterionResult> run_suite(const std::string& which, unsigned seed,
                                              LogFn log = detail::nolog) {
    using Fn = std::function<CriterionResult(unsigned, LogFn)>;
    struct Entry {
        const char* suite;
        Fn fn;
    };
    static const std::vector<Entry> entries = {
        {"hom-oracle", [](unsigned s, LogFn l) { return c1_hom_oracle(s, l); }},
        {"phi", [](unsigned s, LogFn l) { return c2_phi(s, l); }},
        {"bifunctor", [](unsigned s, LogFn l) { return c3_bifunctor(s, l); }},
        {"assoc", [](unsigned s, LogFn l) { return c4_assoc(s, l); }},
        {"arcstar", [](unsigned s, LogFn l) { return c5_arcstar(s, l); }},
        {"hcal", [](unsigned s, LogFn l) { return c6_hcal(s, l); }},
        {"fullembed", [](unsigned s, LogFn l) { return c7_fullembed(s, l); }},
        {"reconstruct", [](unsigned s, LogFn l) { return c8_reconstruct(s, l); }},
        {"ppcomp", [](unsigned s, LogFn l) { return c9_ppcomp(s, l); }},
        {"classifier", [](unsigned s, LogFn l) { return c10_classifier(s, l); }},
        {"density", [](unsigned s, LogFn l) { return c11_density(s, l); }},
        {"wellfounded", [](unsigned s, LogFn l) { return c12_wellfounded(s, l); }},
        {"mine-roundtrip", [](unsigned s, LogFn l) { return c13_mine_roundtrip(s, l); }},
        {"orientation", [](unsigned s, LogFn l) { return c14_orientation(s, l); }},
    };
    std::vector<CriterionResult> out;
    for (const auto& e : entries)
        if (which == "all" || which == e.suite) out.push_back(e.fn(seed, log));
    if (out.empty()) throw Error(Err::BadInput, "unknown verification suite " + which);
    return out;
}

inline bool all_passed(const std::vector<CriterionResult>& rs) {
    for (const auto& r : rs)
        if (!r.pass) return false;
    return true;
}

} // namespace relgadget::verify

#endif

// Command-line surface over the library: constructions, searches, and the
// verification suites.  Exit codes: 0 success, 1 domain error, 2 usage error,
// 3 verification failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "relgadget/dot.hpp"
#include "relgadget/json_io.hpp"
#include "relgadget/verify.hpp"

using namespace relgadget;

namespace {

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Usage("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw Usage(path + ": " + e.what());
    }
    return j;
}

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
    } else {
        std::ofstream out(out_path);
        if (!out) throw Usage("cannot write " + out_path);
        out << text;
        if (!text.empty() && text.back() != '\n') out << '\n';
    }
}

void emit_json(const std::string& out_path, const json& j) {
    write_output(out_path, j.dump(2));
}

// graph output honoring --format json|dot
void emit_graph(const std::string& out_path, const std::string& format, const Structure& g,
                const LabelTable* tags) {
    if (format == "dot")
        write_output(out_path, to_dot(g, tags));
    else
        emit_json(out_path, structure_to_json(g, tags));
}

std::map<int, int> parse_pin(const std::string& text) {
    std::map<int, int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos) throw Usage("pin entries look like key=value");
        out[std::stoi(item.substr(0, eq))] = std::stoi(item.substr(eq + 1));
    }
    return out;
}

Tuple parse_tuple(const std::string& text) {
    Tuple out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stoi(item));
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite relational structures: gadget calculus and homomorphism search"};
    app.require_subcommand(1);

    std::string in_path, out_path, second_path, format = "json", mode = "undirected";
    std::string from_path, to_path, formula_path, target_path, spec_name = "gra", tuple_text,
                pin_text, suite = "all";
    int arg_n = 0, arg_r = 0, arg_u = 0, arg_v = 0, max_n = 4, max_r = 2;
    int max_vertices = -1, verify_max_r = -1;
    long long limit = -1;
    unsigned seed = 1;
    bool flag_strong = false, flag_injective = false, flag_count = false, flag_exists = false;

    auto add_out = [&](CLI::App* cmd) { cmd->add_option("-o,--output", out_path, "output path"); };

    auto* gaifman_cmd = app.add_subcommand("gaifman", "Gaifman graph of a structure");
    gaifman_cmd->add_option("input", in_path)->required();
    gaifman_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));
    add_out(gaifman_cmd);

    auto* arc_cmd = app.add_subcommand("arc", "arc graph of a directed structure");
    arc_cmd->add_option("input", in_path)->required();
    arc_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));
    add_out(arc_cmd);

    auto* subdivide_cmd = app.add_subcommand("subdivide", "replace edges by paths");
    subdivide_cmd->add_option("input", in_path)->required();
    subdivide_cmd->add_option("-r", arg_r)->required();
    subdivide_cmd->add_option("--mode", mode)->check(CLI::IsMember({"undirected", "directed"}));
    subdivide_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));
    add_out(subdivide_cmd);

    auto* clique_cmd = app.add_subcommand("clique", "subdivided complete graph K_n^r");
    clique_cmd->add_option("-n", arg_n)->required();
    clique_cmd->add_option("-r", arg_r)->required();
    clique_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));
    add_out(clique_cmd);

    auto* star_cmd = app.add_subcommand("star", "glue a gadget along every edge of a graph");
    star_cmd->add_option("-g,--graph", in_path)->required();
    star_cmd->add_option("-m,--gadget", second_path)->required();
    star_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));
    add_out(star_cmd);

    auto* ostar_cmd = app.add_subcommand("ostar", "gadget product H ⊛ M");
    ostar_cmd->add_option("-H,--host", in_path, "simple graph gadget JSON")->required();
    ostar_cmd->add_option("-m,--gadget", second_path)->required();
    add_out(ostar_cmd);

    auto* phi_cmd = app.add_subcommand("phi", "canonical copy of a gadget along one edge");
    phi_cmd->add_option("-g,--graph", in_path)->required();
    phi_cmd->add_option("-m,--gadget", second_path)->required();
    phi_cmd->add_option("-u", arg_u)->required();
    phi_cmd->add_option("-v", arg_v)->required();
    add_out(phi_cmd);

    auto* hom_cmd = app.add_subcommand("hom", "homomorphism search");
    hom_cmd->add_option("--from", from_path)->required();
    hom_cmd->add_option("--to", to_path)->required();
    hom_cmd->add_flag("--strong", flag_strong);
    hom_cmd->add_flag("--injective", flag_injective);
    hom_cmd->add_flag("--count", flag_count);
    hom_cmd->add_flag("--exists", flag_exists);
    hom_cmd->add_option("--limit", limit);
    hom_cmd->add_option("--pin", pin_text, "comma-separated source=target pairs");
    add_out(hom_cmd);

    auto* iso_cmd = app.add_subcommand("iso", "isomorphism search");
    iso_cmd->add_option("-a", from_path)->required();
    iso_cmd->add_option("-b", to_path)->required();
    iso_cmd->add_flag("--count", flag_count);
    add_out(iso_cmd);

    auto* rigid_cmd = app.add_subcommand("rigid", "is the identity the only endomorphism");
    rigid_cmd->add_option("input", in_path)->required();

    auto* orient_cmd = app.add_subcommand("orient", "orient a relational path");
    orient_cmd->add_option("input", in_path, "path JSON")->required();
    add_out(orient_cmd);

    auto* ppsat_cmd = app.add_subcommand("pp-sat", "primitive positive satisfaction");
    ppsat_cmd->add_option("--formula", formula_path)->required();
    ppsat_cmd->add_option("--target", target_path)->required();
    ppsat_cmd->add_option("--tuple", tuple_text, "comma-separated target elements");

    auto* reconstruct_cmd = app.add_subcommand("reconstruct", "rebuild a structure from hom sets");
    reconstruct_cmd->add_option("--spec", spec_name)->check(CLI::IsMember({"gra"}));
    reconstruct_cmd->add_option("--target", target_path)->required();
    add_out(reconstruct_cmd);

    auto* detect_cmd = app.add_subcommand("detect", "find a subdivided clique");
    detect_cmd->add_option("input", in_path)->required();
    detect_cmd->add_option("-n", arg_n)->required();
    detect_cmd->add_option("-r", arg_r)->required();
    add_out(detect_cmd);

    auto* profile_cmd = app.add_subcommand("profile", "largest detected clique per depth");
    profile_cmd->add_option("input", in_path)->required();
    profile_cmd->add_option("--max-n", max_n);
    profile_cmd->add_option("--max-r", max_r);
    add_out(profile_cmd);

    auto* classify_cmd = app.add_subcommand("classify", "canonical colouring types");
    classify_cmd->add_option("input", in_path, R"(JSON {"n":5,"chi":[[i,j,color],...]})")
        ->required();
    add_out(classify_cmd);

    auto* mine_cmd = app.add_subcommand("mine", "mine a gadget from a dense witness");
    mine_cmd->add_option("input", in_path)->required();
    mine_cmd->add_option("-n", arg_n)->required();
    mine_cmd->add_option("-r", arg_r)->required();
    add_out(mine_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
    verify_cmd->add_option("suite", suite, "which suite to run")
        ->required()
        ->check(CLI::IsMember({"bifunctor", "assoc", "arcstar", "hcal", "fullembed", "ppcomp",
                               "reconstruct", "mine-roundtrip", "hom-oracle", "phi", "classifier",
                               "density", "wellfounded", "orientation", "all"}));
    verify_cmd->add_option("--seed", seed);
    verify_cmd->add_option("--max-vertices", max_vertices);
    verify_cmd->add_option("--max-r", verify_max_r);

    auto* dot_cmd = app.add_subcommand("export-dot", "DOT rendering of a graph value");
    dot_cmd->add_option("input", in_path)->required();
    add_out(dot_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*gaifman_cmd) {
            auto s = structure_from_json(read_json(in_path));
            emit_graph(out_path, format, gaifman(s), nullptr);
        } else if (*arc_cmd) {
            auto s = structure_from_json(read_json(in_path));
            auto arc = arc_graph(s);
            if (format == "dot") {
                write_output(out_path, to_dot(arc.graph));
            } else {
                json j = structure_to_json(arc.graph);
                j["vertices"] = arc.vertices;
                emit_json(out_path, j);
            }
        } else if (*subdivide_cmd) {
            auto g = structure_from_json(read_json(in_path));
            auto res = subdivide(g, arg_r,
                                 mode == "directed" ? SubdivideMode::Directed
                                                    : SubdivideMode::Undirected);
            emit_graph(out_path, format, res.structure, &res.table);
        } else if (*clique_cmd) {
            auto res = subdivided_clique(arg_n, arg_r);
            emit_graph(out_path, format, res.structure, &res.table);
        } else if (*star_cmd) {
            auto g = structure_from_json(read_json(in_path));
            auto m = gadget_from_json(read_json(second_path));
            auto res = star(g, m);
            if (format == "dot")
                write_output(out_path, to_dot(res.structure, &res.table));
            else
                emit_json(out_path, structure_to_json(res.structure, &res.table));
        } else if (*ostar_cmd) {
            auto h = gadget_from_json(read_json(in_path));
            auto m = gadget_from_json(read_json(second_path));
            auto res = ostar(h, m);
            emit_json(out_path, gadget_to_json(res.gadget, &res.table));
        } else if (*phi_cmd) {
            auto g = structure_from_json(read_json(in_path));
            auto m = gadget_from_json(read_json(second_path));
            emit_json(out_path, mapping_to_json(phi(g, m, arg_u, arg_v).map));
        } else if (*hom_cmd) {
            auto src = structure_from_json(read_json(from_path));
            auto tgt = structure_from_json(read_json(to_path));
            HomOptions opt;
            opt.strong = flag_strong;
            opt.injective = flag_injective;
            if (limit >= 0) opt.limit = limit;
            if (!pin_text.empty()) opt.pinned = parse_pin(pin_text);
            if (flag_count) {
                write_output(out_path, std::to_string(hom_count(src, tgt, opt)));
            } else if (flag_exists) {
                write_output(out_path, hom_exists(src, tgt, opt) ? "true" : "false");
            } else {
                json arr = json::array();
                for (const auto& f : solve_mappings(src, tgt, opt)) arr.push_back(f);
                emit_json(out_path, arr);
            }
        } else if (*iso_cmd) {
            auto a = structure_from_json(read_json(from_path));
            auto b = structure_from_json(read_json(to_path));
            auto isos = isomorphisms(a, b);
            if (flag_count) {
                write_output(out_path, std::to_string(isos.size()));
            } else {
                json arr = json::array();
                for (const auto& h : isos) arr.push_back(h.map);
                emit_json(out_path, arr);
            }
        } else if (*rigid_cmd) {
            auto s = structure_from_json(read_json(in_path));
            write_output(out_path, is_rigid(s) ? "true" : "false");
        } else if (*orient_cmd) {
            auto path = lpath_from_json(read_json(in_path));
            auto o = orient_lpath(path);
            emit_json(out_path, orientation_to_json(path, o));
        } else if (*ppsat_cmd) {
            auto phi_f = pp_formula_from_json(read_json(formula_path));
            auto target = structure_from_json(read_json(target_path));
            bool sat = pp_satisfies(target, parse_tuple(tuple_text), phi_f);
            write_output(out_path, sat ? "true" : "false");
        } else if (*reconstruct_cmd) {
            auto target = structure_from_json(read_json(target_path));
            emit_json(out_path, structure_to_json(reconstruct(gra_spec(), target)));
        } else if (*detect_cmd) {
            auto host = structure_from_json(read_json(in_path));
            auto w = detect_subdivided_clique(host, arg_n, arg_r);
            emit_json(out_path, w ? clique_witness_to_json(*w) : json(nullptr));
        } else if (*profile_cmd) {
            auto host = structure_from_json(read_json(in_path));
            emit_json(out_path, json(density_profile(host, max_n, max_r)));
        } else if (*classify_cmd) {
            auto j = read_json(in_path);
            std::map<std::pair<int, int>, int> chi;
            for (const auto& entry : j.at("chi"))
                chi[{entry.at(0).get<int>(), entry.at(1).get<int>()}] = entry.at(2).get<int>();
            auto types = classify_canonical(j.at("n").get<int>(), chi);
            emit_json(out_path, json{{"types", std::vector<int>(types.begin(), types.end())}});
        } else if (*mine_cmd) {
            auto host = structure_from_json(read_json(in_path));
            std::vector<std::string> stages;
            auto mined = mine_gadget(host, arg_n, arg_r, &stages);
            if (mined) {
                emit_json(out_path, mined_gadget_to_json(*mined));
            } else {
                json j;
                j["mined"] = nullptr;
                j["stages"] = stages;
                emit_json(out_path, j);
            }
        } else if (*verify_cmd) {
            auto log = verify::LogFn(
                [](const std::string& line) { std::cout << "  " << line << "\n"; });
            std::vector<verify::CriterionResult> results;
            if (suite == "hcal" && (max_vertices > 0 || verify_max_r >= 0)) {
                results.push_back(verify::c6_hcal(seed, log, max_vertices > 0 ? max_vertices : 4,
                                                  verify_max_r >= 0 ? verify_max_r : 1));
            } else if (suite == "fullembed" && max_vertices > 0) {
                results.push_back(verify::c7_fullembed(seed, log, max_vertices));
            } else if (suite == "arcstar" && max_vertices > 0) {
                results.push_back(verify::c5_arcstar(seed, log, max_vertices));
            } else {
                results = verify::run_suite(suite, seed, log);
            }
            bool ok = true;
            for (const auto& r : results) {
                std::cout << r.id << " " << r.name << " " << (r.pass ? "PASS" : "FAIL") << " ("
                          << r.instances << " instances, " << r.seconds << "s)\n";
                ok = ok && r.pass;
            }
            if (!ok) return 3;
        } else if (*dot_cmd) {
            LabelTable tags;
            auto s = structure_from_json(read_json(in_path), &tags);
            write_output(out_path, to_dot(s, &tags));
        }
    } catch (const Usage& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const json::exception& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

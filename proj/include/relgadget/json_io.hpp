#ifndef RELGADGET_JSON_IO_HPP
#define RELGADGET_JSON_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "relgadget/density.hpp"
#include "relgadget/gadget.hpp"
#include "relgadget/logic.hpp"
#include "relgadget/structure.hpp"

namespace relgadget {

using json = nlohmann::json;

// Canonical JSON: object keys sorted (nlohmann property), tuples stored
// sorted, every signature symbol listed under "relations", no floats.

inline json tag_to_json(const Tag& t) {
    switch (t.kind) {
        case TagKind::Plain: return json{{"plain", t.a}};
        case TagKind::Native: return json{{"native", t.a}};
        case TagKind::Shared: return json{{"shared", t.a}};
        case TagKind::APoint: return json{{"apoint", {t.a, t.b}}};
        case TagKind::BPoint: return json{{"bpoint", {t.a, t.b}}};
        case TagKind::Inner: return json{{"inner", {t.a, t.b, t.c}}};
    }
    return json::object();
}

inline Tag tag_from_json(const json& j) {
    if (!j.is_object() || j.size() != 1) throw Error(Err::BadInput, "malformed tag");
    const auto it = j.begin();
    const std::string key = it.key();
    const json& v = it.value();
    auto as_list = [&](size_t k) {
        if (!v.is_array() || v.size() != k) throw Error(Err::BadInput, "malformed tag " + key);
        std::vector<int> out;
        for (const auto& e : v) out.push_back(e.get<int>());
        return out;
    };
    if (key == "plain") return Tag::plain(v.get<int>());
    if (key == "native") return Tag::native(v.get<int>());
    if (key == "shared") return Tag::shared(v.get<int>());
    if (key == "apoint") {
        auto l = as_list(2);
        return Tag::apoint(l[0], l[1]);
    }
    if (key == "bpoint") {
        auto l = as_list(2);
        return Tag::bpoint(l[0], l[1]);
    }
    if (key == "inner") {
        auto l = as_list(3);
        return Tag::inner(l[0], l[1], l[2]);
    }
    throw Error(Err::BadInput, "unknown tag kind " + key);
}

inline json structure_to_json(const Structure& s, const LabelTable* tags = nullptr) {
    json j;
    j["signature"] = json::array();
    for (const auto& sym : s.signature.symbols)
        j["signature"].push_back({{"name", sym.name}, {"arity", sym.arity}});
    j["size"] = s.size;
    if (!s.labels.empty()) j["labels"] = s.labels;
    json rels = json::object();
    for (const auto& sym : s.signature.symbols) {
        json ts = json::array();
        for (const auto& t : s.tuples(sym.name)) ts.push_back(t);
        rels[sym.name] = ts;
    }
    j["relations"] = rels;
    if (tags) {
        json arr = json::array();
        for (const auto& t : tags->tags) arr.push_back(tag_to_json(t));
        j["tags"] = arr;
    }
    return j;
}

inline Structure structure_from_json(const json& j, LabelTable* tags_out = nullptr) {
    if (!j.is_object()) throw Error(Err::BadInput, "structure JSON must be an object");
    Structure s;
    if (!j.contains("signature") || !j.contains("size"))
        throw Error(Err::BadInput, "structure JSON needs signature and size");
    for (const auto& sym : j.at("signature"))
        s.signature.symbols.push_back({sym.at("name").get<std::string>(), sym.at("arity").get<int>()});
    s.size = j.at("size").get<int>();
    if (j.contains("labels")) s.labels = j.at("labels").get<std::vector<std::string>>();
    if (j.contains("relations"))
        for (const auto& [name, ts] : j.at("relations").items())
            for (const auto& t : ts) s.add(name, t.get<Tuple>());
    s.normalize();
    require_valid(s);
    if (tags_out) {
        tags_out->tags.clear();
        if (j.contains("tags")) {
            for (const auto& t : j.at("tags")) tags_out->tags.push_back(tag_from_json(t));
            if (static_cast<int>(tags_out->tags.size()) != s.size)
                throw Error(Err::BadInput, "tag count differs from domain size");
        } else {
            *tags_out = LabelTable::plain(s.size);
        }
    }
    return s;
}

inline json mapping_to_json(const Mapping& f) { return json(f); }

inline Mapping mapping_from_json(const json& j) { return j.get<Mapping>(); }

// --- gadgets -----------------------------------------------------------------

inline json gadget_to_json(const Gadget& g, const LabelTable* tags = nullptr) {
    json j = structure_to_json(g.carrier, tags);
    j["alpha"] = g.alpha;
    j["beta"] = g.beta;
    j["A"] = g.A;
    j["B"] = g.B;
    j["P"] = g.P;
    return j;
}

inline Gadget gadget_from_json(const json& j, LabelTable* tags_out = nullptr) {
    Structure carrier = structure_from_json(j, tags_out);
    auto list = [&](const char* key) {
        return j.contains(key) ? j.at(key).get<std::vector<int>>() : std::vector<int>{};
    };
    if (!j.contains("alpha") || !j.contains("beta"))
        throw Error(Err::BadInput, "gadget JSON needs alpha and beta");
    return make_gadget(std::move(carrier), j.at("alpha").get<int>(), j.at("beta").get<int>(),
                       list("A"), list("B"), list("P"));
}

// --- pp formulas ---------------------------------------------------------------

inline json pp_formula_to_json(const PPFormula& phi) {
    json j = structure_to_json(phi.canonical);
    j["free"] = phi.free;
    return j;
}

inline PPFormula pp_formula_from_json(const json& j) {
    if (!j.contains("free")) throw Error(Err::BadInput, "pp formula JSON needs a free tuple");
    return make_pp_formula(structure_from_json(j), j.at("free").get<std::vector<int>>());
}

// --- paths ----------------------------------------------------------------------

inline json lpath_to_json(const LPath& p) {
    json j = structure_to_json(p.carrier);
    j["p"] = p.p;
    json steps = json::array();
    for (const auto& s : p.steps) steps.push_back({{"rel", s.rel}, {"tuple", s.tuple}});
    j["steps"] = steps;
    return j;
}

inline LPath lpath_from_json(const json& j) {
    if (!j.contains("p")) throw Error(Err::BadInput, "path JSON needs the path function p");
    LPath out;
    out.carrier = structure_from_json(j);
    out.p = j.at("p").get<std::vector<int>>();
    if (j.contains("steps")) {
        for (const auto& s : j.at("steps"))
            out.steps.push_back({s.at("rel").get<std::string>(), s.at("tuple").get<Tuple>()});
        std::set<int> seen;
        for (int x : out.p)
            if (x < 0 || x >= out.carrier.size || !seen.insert(x).second)
                throw Error(Err::BadInput, "path function is not injective into the domain");
        if (!detail::lpath_clauses_hold(out.carrier, out.p, out.steps))
            throw Error(Err::BadInput, "steps do not witness a path along p");
    } else {
        auto found = is_lpath(out.carrier, out.p);
        if (!found) throw Error(Err::BadInput, "structure is not a path along p");
        out.steps = found->steps;
    }
    return out;
}

// --- witnesses and mined gadgets ----------------------------------------------

inline json clique_witness_to_json(const CliqueWitness& w) {
    json j;
    j["natives"] = w.natives;
    json paths = json::object();
    for (const auto& [pr, path] : w.paths)
        paths[std::to_string(pr.first) + "-" + std::to_string(pr.second)] = path;
    j["paths"] = paths;
    return j;
}

inline CliqueWitness clique_witness_from_json(const json& j) {
    CliqueWitness w;
    w.natives = j.at("natives").get<std::vector<int>>();
    for (const auto& [key, path] : j.at("paths").items()) {
        auto dash = key.find('-');
        if (dash == std::string::npos) throw Error(Err::BadInput, "malformed pair key " + key);
        int a = std::stoi(key.substr(0, dash));
        int b = std::stoi(key.substr(dash + 1));
        w.paths[{a, b}] = path.get<std::vector<int>>();
    }
    return w;
}

inline json mined_gadget_to_json(const MinedGadget& m) {
    json j = gadget_to_json(m.gadget);
    j["verified_m"] = m.verified_m;
    j["indices"] = m.indices;
    j["stages"] = m.stages;
    j["system"] = gadget_to_json(m.system);
    j["path"] = lpath_to_json(m.path);
    return j;
}

inline MinedGadget mined_gadget_from_json(const json& j) {
    MinedGadget m;
    m.gadget = gadget_from_json(j);
    m.verified_m = j.at("verified_m").get<int>();
    if (j.contains("indices")) m.indices = j.at("indices").get<std::vector<int>>();
    if (j.contains("stages")) m.stages = j.at("stages").get<std::vector<std::string>>();
    m.system = gadget_from_json(j.at("system"));
    m.path = lpath_from_json(j.at("path"));
    return m;
}

// --- orientations ----------------------------------------------------------------

inline json orientation_to_json(const LPath& input, const Orientation& o) {
    LPath oriented;
    oriented.carrier = o.structure;
    oriented.p = input.p;
    for (size_t i = 0; i < input.steps.size(); ++i)
        oriented.steps.push_back(
            {input.steps[i].rel, apply_perm(o.sigmas[i], input.steps[i].tuple)});
    json j = lpath_to_json(oriented);
    j["sigma"] = o.sigmas;
    return j;
}

} // namespace relgadget

#endif

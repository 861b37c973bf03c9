#ifndef RELGADGET_STRUCTURE_HPP
#define RELGADGET_STRUCTURE_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "relgadget/errors.hpp"

namespace relgadget {

using Tuple = std::vector<int>;
using TupleSet = std::vector<Tuple>; // kept sorted and duplicate-free
using Mapping = std::vector<int>;    // total map on 0..n-1

struct Symbol {
    std::string name;
    int arity = 1;
    bool operator==(const Symbol&) const = default;
};

struct Signature {
    std::vector<Symbol> symbols;

    bool operator==(const Signature&) const = default;

    bool has(const std::string& name) const {
        for (const auto& s : symbols)
            if (s.name == name) return true;
        return false;
    }

    int arity_of(const std::string& name) const {
        for (const auto& s : symbols)
            if (s.name == name) return s.arity;
        throw Error(Err::BadInput, "unknown relation symbol " + name);
    }

    static Signature graph() { return Signature{{Symbol{"E", 2}}}; }
};

inline Tuple apply_map(const Mapping& f, const Tuple& t) {
    Tuple out(t.size());
    for (size_t i = 0; i < t.size(); ++i) out[i] = f[t[i]];
    return out;
}

inline void sort_unique(TupleSet& ts) {
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
}

// A finite relational structure on domain {0, ..., size-1}.
struct Structure {
    Signature signature;
    int size = 0;
    std::map<std::string, TupleSet> relations; // keys subset of signature names
    std::vector<std::string> labels;           // optional display names, empty or size `size`

    const TupleSet& tuples(const std::string& rel) const {
        static const TupleSet empty;
        auto it = relations.find(rel);
        return it == relations.end() ? empty : it->second;
    }

    void add(const std::string& rel, Tuple t) { relations[rel].push_back(std::move(t)); }

    void normalize() {
        for (auto& [name, ts] : relations) sort_unique(ts);
    }

    long long tuple_count() const {
        long long c = 0;
        for (const auto& [name, ts] : relations) c += static_cast<long long>(ts.size());
        return c;
    }

    bool has_tuple(const std::string& rel, const Tuple& t) const {
        const auto& ts = tuples(rel);
        return std::binary_search(ts.begin(), ts.end(), t);
    }
};

inline Structure make_structure(Signature sig, int size,
                                std::map<std::string, TupleSet> rels = {},
                                std::vector<std::string> labels = {}) {
    Structure s{std::move(sig), size, std::move(rels), std::move(labels)};
    s.normalize();
    return s;
}

// Invariant violations as human-readable messages; empty result means valid.
inline std::vector<std::string> validate(const Structure& s) {
    std::vector<std::string> out;
    if (s.size < 0) out.push_back("negative domain size");
    std::set<std::string> names;
    for (const auto& sym : s.signature.symbols) {
        if (!names.insert(sym.name).second)
            out.push_back("duplicate symbol name: " + sym.name);
        if (sym.arity < 1) out.push_back("arity must be positive: " + sym.name);
    }
    if (!s.labels.empty() && static_cast<int>(s.labels.size()) != s.size)
        out.push_back("label count differs from domain size");
    for (const auto& [rel, ts] : s.relations) {
        if (!names.count(rel)) {
            out.push_back("relation not in signature: " + rel);
            continue;
        }
        const int ar = s.signature.arity_of(rel);
        std::set<Tuple> seen;
        for (const auto& t : ts) {
            if (static_cast<int>(t.size()) != ar) {
                out.push_back(rel + ": arity mismatch");
                continue;
            }
            for (int x : t)
                if (x < 0 || x >= s.size) {
                    out.push_back(rel + ": tuple entry out of range");
                    break;
                }
            if (!seen.insert(t).second) out.push_back(rel + ": duplicate tuple");
        }
    }
    return out;
}

inline void require_valid(const Structure& s) {
    auto v = validate(s);
    if (!v.empty()) throw Error(Err::BadInput, v.front());
}

// Equality of signature, size and tuple sets; labels are ignored.
inline bool structures_equal(const Structure& m, const Structure& n) {
    if (!(m.signature == n.signature) || m.size != n.size) return false;
    for (const auto& sym : m.signature.symbols)
        if (m.tuples(sym.name) != n.tuples(sym.name)) return false;
    return true;
}

// --- provenance tags -------------------------------------------------------

enum class TagKind { Plain, Native, Shared, APoint, BPoint, Inner };

// Provenance of one domain element of a constructed structure.  The tag kind
// identifies the ⋆-summand (or native/subdivision role) the element came from.
struct Tag {
    TagKind kind = TagKind::Plain;
    int a = -1, b = -1, c = -1;

    auto operator<=>(const Tag&) const = default;

    static Tag plain(int i) { return {TagKind::Plain, i, -1, -1}; }
    static Tag native(int g) { return {TagKind::Native, g, -1, -1}; }
    static Tag shared(int p) { return {TagKind::Shared, p, -1, -1}; }
    static Tag apoint(int u, int a) { return {TagKind::APoint, u, a, -1}; }
    static Tag bpoint(int v, int b) { return {TagKind::BPoint, v, b, -1}; }
    static Tag inner(int u, int v, int c) { return {TagKind::Inner, u, v, c}; }

    std::string str() const {
        switch (kind) {
            case TagKind::Plain: return "v" + std::to_string(a);
            case TagKind::Native: return "n" + std::to_string(a);
            case TagKind::Shared: return "p" + std::to_string(a);
            case TagKind::APoint: return "a" + std::to_string(a) + "_" + std::to_string(b);
            case TagKind::BPoint: return "b" + std::to_string(a) + "_" + std::to_string(b);
            case TagKind::Inner:
                return "i" + std::to_string(a) + "_" + std::to_string(b) + "_" + std::to_string(c);
        }
        return "?";
    }
};

struct LabelTable {
    std::vector<Tag> tags;

    static LabelTable plain(int n) {
        LabelTable t;
        t.tags.reserve(n);
        for (int i = 0; i < n; ++i) t.tags.push_back(Tag::plain(i));
        return t;
    }

    int index_of(const Tag& tag) const {
        for (size_t i = 0; i < tags.size(); ++i)
            if (tags[i] == tag) return static_cast<int>(i);
        return -1;
    }

    std::map<Tag, int> index() const {
        std::map<Tag, int> m;
        for (size_t i = 0; i < tags.size(); ++i) m[tags[i]] = static_cast<int>(i);
        return m;
    }

    std::vector<std::string> names() const {
        std::vector<std::string> out;
        out.reserve(tags.size());
        for (const auto& t : tags) out.push_back(t.str());
        return out;
    }
};

// Structure together with element provenance.
struct Labeled {
    Structure structure;
    LabelTable table;
};

} // namespace relgadget

#endif

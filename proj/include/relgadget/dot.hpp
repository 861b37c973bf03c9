#ifndef RELGADGET_DOT_HPP
#define RELGADGET_DOT_HPP

#include <sstream>
#include <string>

#include "relgadget/core.hpp"

namespace relgadget {

// DOT export for graph values: digraph for directed graphs, graph (each
// unordered edge once) for undirected ones.  Node names come from the tag
// strings of the label table.
inline std::string to_dot(const Structure& g, const LabelTable* tags = nullptr,
                          const std::string& name = "G") {
    require_graph(g);
    const bool undirected = is_undirected_graph(g);
    LabelTable fallback;
    if (!tags) {
        fallback = LabelTable::plain(g.size);
        tags = &fallback;
    }
    if (static_cast<int>(tags->tags.size()) != g.size)
        throw Error(Err::BadInput, "label table size differs from graph size");
    std::ostringstream out;
    out << (undirected ? "graph " : "digraph ") << name << " {\n";
    for (int v = 0; v < g.size; ++v) out << "  \"" << tags->tags[v].str() << "\";\n";
    if (undirected) {
        for (auto [u, v] : undirected_edge_list(g))
            out << "  \"" << tags->tags[u].str() << "\" -- \"" << tags->tags[v].str() << "\";\n";
    } else {
        for (auto [u, v] : graph_edges(g))
            out << "  \"" << tags->tags[u].str() << "\" -> \"" << tags->tags[v].str() << "\";\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace relgadget

#endif

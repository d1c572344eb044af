#ifndef PFCI_GRAPH_IO_HPP
#define PFCI_GRAPH_IO_HPP

#include <string>

#include "pfci/graph.hpp"

namespace pfci {

// Graph JSON schema shared by every command:
//   { "nodes": [string...],
//     "edges": [{ "u": string, "v": string,
//                 "mark_at_u": "tail"|"arrow"|"circle", "mark_at_v": ... }] }
// DAGs serialize with mark_at_u = "tail", mark_at_v = "arrow". Edges are
// emitted sorted by (u, v) node index so output bytes are reproducible.
std::string graph_to_json(const MixedGraph& g);
std::string graph_to_json(const Dag& g);

MixedGraph mixed_graph_from_json(const std::string& text);
Dag dag_from_json(const std::string& text);

// DOT export: ARROW -> normal arrowhead, TAIL -> none, CIRCLE -> odot.
std::string graph_to_dot(const MixedGraph& g, const std::string& graph_name = "pag");

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace pfci

#endif

#include "pfci/graph_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace pfci {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json edge_object(const std::string& u, const std::string& v, Mark at_u, Mark at_v) {
    ordered_json e;
    e["u"] = u;
    e["v"] = v;
    e["mark_at_u"] = mark_name(at_u);
    e["mark_at_v"] = mark_name(at_v);
    return e;
}

ordered_json graph_json_skeleton(const std::vector<std::string>& names) {
    ordered_json out;
    out["nodes"] = names;
    out["edges"] = ordered_json::array();
    return out;
}

std::map<std::string, int> name_index(const std::vector<std::string>& names) {
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (!index.emplace(names[i], static_cast<int>(i)).second)
            throw PfciError("duplicate node name '" + names[i] + "'");
    }
    return index;
}

}  // namespace

std::string graph_to_json(const MixedGraph& g) {
    ordered_json out = graph_json_skeleton(g.node_names());
    for (auto [u, v] : g.edges())
        out["edges"].push_back(edge_object(g.name(u), g.name(v), g.mark_at(v, u), g.mark_at(u, v)));
    return out.dump(2) + "\n";
}

std::string graph_to_json(const Dag& g) {
    ordered_json out = graph_json_skeleton(g.node_names());
    for (const auto& e : g.edges())
        out["edges"].push_back(edge_object(g.name(e.parent), g.name(e.child), Mark::Tail, Mark::Arrow));
    return out.dump(2) + "\n";
}

MixedGraph mixed_graph_from_json(const std::string& text) {
    const json doc = json::parse(text);
    std::vector<std::string> names = doc.at("nodes").get<std::vector<std::string>>();
    const auto index = name_index(names);
    MixedGraph g(std::move(names));
    for (const auto& e : doc.at("edges")) {
        const int u = index.at(e.at("u").get<std::string>());
        const int v = index.at(e.at("v").get<std::string>());
        g.add_edge(u, v, mark_from_name(e.at("mark_at_u").get<std::string>()),
                   mark_from_name(e.at("mark_at_v").get<std::string>()));
    }
    return g;
}

Dag dag_from_json(const std::string& text) {
    const json doc = json::parse(text);
    std::vector<std::string> names = doc.at("nodes").get<std::vector<std::string>>();
    const auto index = name_index(names);
    Dag g(std::move(names));
    for (const auto& e : doc.at("edges")) {
        if (e.at("mark_at_u").get<std::string>() != "tail" ||
            e.at("mark_at_v").get<std::string>() != "arrow")
            throw PfciError("DAG edges must carry (tail, arrow) marks");
        g.add_edge(index.at(e.at("u").get<std::string>()),
                   index.at(e.at("v").get<std::string>()));
    }
    return g;
}

namespace {

const char* dot_arrow(Mark m) {
    switch (m) {
        case Mark::Arrow: return "normal";
        case Mark::Tail: return "none";
        default: return "odot";
    }
}

}  // namespace

std::string graph_to_dot(const MixedGraph& g, const std::string& graph_name) {
    std::ostringstream out;
    out << "graph " << graph_name << " {\n";
    for (int v = 0; v < g.num_nodes(); ++v)
        out << "  n" << v << " [label=\"" << g.name(v) << "\"];\n";
    for (auto [u, v] : g.edges()) {
        out << "  n" << u << " -- n" << v << " [dir=both, arrowtail="
            << dot_arrow(g.mark_at(v, u)) << ", arrowhead=" << dot_arrow(g.mark_at(u, v))
            << "];\n";
    }
    out << "}\n";
    return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw PfciError("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw PfciError("write failed for '" + path + "'");
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw PfciError("cannot open '" + path + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace pfci

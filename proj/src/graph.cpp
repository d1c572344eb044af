#include "pfci/graph.hpp"

#include <algorithm>

namespace pfci {

std::string mark_name(Mark m) {
    switch (m) {
        case Mark::Tail: return "tail";
        case Mark::Arrow: return "arrow";
        case Mark::Circle: return "circle";
        default: return "none";
    }
}

Mark mark_from_name(const std::string& s) {
    if (s == "tail") return Mark::Tail;
    if (s == "arrow") return Mark::Arrow;
    if (s == "circle") return Mark::Circle;
    throw PfciError("unknown endpoint mark '" + s + "'");
}

std::vector<std::string> default_node_names(int p, const std::string& prefix) {
    std::vector<std::string> names;
    names.reserve(p);
    for (int i = 0; i < p; ++i) names.push_back(prefix + std::to_string(i));
    return names;
}

namespace {

void insert_sorted(std::vector<int>& v, int x) {
    v.insert(std::lower_bound(v.begin(), v.end(), x), x);
}

bool contains_sorted(const std::vector<int>& v, int x) {
    return std::binary_search(v.begin(), v.end(), x);
}

void erase_sorted(std::vector<int>& v, int x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it != v.end() && *it == x) v.erase(it);
}

}  // namespace

// ---------------------------------------------------------------- Dag

Dag::Dag(int num_nodes) : Dag(default_node_names(num_nodes)) {}

Dag::Dag(std::vector<std::string> node_names)
    : names_(std::move(node_names)),
      parents_(names_.size()),
      children_(names_.size()),
      child_weights_(names_.size()) {}

void Dag::check_node(int v) const {
    if (v < 0 || v >= num_nodes()) throw UnknownNode(v);
}

void Dag::add_edge(int parent, int child, double weight) {
    check_node(parent);
    check_node(child);
    if (parent == child) throw PfciError("self-loop on node " + std::to_string(parent));
    if (has_edge(parent, child))
        throw PfciError("duplicate edge " + std::to_string(parent) + "->" + std::to_string(child));
    if (has_edge(child, parent))
        throw PfciError("edge " + std::to_string(parent) + "->" + std::to_string(child) +
                        " opposes an existing edge");
    insert_sorted(parents_[child], parent);
    auto pos = std::lower_bound(children_[parent].begin(), children_[parent].end(), child);
    const auto offset = pos - children_[parent].begin();
    children_[parent].insert(pos, child);
    child_weights_[parent].insert(child_weights_[parent].begin() + offset, weight);
    ++num_edges_;
}

bool Dag::has_edge(int parent, int child) const {
    check_node(parent);
    check_node(child);
    return contains_sorted(children_[parent], child);
}

double Dag::weight(int parent, int child) const {
    check_node(parent);
    check_node(child);
    auto it = std::lower_bound(children_[parent].begin(), children_[parent].end(), child);
    if (it == children_[parent].end() || *it != child)
        throw PfciError("no edge " + std::to_string(parent) + "->" + std::to_string(child));
    return child_weights_[parent][it - children_[parent].begin()];
}

const std::vector<int>& Dag::parents(int v) const {
    check_node(v);
    return parents_[v];
}

const std::vector<int>& Dag::children(int v) const {
    check_node(v);
    return children_[v];
}

std::vector<WeightedEdge> Dag::edges() const {
    std::vector<WeightedEdge> out;
    out.reserve(num_edges_);
    for (int u = 0; u < num_nodes(); ++u)
        for (std::size_t k = 0; k < children_[u].size(); ++k)
            out.push_back({u, children_[u][k], child_weights_[u][k]});
    return out;
}

// ---------------------------------------------------------------- Skeleton

Skeleton::Skeleton(int num_nodes) : Skeleton(default_node_names(num_nodes)) {}

Skeleton::Skeleton(std::vector<std::string> node_names)
    : names_(std::move(node_names)), adj_(names_.size()) {}

Skeleton Skeleton::complete(std::vector<std::string> node_names) {
    Skeleton sk(std::move(node_names));
    const int p = sk.num_nodes();
    for (int u = 0; u < p; ++u)
        for (int v = u + 1; v < p; ++v) sk.add_edge(u, v);
    return sk;
}

void Skeleton::check_node(int v) const {
    if (v < 0 || v >= num_nodes()) throw UnknownNode(v);
}

void Skeleton::add_edge(int u, int v) {
    check_node(u);
    check_node(v);
    if (u == v) throw PfciError("self-loop on node " + std::to_string(u));
    if (has_edge(u, v)) return;
    insert_sorted(adj_[u], v);
    insert_sorted(adj_[v], u);
    ++num_edges_;
}

void Skeleton::remove_edge(int u, int v) {
    check_node(u);
    check_node(v);
    if (!has_edge(u, v)) return;
    erase_sorted(adj_[u], v);
    erase_sorted(adj_[v], u);
    --num_edges_;
}

bool Skeleton::has_edge(int u, int v) const {
    check_node(u);
    check_node(v);
    return contains_sorted(adj_[u], v);
}

const std::vector<int>& Skeleton::neighbors(int v) const {
    check_node(v);
    return adj_[v];
}

std::vector<std::pair<int, int>> Skeleton::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(num_edges_);
    for (int u = 0; u < num_nodes(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

// ---------------------------------------------------------------- MixedGraph

MixedGraph::MixedGraph(int num_nodes) : MixedGraph(default_node_names(num_nodes)) {}

MixedGraph::MixedGraph(std::vector<std::string> node_names)
    : names_(std::move(node_names)),
      end_(names_.size() * names_.size(), Mark::None),
      adj_(names_.size()) {}

MixedGraph MixedGraph::from_skeleton(const Skeleton& sk) {
    MixedGraph g(sk.node_names());
    for (auto [u, v] : sk.edges()) g.add_edge(u, v, Mark::Circle, Mark::Circle);
    return g;
}

void MixedGraph::check_node(int v) const {
    if (v < 0 || v >= num_nodes()) throw UnknownNode(v);
}

void MixedGraph::add_edge(int u, int v, Mark mark_at_u, Mark mark_at_v) {
    check_node(u);
    check_node(v);
    if (u == v) throw PfciError("self-loop on node " + std::to_string(u));
    if (mark_at_u == Mark::None || mark_at_v == Mark::None)
        throw PfciError("edge marks must be tail, arrow or circle");
    if (!has_edge(u, v)) {
        insert_sorted(adj_[u], v);
        insert_sorted(adj_[v], u);
        ++num_edges_;
    }
    end_[idx(v, u)] = mark_at_u;
    end_[idx(u, v)] = mark_at_v;
}

void MixedGraph::remove_edge(int u, int v) {
    check_node(u);
    check_node(v);
    if (!has_edge(u, v)) return;
    end_[idx(u, v)] = Mark::None;
    end_[idx(v, u)] = Mark::None;
    erase_sorted(adj_[u], v);
    erase_sorted(adj_[v], u);
    --num_edges_;
}

bool MixedGraph::has_edge(int u, int v) const {
    check_node(u);
    check_node(v);
    return end_[idx(u, v)] != Mark::None;
}

Mark MixedGraph::mark_at(int u, int v) const {
    check_node(u);
    check_node(v);
    return end_[idx(u, v)];
}

void MixedGraph::set_mark(int u, int v, Mark mark_at_v) {
    if (!has_edge(u, v)) throw PfciError("set_mark on absent edge");
    if (mark_at_v == Mark::None) throw PfciError("cannot erase a mark; remove the edge");
    end_[idx(u, v)] = mark_at_v;
}

const std::vector<int>& MixedGraph::adjacent(int v) const {
    check_node(v);
    return adj_[v];
}

std::vector<std::pair<int, int>> MixedGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(num_edges_);
    for (int u = 0; u < num_nodes(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Skeleton MixedGraph::skeleton() const {
    Skeleton sk(names_);
    for (auto [u, v] : edges()) sk.add_edge(u, v);
    return sk;
}

bool MixedGraph::operator==(const MixedGraph& other) const {
    return names_ == other.names_ && end_ == other.end_;
}

}  // namespace pfci

#ifndef PFCI_GRAPH_HPP
#define PFCI_GRAPH_HPP

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pfci/errors.hpp"

namespace pfci {

// Conditioning sets and node partitions. std::set keeps iteration order
// deterministic, which every search routine here relies on.
using NodeSet = std::set<int>;

enum class Mark : unsigned char { None = 0, Tail = 1, Arrow = 2, Circle = 3 };

std::string mark_name(Mark m);
Mark mark_from_name(const std::string& s);

struct WeightedEdge {
    int parent;
    int child;
    double weight;
};

// Directed graph with SEM weights. Acyclicity is not enforced on insertion;
// topological_sort throws CycleDetected when violated.
class Dag {
public:
    explicit Dag(int num_nodes);
    explicit Dag(std::vector<std::string> node_names);

    int num_nodes() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& node_names() const { return names_; }
    const std::string& name(int v) const { return names_.at(v); }

    // Rejects self-loops, duplicate edges and edges opposing an existing one.
    void add_edge(int parent, int child, double weight = 1.0);

    bool has_edge(int parent, int child) const;
    double weight(int parent, int child) const;

    const std::vector<int>& parents(int v) const;
    const std::vector<int>& children(int v) const;
    std::vector<WeightedEdge> edges() const;
    int num_edges() const { return num_edges_; }

    void check_node(int v) const;

private:
    std::vector<std::string> names_;
    std::vector<std::vector<int>> parents_;   // sorted ascending
    std::vector<std::vector<int>> children_;  // sorted ascending
    std::vector<std::vector<double>> child_weights_;  // aligned with children_
    int num_edges_ = 0;
};

// Symmetric adjacency without marks.
class Skeleton {
public:
    explicit Skeleton(int num_nodes);
    explicit Skeleton(std::vector<std::string> node_names);

    static Skeleton complete(std::vector<std::string> node_names);

    int num_nodes() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& node_names() const { return names_; }
    const std::string& name(int v) const { return names_.at(v); }

    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    bool has_edge(int u, int v) const;

    const std::vector<int>& neighbors(int v) const;
    // Unordered pairs (u < v), sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;
    int num_edges() const { return num_edges_; }

    void check_node(int v) const;

private:
    std::vector<std::string> names_;
    std::vector<std::vector<int>> adj_;  // sorted ascending
    int num_edges_ = 0;
};

// Graph with endpoint marks in {TAIL, ARROW, CIRCLE}. The paper's edge glyphs
// map onto mark pairs: -> = (TAIL, ARROW), <-> = (ARROW, ARROW),
// -o = (TAIL, CIRCLE), o-o = (CIRCLE, CIRCLE), o-> = (CIRCLE, ARROW).
class MixedGraph {
public:
    explicit MixedGraph(int num_nodes);
    explicit MixedGraph(std::vector<std::string> node_names);

    // Every edge of the skeleton becomes CIRCLE-CIRCLE.
    static MixedGraph from_skeleton(const Skeleton& sk);

    int num_nodes() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& node_names() const { return names_; }
    const std::string& name(int v) const { return names_.at(v); }

    void add_edge(int u, int v, Mark mark_at_u, Mark mark_at_v);
    void remove_edge(int u, int v);
    bool has_edge(int u, int v) const;

    // Mark at endpoint v of edge {u, v}; Mark::None when the edge is absent.
    Mark mark_at(int u, int v) const;
    void set_mark(int u, int v, Mark mark_at_v);

    const std::vector<int>& adjacent(int v) const;
    // Unordered pairs (u < v), sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;
    int num_edges() const { return num_edges_; }

    Skeleton skeleton() const;
    void check_node(int v) const;

    bool operator==(const MixedGraph& other) const;

private:
    std::size_t idx(int u, int v) const {
        return static_cast<std::size_t>(u) * names_.size() + static_cast<std::size_t>(v);
    }

    std::vector<std::string> names_;
    std::vector<Mark> end_;  // end_[idx(u, v)] = mark at v on edge {u, v}
    std::vector<std::vector<int>> adj_;  // sorted ascending
    int num_edges_ = 0;
};

std::vector<std::string> default_node_names(int p, const std::string& prefix = "X");

}  // namespace pfci

#endif

#ifndef PFCI_GRAPH_ALGORITHMS_HPP
#define PFCI_GRAPH_ALGORITHMS_HPP

#include <vector>

#include "pfci/graph.hpp"

namespace pfci {

// Kahn's algorithm with the smallest ready index emitted first, so the order
// is deterministic. Throws CycleDetected.
std::vector<int> topological_sort(const Dag& g);

// All nodes with a directed path into v, excluding v itself.
NodeSet ancestors(const Dag& g, int v);

NodeSet descendants(const Dag& g, int v);

// True iff every path between i and j is blocked by z (chain/fork blocked by
// a conditioned node, collider blocked unless it or a descendant is
// conditioned on). Linear-time reachability rather than path enumeration.
bool d_separated(const Dag& g, int i, int j, const NodeSet& z);

// Every node reachable from x by a path whose interior vertices are each
// either a collider on the path (both incident marks ARROW) or adjacent to
// both path neighbours. Breadth-first over (previous, current) vertex pairs;
// the target y does not affect the set and is kept for the call signature.
NodeSet possible_d_sep(const MixedGraph& g, int x, int y);

}  // namespace pfci

#endif

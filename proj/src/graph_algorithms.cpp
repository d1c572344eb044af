#include "pfci/graph_algorithms.hpp"

#include <deque>
#include <queue>

namespace pfci {

std::vector<int> topological_sort(const Dag& g) {
    const int p = g.num_nodes();
    std::vector<int> indegree(p, 0);
    for (int v = 0; v < p; ++v) indegree[v] = static_cast<int>(g.parents(v).size());

    std::priority_queue<int, std::vector<int>, std::greater<>> ready;
    for (int v = 0; v < p; ++v)
        if (indegree[v] == 0) ready.push(v);

    std::vector<int> order;
    order.reserve(p);
    while (!ready.empty()) {
        const int v = ready.top();
        ready.pop();
        order.push_back(v);
        for (int c : g.children(v))
            if (--indegree[c] == 0) ready.push(c);
    }
    if (static_cast<int>(order.size()) != p) throw CycleDetected();
    return order;
}

namespace {

NodeSet closure(const Dag& g, int v, bool up) {
    g.check_node(v);
    NodeSet out;
    std::deque<int> queue{v};
    std::vector<char> seen(g.num_nodes(), 0);
    seen[v] = 1;
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        for (int w : up ? g.parents(u) : g.children(u)) {
            if (!seen[w]) {
                seen[w] = 1;
                out.insert(w);
                queue.push_back(w);
            }
        }
    }
    out.erase(v);
    return out;
}

}  // namespace

NodeSet ancestors(const Dag& g, int v) { return closure(g, v, true); }

NodeSet descendants(const Dag& g, int v) { return closure(g, v, false); }

bool d_separated(const Dag& g, int i, int j, const NodeSet& z) {
    g.check_node(i);
    g.check_node(j);
    for (int v : z) g.check_node(v);
    if (i == j) throw PfciError("d_separated requires distinct endpoints");
    if (z.count(i) || z.count(j)) throw PfciError("endpoints may not appear in the conditioning set");

    const int p = g.num_nodes();
    std::vector<char> in_z(p, 0);
    for (int v : z) in_z[v] = 1;

    // anc_z: z together with its ancestors; gates collider traversal.
    std::vector<char> anc_z(p, 0);
    {
        std::deque<int> queue;
        for (int v : z) {
            anc_z[v] = 1;
            queue.push_back(v);
        }
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            for (int w : g.parents(u))
                if (!anc_z[w]) {
                    anc_z[w] = 1;
                    queue.push_back(w);
                }
        }
    }

    // Reachability over (node, direction) states; direction 0 = entered from a
    // child (moving up), 1 = entered from a parent (moving down).
    std::vector<char> visited(static_cast<std::size_t>(p) * 2, 0);
    std::deque<std::pair<int, int>> queue{{i, 0}};
    while (!queue.empty()) {
        auto [v, dir] = queue.front();
        queue.pop_front();
        const std::size_t key = static_cast<std::size_t>(v) * 2 + dir;
        if (visited[key]) continue;
        visited[key] = 1;
        if (v == j && !in_z[v]) return false;

        if (dir == 0) {
            if (!in_z[v]) {
                for (int w : g.parents(v)) queue.emplace_back(w, 0);
                for (int w : g.children(v)) queue.emplace_back(w, 1);
            }
        } else {
            if (!in_z[v])
                for (int w : g.children(v)) queue.emplace_back(w, 1);
            if (anc_z[v])
                for (int w : g.parents(v)) queue.emplace_back(w, 0);
        }
    }
    return true;
}

NodeSet possible_d_sep(const MixedGraph& g, int x, int y) {
    g.check_node(x);
    g.check_node(y);

    const int p = g.num_nodes();
    NodeSet reach;
    // visited (prev, cur) path-pairs; the incoming edge decides whether the
    // collider/triangle condition holds at cur.
    std::vector<char> visited(static_cast<std::size_t>(p) * p, 0);
    std::deque<std::pair<int, int>> queue;
    for (int b : g.adjacent(x)) {
        visited[static_cast<std::size_t>(x) * p + b] = 1;
        queue.emplace_back(x, b);
        reach.insert(b);
    }
    while (!queue.empty()) {
        auto [a, b] = queue.front();
        queue.pop_front();
        for (int c : g.adjacent(b)) {
            if (c == a || c == x) continue;
            if (visited[static_cast<std::size_t>(b) * p + c]) continue;
            const bool collider =
                g.mark_at(a, b) == Mark::Arrow && g.mark_at(c, b) == Mark::Arrow;
            const bool triangle = g.has_edge(a, c);
            if (collider || triangle) {
                visited[static_cast<std::size_t>(b) * p + c] = 1;
                queue.emplace_back(b, c);
                reach.insert(c);
            }
        }
    }
    return reach;
}

}  // namespace pfci

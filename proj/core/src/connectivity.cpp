#include "bookem/connectivity.hpp"

#include <algorithm>

namespace bookem {

Components connected_components(const Multigraph& g) {
    const int n = g.vertex_count();
    Components comps;
    comps.label.assign(static_cast<size_t>(n), -1);
    std::vector<Vertex> stack;
    for (Vertex root = 0; root < n; ++root) {
        if (comps.label[static_cast<size_t>(root)] != -1) continue;
        int id = comps.count++;
        comps.label[static_cast<size_t>(root)] = id;
        stack.push_back(root);
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            for (EdgeId e : g.incident(u)) {
                Vertex v = g.edge(e).other(u);
                if (comps.label[static_cast<size_t>(v)] == -1) {
                    comps.label[static_cast<size_t>(v)] = id;
                    stack.push_back(v);
                }
            }
        }
    }
    return comps;
}

bool is_connected(const Multigraph& g) {
    return connected_components(g).count <= 1;
}

namespace {

// Iterative DFS computing discovery and low-point numbers. The tree edge is
// skipped by id, so a parallel copy acts as a back edge and keeps its pair
// off the bridge list.
struct LowpointDfs {
    const Multigraph& g;
    std::vector<int> disc, low;
    std::vector<Vertex> cut_vertices;
    std::vector<EdgeId> bridge_edges;
    int timer = 0;

    explicit LowpointDfs(const Multigraph& graph)
        : g(graph),
          disc(static_cast<size_t>(graph.vertex_count()), -1),
          low(static_cast<size_t>(graph.vertex_count()), 0) {}

    struct Frame {
        Vertex v;
        EdgeId via;   // tree edge into v, -1 at roots
        size_t next;  // cursor into incident(v)
        int tree_children = 0;
    };

    void run() {
        const int n = g.vertex_count();
        std::vector<char> is_cut(static_cast<size_t>(n), 0);
        std::vector<Frame> stack;
        for (Vertex root = 0; root < n; ++root) {
            if (disc[static_cast<size_t>(root)] != -1) continue;
            stack.push_back(Frame{root, -1, 0, 0});
            disc[static_cast<size_t>(root)] = low[static_cast<size_t>(root)] = timer++;
            while (!stack.empty()) {
                Frame& top = stack.back();
                Vertex u = top.v;
                auto inc = g.incident(u);
                if (top.next < inc.size()) {
                    EdgeId e = inc[top.next++];
                    if (e == top.via) continue;  // tree edge; parallel twins stay back edges
                    Vertex w = g.edge(e).other(u);
                    if (disc[static_cast<size_t>(w)] == -1) {
                        disc[static_cast<size_t>(w)] = low[static_cast<size_t>(w)] = timer++;
                        top.tree_children++;
                        stack.push_back(Frame{w, e, 0, 0});
                    } else {
                        low[static_cast<size_t>(u)] =
                            std::min(low[static_cast<size_t>(u)], disc[static_cast<size_t>(w)]);
                    }
                } else {
                    Frame done = top;
                    stack.pop_back();
                    if (stack.empty()) {
                        if (done.tree_children >= 2) is_cut[static_cast<size_t>(u)] = 1;
                        continue;
                    }
                    Vertex p = stack.back().v;
                    low[static_cast<size_t>(p)] =
                        std::min(low[static_cast<size_t>(p)], low[static_cast<size_t>(u)]);
                    if (low[static_cast<size_t>(u)] > disc[static_cast<size_t>(p)])
                        bridge_edges.push_back(done.via);
                    bool parent_is_root = stack.size() == 1;
                    if (!parent_is_root && low[static_cast<size_t>(u)] >= disc[static_cast<size_t>(p)])
                        is_cut[static_cast<size_t>(p)] = 1;
                }
            }
        }
        for (Vertex v = 0; v < n; ++v)
            if (is_cut[static_cast<size_t>(v)]) cut_vertices.push_back(v);
        std::sort(bridge_edges.begin(), bridge_edges.end());
    }
};

}  // namespace

std::vector<Vertex> cutpoints(const Multigraph& g) {
    LowpointDfs dfs(g);
    dfs.run();
    return dfs.cut_vertices;
}

std::vector<EdgeId> bridges(const Multigraph& g) {
    LowpointDfs dfs(g);
    dfs.run();
    return dfs.bridge_edges;
}

}  // namespace bookem

#include "bookem/bipartition.hpp"

#include <algorithm>
#include <queue>

namespace bookem {

namespace {

// Walk parent pointers up to the root, collecting the path.
std::vector<Vertex> path_to_root(const std::vector<Vertex>& parent, Vertex v) {
    std::vector<Vertex> path;
    for (Vertex x = v; x != -1; x = parent[static_cast<size_t>(x)]) path.push_back(x);
    return path;
}

// Odd closed walk through the conflict edge (u, v) in the BFS forest.
std::vector<Vertex> odd_cycle_witness(const std::vector<Vertex>& parent, Vertex u, Vertex v) {
    std::vector<Vertex> pu = path_to_root(parent, u);
    std::vector<Vertex> pv = path_to_root(parent, v);
    // Trim the common tail above the lowest common ancestor.
    while (pu.size() >= 2 && pv.size() >= 2 && pu[pu.size() - 1] == pv[pv.size() - 1] &&
           pu[pu.size() - 2] == pv[pv.size() - 2]) {
        pu.pop_back();
        pv.pop_back();
    }
    // pu: u..lca, pv: v..lca. Cycle: u..lca..v, closed by the edge vu.
    std::vector<Vertex> cycle(pu.begin(), pu.end());
    for (auto it = pv.rbegin() + 1; it != pv.rend(); ++it) cycle.push_back(*it);
    cycle.push_back(u);
    return cycle;
}

}  // namespace

Bipartition bipartition(const Multigraph& g) {
    const int n = g.vertex_count();
    Bipartition b;
    b.part.assign(static_cast<size_t>(n), Part::White);
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<Vertex> parent(static_cast<size_t>(n), -1);

    for (Vertex root = 0; root < n; ++root) {
        if (seen[static_cast<size_t>(root)]) continue;
        seen[static_cast<size_t>(root)] = 1;
        b.part[static_cast<size_t>(root)] = Part::White;  // lowest vertex of the component
        std::queue<Vertex> q;
        q.push(root);
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop();
            for (EdgeId e : g.incident(u)) {
                Vertex v = g.edge(e).other(u);
                if (!seen[static_cast<size_t>(v)]) {
                    seen[static_cast<size_t>(v)] = 1;
                    parent[static_cast<size_t>(v)] = u;
                    b.part[static_cast<size_t>(v)] = opposite(b.part[static_cast<size_t>(u)]);
                    q.push(v);
                } else if (b.part[static_cast<size_t>(v)] == b.part[static_cast<size_t>(u)]) {
                    throw NotBipartite("odd cycle found", odd_cycle_witness(parent, u, v));
                }
            }
        }
    }
    return b;
}

bool is_bipartite(const Multigraph& g) {
    try {
        bipartition(g);
        return true;
    } catch (const NotBipartite&) {
        return false;
    }
}

int oriented_degree(const Multigraph& g, const Bipartition& b,
                    const std::vector<Vertex>& h_vertices, Vertex v) {
    std::vector<char> in_h(static_cast<size_t>(g.vertex_count()), 0);
    for (Vertex u : h_vertices) in_h[static_cast<size_t>(u)] = 1;
    if (!in_h[static_cast<size_t>(v)]) throw BadParameter("vertex not in H");

    int deg = 0;
    for (EdgeId e : g.incident(v)) {
        Vertex u = g.edge(e).other(v);
        if (!in_h[static_cast<size_t>(u)]) continue;
        // Edges run White -> Black: an edge at a Black vertex comes in.
        deg += (b[v] == Part::Black) ? 1 : -1;
    }
    return deg;
}

}  // namespace bookem

#include "bookem/planarity.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace bookem {

namespace {

using SimpleEdge = std::pair<Vertex, Vertex>;  // normalized a < b

std::vector<SimpleEdge> simplify(const Multigraph& g) {
    std::set<SimpleEdge> seen;
    for (const Edge& e : g.edges()) seen.insert({e.lo(), e.hi()});
    return {seen.begin(), seen.end()};
}

std::vector<std::vector<Vertex>> adjacency(int n, const std::vector<SimpleEdge>& edges) {
    std::vector<std::vector<Vertex>> adj(static_cast<size_t>(n));
    for (auto [a, b] : edges) {
        adj[static_cast<size_t>(a)].push_back(b);
        adj[static_cast<size_t>(b)].push_back(a);
    }
    for (auto& list : adj) std::sort(list.begin(), list.end());
    return adj;
}

// Edge partition into biconnected components (lowpoint DFS, edge stack).
std::vector<std::vector<SimpleEdge>> biconnected_edge_components(int n,
                                                                 const std::vector<SimpleEdge>& edges) {
    std::vector<std::vector<std::pair<Vertex, int>>> adj(static_cast<size_t>(n));  // (neighbor, edge idx)
    for (size_t i = 0; i < edges.size(); ++i) {
        auto [a, b] = edges[i];
        adj[static_cast<size_t>(a)].push_back({b, static_cast<int>(i)});
        adj[static_cast<size_t>(b)].push_back({a, static_cast<int>(i)});
    }
    for (auto& list : adj) std::sort(list.begin(), list.end());

    std::vector<int> disc(static_cast<size_t>(n), -1), low(static_cast<size_t>(n), 0);
    std::vector<std::vector<SimpleEdge>> comps;
    std::vector<int> edge_stack;
    int timer = 0;

    struct Frame {
        Vertex v;
        int via;  // edge index into v, -1 at roots
        size_t next = 0;
    };
    std::vector<Frame> stack;

    auto pop_component = [&](int until_edge) {
        std::vector<SimpleEdge> comp;
        while (!edge_stack.empty()) {
            int idx = edge_stack.back();
            edge_stack.pop_back();
            comp.push_back(edges[static_cast<size_t>(idx)]);
            if (idx == until_edge) break;
        }
        std::reverse(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    };

    for (Vertex root = 0; root < n; ++root) {
        if (disc[static_cast<size_t>(root)] != -1) continue;
        stack.push_back(Frame{root, -1});
        disc[static_cast<size_t>(root)] = low[static_cast<size_t>(root)] = timer++;
        while (!stack.empty()) {
            Frame& top = stack.back();
            Vertex u = top.v;
            auto& lst = adj[static_cast<size_t>(u)];
            if (top.next < lst.size()) {
                auto [w, idx] = lst[top.next++];
                if (idx == top.via) continue;
                if (disc[static_cast<size_t>(w)] == -1) {
                    edge_stack.push_back(idx);
                    disc[static_cast<size_t>(w)] = low[static_cast<size_t>(w)] = timer++;
                    stack.push_back(Frame{w, idx});
                } else if (disc[static_cast<size_t>(w)] < disc[static_cast<size_t>(u)]) {
                    edge_stack.push_back(idx);
                    low[static_cast<size_t>(u)] =
                        std::min(low[static_cast<size_t>(u)], disc[static_cast<size_t>(w)]);
                }
            } else {
                Frame done = top;
                stack.pop_back();
                if (stack.empty()) continue;
                Vertex p = stack.back().v;
                low[static_cast<size_t>(p)] = std::min(low[static_cast<size_t>(p)], low[static_cast<size_t>(u)]);
                if (low[static_cast<size_t>(u)] >= disc[static_cast<size_t>(p)])
                    pop_component(done.via);
            }
        }
    }
    return comps;
}

// ---- Demoucron incremental face embedding on one biconnected component ----

struct Embedder {
    // Local adjacency over the component's vertices (global ids).
    std::map<Vertex, std::vector<Vertex>> adj;
    std::set<SimpleEdge> all_edges;
    std::set<SimpleEdge> embedded_edges;
    std::set<Vertex> embedded_vertices;
    std::vector<std::vector<Vertex>> faces;

    struct Fragment {
        std::vector<Vertex> attachments;  // sorted
        std::vector<Vertex> interior;     // empty for a chord
        SimpleEdge chord{-1, -1};
    };

    explicit Embedder(const std::vector<SimpleEdge>& edges) {
        for (auto [a, b] : edges) {
            all_edges.insert({a, b});
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        for (auto& [v, list] : adj) std::sort(list.begin(), list.end());
    }

    std::vector<Vertex> initial_cycle() {
        // DFS from the smallest vertex until the first back edge (to a proper
        // ancestor) closes a cycle.
        Vertex start = adj.begin()->first;
        std::map<Vertex, Vertex> parent;
        std::map<Vertex, int> disc;
        int timer = 0;
        std::vector<std::pair<Vertex, size_t>> stack{{start, 0}};
        parent[start] = -1;
        disc[start] = timer++;
        while (!stack.empty()) {
            auto& [u, next] = stack.back();
            if (next >= adj[u].size()) {
                stack.pop_back();
                continue;
            }
            Vertex w = adj[u][next++];
            if (w == parent[u]) continue;
            if (disc.count(w)) {
                if (disc[w] > disc[u]) continue;  // forward edge to a descendant
                std::vector<Vertex> cycle;
                for (Vertex x = u; x != w; x = parent[x]) cycle.push_back(x);
                cycle.push_back(w);
                std::reverse(cycle.begin(), cycle.end());
                return cycle;
            }
            parent[w] = u;
            disc[w] = timer++;
            stack.push_back({w, 0});
        }
        return {};  // acyclic component
    }

    bool edge_embedded(Vertex a, Vertex b) const {
        return embedded_edges.count({std::min(a, b), std::max(a, b)}) > 0;
    }

    void mark_path(const std::vector<Vertex>& path) {
        for (size_t i = 0; i + 1 < path.size(); ++i) {
            embedded_edges.insert({std::min(path[i], path[i + 1]), std::max(path[i], path[i + 1])});
            embedded_vertices.insert(path[i]);
        }
        embedded_vertices.insert(path.back());
    }

    std::vector<Fragment> fragments() {
        std::vector<Fragment> frags;
        // Chords: non-embedded edges with both endpoints embedded.
        for (const auto& e : all_edges) {
            if (embedded_edges.count(e)) continue;
            if (embedded_vertices.count(e.first) && embedded_vertices.count(e.second)) {
                Fragment f;
                f.chord = e;
                f.attachments = {e.first, e.second};
                frags.push_back(std::move(f));
            }
        }
        // Components of the non-embedded vertices plus their attachments.
        std::set<Vertex> assigned;
        for (const auto& [v, list] : adj) {
            if (embedded_vertices.count(v) || assigned.count(v)) continue;
            Fragment f;
            std::set<Vertex> attach;
            std::vector<Vertex> queue{v};
            assigned.insert(v);
            while (!queue.empty()) {
                Vertex x = queue.back();
                queue.pop_back();
                f.interior.push_back(x);
                for (Vertex w : adj[x]) {
                    if (embedded_vertices.count(w)) {
                        attach.insert(w);
                    } else if (!assigned.count(w)) {
                        assigned.insert(w);
                        queue.push_back(w);
                    }
                }
            }
            std::sort(f.interior.begin(), f.interior.end());
            f.attachments.assign(attach.begin(), attach.end());
            frags.push_back(std::move(f));
        }
        return frags;
    }

    std::vector<int> admissible_faces(const Fragment& f) const {
        std::vector<int> result;
        for (size_t i = 0; i < faces.size(); ++i) {
            std::set<Vertex> on_face(faces[i].begin(), faces[i].end());
            bool ok = true;
            for (Vertex a : f.attachments)
                if (!on_face.count(a)) {
                    ok = false;
                    break;
                }
            if (ok) result.push_back(static_cast<int>(i));
        }
        return result;
    }

    // Shortest path between two attachments through the fragment interior.
    std::vector<Vertex> fragment_path(const Fragment& f) {
        if (f.interior.empty()) return {f.chord.first, f.chord.second};
        Vertex a = f.attachments.front();
        std::set<Vertex> interior(f.interior.begin(), f.interior.end());
        std::map<Vertex, Vertex> parent;
        std::queue<Vertex> q;
        for (Vertex w : adj[a]) {
            if (interior.count(w) && !parent.count(w)) {
                parent[w] = a;
                q.push(w);
            }
        }
        while (!q.empty()) {
            Vertex x = q.front();
            q.pop();
            for (Vertex w : adj[x]) {
                if (interior.count(w)) {
                    if (!parent.count(w)) {
                        parent[w] = x;
                        q.push(w);
                    }
                } else if (w != a && embedded_vertices.count(w)) {
                    // Reached another attachment; rebuild the walk.
                    std::vector<Vertex> path{w};
                    for (Vertex y = x; y != a; y = parent[y]) path.push_back(y);
                    path.push_back(a);
                    std::reverse(path.begin(), path.end());
                    return path;
                }
            }
        }
        return {};  // unreachable in a biconnected component
    }

    void embed_path(int face_idx, const std::vector<Vertex>& path) {
        std::vector<Vertex> face = faces[static_cast<size_t>(face_idx)];
        size_t i = 0, j = 0;
        for (size_t k = 0; k < face.size(); ++k) {
            if (face[k] == path.front()) i = k;
            if (face[k] == path.back()) j = k;
        }
        std::vector<Vertex> arc1, arc2;
        for (size_t k = i;; k = (k + 1) % face.size()) {
            arc1.push_back(face[k]);
            if (k == j) break;
        }
        for (size_t k = j;; k = (k + 1) % face.size()) {
            arc2.push_back(face[k]);
            if (k == i) break;
        }
        std::vector<Vertex> inner(path.begin() + 1, path.end() - 1);
        std::vector<Vertex> face1 = arc1;
        face1.insert(face1.end(), inner.rbegin(), inner.rend());
        std::vector<Vertex> face2 = arc2;
        face2.insert(face2.end(), inner.begin(), inner.end());
        faces[static_cast<size_t>(face_idx)] = std::move(face1);
        faces.push_back(std::move(face2));
        mark_path(path);
    }

    bool run() {
        size_t m = all_edges.size();
        if (m <= 2) return true;
        size_t n_local = adj.size();
        if (n_local >= 3 && m > 3 * n_local - 6) return false;

        std::vector<Vertex> cycle = initial_cycle();
        if (cycle.empty()) return true;  // forest
        faces.push_back(cycle);
        faces.push_back(cycle);
        mark_path(cycle);
        embedded_edges.insert({std::min(cycle.front(), cycle.back()), std::max(cycle.front(), cycle.back())});

        while (embedded_edges.size() < m) {
            std::vector<Fragment> frags = fragments();
            int pick = -1;
            std::vector<int> pick_faces;
            for (size_t i = 0; i < frags.size(); ++i) {
                std::vector<int> adm = admissible_faces(frags[i]);
                if (adm.empty()) return false;
                if (adm.size() == 1) {
                    pick = static_cast<int>(i);
                    pick_faces = adm;
                    break;
                }
                if (pick == -1) {
                    pick = static_cast<int>(i);
                    pick_faces = adm;
                }
            }
            const Fragment& f = frags[static_cast<size_t>(pick)];
            std::vector<Vertex> path = fragment_path(f);
            embed_path(pick_faces.front(), path);
        }
        return true;
    }
};

bool planar_simple(int n, const std::vector<SimpleEdge>& edges) {
    if (edges.size() <= 2) return true;
    size_t active = 0;
    {
        std::set<Vertex> verts;
        for (auto [a, b] : edges) {
            verts.insert(a);
            verts.insert(b);
        }
        active = verts.size();
    }
    if (active >= 3 && edges.size() > 3 * active - 6) return false;
    for (const auto& comp : biconnected_edge_components(n, edges)) {
        Embedder emb(comp);
        if (!emb.run()) return false;
    }
    return true;
}

// Delete-while-nonplanar reduction: the survivor is exactly a K5 or K3,3
// subdivision, read off by branch vertices (degree >= 3) and the degree-2
// chains between them.
KuratowskiWitness extract_witness(int n, std::vector<SimpleEdge> edges) {
    for (size_t i = 0; i < edges.size();) {
        std::vector<SimpleEdge> without = edges;
        without.erase(without.begin() + static_cast<long>(i));
        if (!planar_simple(n, without)) {
            edges = std::move(without);
        } else {
            ++i;
        }
    }

    auto adj = adjacency(n, edges);
    KuratowskiWitness w;
    for (Vertex v = 0; v < n; ++v)
        if (adj[static_cast<size_t>(v)].size() >= 3) w.branch_vertices.push_back(v);

    std::set<SimpleEdge> used;
    for (Vertex v : w.branch_vertices) {
        for (Vertex first : adj[static_cast<size_t>(v)]) {
            SimpleEdge start{std::min(v, first), std::max(v, first)};
            if (used.count(start)) continue;
            std::vector<Vertex> path{v};
            Vertex prev = v, cur = first;
            used.insert(start);
            while (adj[static_cast<size_t>(cur)].size() == 2) {
                path.push_back(cur);
                Vertex nxt = adj[static_cast<size_t>(cur)][0] == prev ? adj[static_cast<size_t>(cur)][1]
                                                                      : adj[static_cast<size_t>(cur)][0];
                used.insert({std::min(cur, nxt), std::max(cur, nxt)});
                prev = cur;
                cur = nxt;
            }
            path.push_back(cur);
            w.paths.push_back(path);  // `used` keeps the reverse walk from firing
        }
    }
    w.kind = (w.branch_vertices.size() == 5) ? KuratowskiWitness::Kind::K5
                                             : KuratowskiWitness::Kind::K33;
    return w;
}

}  // namespace

PlanarityVerdict is_planar(const Multigraph& g) {
    std::vector<SimpleEdge> simple = simplify(g);
    if (planar_simple(g.vertex_count(), simple)) return {true, std::nullopt};
    return {false, extract_witness(g.vertex_count(), std::move(simple))};
}

}  // namespace bookem

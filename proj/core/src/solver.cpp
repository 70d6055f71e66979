#include "bookem/solver.hpp"

#include <algorithm>

#include "bookem/bipartition.hpp"
#include "bookem/connectivity.hpp"
#include "bookem/cuts.hpp"

namespace bookem {

namespace {

// Backtracking over spine orders with vertex 0 pinned and reflections
// quotiented (skip the last placement when it would start the mirror twin).
// Page feasibility of the completed-edge constraint graph is rechecked at
// every placement; both prunes are monotone, so cutting a branch never loses
// a witness. Candidate vertices are tried most-placed-neighbors-first with
// index as tie break, which fixes the canonical search order and hence the
// witness returned.
struct Searcher {
    const Multigraph& g;
    int n, m, pages;
    bool need_subham;
    long long node_limit;
    long long nodes = 0;
    bool exhausted = false;
    bool found = false;

    std::vector<std::vector<char>> adjacent;  // shared-endpoint conflicts, static
    std::vector<std::vector<char>> crossing;  // among completed edges, incremental

    std::vector<Vertex> order;
    std::vector<int> pos;
    std::vector<char> placed;
    std::vector<int> placed_neighbors;
    std::vector<EdgeId> complete;
    std::vector<char> is_complete;

    std::vector<int> page_of;        // scratch for the coloring subsearch
    std::vector<int> witness_pages;  // coloring of the accepted order

    Searcher(const Multigraph& graph, int page_count, bool subham, long long limit)
        : g(graph),
          n(graph.vertex_count()),
          m(graph.edge_count()),
          pages(page_count),
          need_subham(subham),
          node_limit(limit) {
        adjacent.assign(static_cast<size_t>(m), std::vector<char>(static_cast<size_t>(m), 0));
        for (EdgeId e = 0; e < m; ++e)
            for (EdgeId f = e + 1; f < m; ++f)
                if (g.edge(e).shares_vertex(g.edge(f)))
                    adjacent[static_cast<size_t>(e)][static_cast<size_t>(f)] =
                        adjacent[static_cast<size_t>(f)][static_cast<size_t>(e)] = 1;
        crossing.assign(static_cast<size_t>(m), std::vector<char>(static_cast<size_t>(m), 0));
        pos.assign(static_cast<size_t>(std::max(n, 1)), -1);
        placed.assign(static_cast<size_t>(std::max(n, 1)), 0);
        placed_neighbors.assign(static_cast<size_t>(std::max(n, 1)), 0);
        is_complete.assign(static_cast<size_t>(std::max(m, 1)), 0);
    }

    bool run() {
        if (n == 0) return accept();
        place(0);
        return extend();
    }

    bool accept() {
        if (!color_feasible(&witness_pages)) return false;
        if (need_subham && !crossing_bipartite()) return false;
        found = true;
        return true;
    }

    void place(Vertex v) {
        pos[static_cast<size_t>(v)] = static_cast<int>(order.size());
        order.push_back(v);
        placed[static_cast<size_t>(v)] = 1;
        for (EdgeId e : g.incident(v)) {
            Vertex u = g.edge(e).other(v);
            placed_neighbors[static_cast<size_t>(u)]++;
            if (placed[static_cast<size_t>(u)] && !is_complete[static_cast<size_t>(e)]) {
                for (EdgeId f : complete) {
                    if (crosses_at(pos, g.edge(e), g.edge(f)))
                        crossing[static_cast<size_t>(e)][static_cast<size_t>(f)] =
                            crossing[static_cast<size_t>(f)][static_cast<size_t>(e)] = 1;
                }
                complete.push_back(e);
                is_complete[static_cast<size_t>(e)] = 1;
            }
        }
    }

    void unplace(Vertex v) {
        for (EdgeId e : g.incident(v)) {
            Vertex u = g.edge(e).other(v);
            placed_neighbors[static_cast<size_t>(u)]--;
            if (is_complete[static_cast<size_t>(e)]) {
                is_complete[static_cast<size_t>(e)] = 0;
                complete.erase(std::find(complete.begin(), complete.end(), e));
                for (EdgeId f = 0; f < m; ++f)
                    crossing[static_cast<size_t>(e)][static_cast<size_t>(f)] =
                        crossing[static_cast<size_t>(f)][static_cast<size_t>(e)] = 0;
            }
        }
        placed[static_cast<size_t>(v)] = 0;
        order.pop_back();
        pos[static_cast<size_t>(v)] = -1;
    }

    bool extend() {
        if (static_cast<int>(order.size()) == n) return accept();

        std::vector<Vertex> candidates;
        candidates.reserve(static_cast<size_t>(n));
        for (Vertex v = 0; v < n; ++v)
            if (!placed[static_cast<size_t>(v)]) candidates.push_back(v);
        std::stable_sort(candidates.begin(), candidates.end(), [&](Vertex a, Vertex b) {
            return placed_neighbors[static_cast<size_t>(a)] > placed_neighbors[static_cast<size_t>(b)];
        });

        bool last_slot = static_cast<int>(order.size()) == n - 1;
        for (Vertex v : candidates) {
            if (last_slot && n >= 3 && v < order[1]) continue;  // mirror twin
            ++nodes;
            if (nodes > node_limit) {
                exhausted = true;
                return false;
            }
            place(v);
            bool ok = color_feasible(nullptr) && (!need_subham || crossing_bipartite());
            if (ok && extend()) return true;
            unplace(v);
            if (exhausted) return false;
        }
        return false;
    }

    // 2-colorability of the crossing graph over completed edges.
    bool crossing_bipartite() {
        std::vector<int> color(static_cast<size_t>(m), -1);
        std::vector<EdgeId> stack;
        for (EdgeId e : complete) {
            if (color[static_cast<size_t>(e)] != -1) continue;
            color[static_cast<size_t>(e)] = 0;
            stack.push_back(e);
            while (!stack.empty()) {
                EdgeId x = stack.back();
                stack.pop_back();
                for (EdgeId y : complete) {
                    if (!crossing[static_cast<size_t>(x)][static_cast<size_t>(y)]) continue;
                    if (color[static_cast<size_t>(y)] == -1) {
                        color[static_cast<size_t>(y)] = 1 - color[static_cast<size_t>(x)];
                        stack.push_back(y);
                    } else if (color[static_cast<size_t>(y)] == color[static_cast<size_t>(x)]) {
                        return false;
                    }
                }
            }
        }
        return true;
    }

    // Exact page assignment over completed edges: most-constrained edge
    // first, new page indices introduced in canonical order (color k+1 only
    // after k), which is sound for feasibility since pages are symmetric.
    bool color_feasible(std::vector<int>* out) {
        page_of.assign(static_cast<size_t>(m), -1);
        if (color_rec(0)) {
            if (out) *out = page_of;
            return true;
        }
        return false;
    }

    int allowed_mask(EdgeId e) const {
        int mask = (1 << pages) - 1;  // pages <= 30, enforced by the entry points
        for (EdgeId f : complete) {
            int p = page_of[static_cast<size_t>(f)];
            if (p < 0) continue;
            if (adjacent[static_cast<size_t>(e)][static_cast<size_t>(f)] ||
                crossing[static_cast<size_t>(e)][static_cast<size_t>(f)])
                mask &= ~(1 << p);
        }
        return mask;
    }

    bool color_rec(int max_used) {
        EdgeId best = -1;
        int best_count = pages + 1;
        int best_mask = 0;
        for (EdgeId e : complete) {
            if (page_of[static_cast<size_t>(e)] != -1) continue;
            int mask = allowed_mask(e);
            int count = __builtin_popcount(static_cast<unsigned>(mask));
            if (count == 0) return false;
            if (count < best_count) {
                best_count = count;
                best = e;
                best_mask = mask;
            }
        }
        if (best == -1) return true;
        int cap = std::min(pages - 1, max_used);  // introduce at most one fresh page
        for (int p = 0; p <= cap; ++p) {
            if (!(best_mask & (1 << p))) continue;
            page_of[static_cast<size_t>(best)] = p;
            if (color_rec(std::max(max_used, p + 1))) return true;
            page_of[static_cast<size_t>(best)] = -1;
        }
        return false;
    }
};

void check_witness(const Multigraph& g, const CyclicOrder& omega, const PageColoring& c,
                   bool need_subham) {
    VerifyReport report = verify_matching_book_embedding(g, omega, c);
    if (!report.ok || (need_subham && !report.subhamiltonian))
        throw GraphError("solver produced a witness that fails verification");
}

}  // namespace

MbtResult exact_mbt(const Multigraph& g, int page_budget, long long node_limit) {
    if (page_budget < 0) throw BadParameter("page_budget must be nonnegative");
    if (page_budget > 30) throw BadParameter("page budgets above 30 are not supported");
    MbtResult result;
    result.nodes = 0;
    // Pages are matchings, so mbt >= max degree; start there.
    int start = (g.edge_count() == 0) ? 0 : g.max_degree();
    for (int p = start; p <= page_budget; ++p) {
        Searcher s(g, p, false, node_limit - result.nodes);
        s.run();
        result.nodes += s.nodes;
        if (s.exhausted) {
            result.status = MbtResult::Status::Exhausted;
            return result;
        }
        if (s.found) {
            result.status = MbtResult::Status::Found;
            result.value = p;
            result.order = CyclicOrder{s.order};
            result.coloring = PageColoring{s.witness_pages};
            check_witness(g, result.order, result.coloring, false);
            return result;
        }
    }
    result.status = MbtResult::Status::NoneWithinBudget;
    return result;
}

DispersableResult exact_dispersable_subhamiltonian(const Multigraph& g, long long node_limit) {
    if (!g.is_k_regular(3) || !is_bipartite(g) || !is_connected(g))
        throw NotCubicBipartite(
            "exact_dispersable_subhamiltonian needs a connected cubic bipartite graph");

    DispersableResult result;
    Searcher s(g, 3, true, node_limit);
    s.run();
    result.nodes = s.nodes;
    if (s.found) {
        result.status = DispersableResult::Status::Found;
        result.order = CyclicOrder{s.order};
        result.coloring = PageColoring{s.witness_pages};
        check_witness(g, result.order, result.coloring, true);
    } else if (s.exhausted) {
        result.status = DispersableResult::Status::Exhausted;
    } else {
        result.status = DispersableResult::Status::NotFound;
    }
    return result;
}

}  // namespace bookem

#include "bookem/cuts.hpp"

#include "bookem/connectivity.hpp"

namespace bookem {

namespace {

// BFS component labels with two edges removed. Returns component count;
// labels are dense in discovery order of the smallest vertex.
int components_excluding(const Multigraph& g, EdgeId skip1, EdgeId skip2, std::vector<int>& label) {
    const int n = g.vertex_count();
    label.assign(static_cast<size_t>(n), -1);
    int count = 0;
    std::vector<Vertex> stack;
    for (Vertex root = 0; root < n; ++root) {
        if (label[static_cast<size_t>(root)] != -1) continue;
        int id = count++;
        label[static_cast<size_t>(root)] = id;
        stack.push_back(root);
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            for (EdgeId e : g.incident(u)) {
                if (e == skip1 || e == skip2) continue;
                Vertex v = g.edge(e).other(u);
                if (label[static_cast<size_t>(v)] == -1) {
                    label[static_cast<size_t>(v)] = id;
                    stack.push_back(v);
                }
            }
        }
    }
    return count;
}

}  // namespace

std::optional<CutSplit> cut_split_for_pair(const Multigraph& g, EdgeId e, EdgeId f) {
    if (e == f) return std::nullopt;
    if (e > f) std::swap(e, f);
    const Edge& ee = g.edge(e);
    const Edge& ff = g.edge(f);
    if (ee.shares_vertex(ff)) return std::nullopt;

    std::vector<int> label;
    int count = components_excluding(g, e, f, label);
    int base = connected_components(g).count;
    // A cut must split exactly one component in two, with both edges straddling.
    if (count != base + 1) return std::nullopt;
    if (label[static_cast<size_t>(ee.a)] == label[static_cast<size_t>(ee.b)]) return std::nullopt;
    if (label[static_cast<size_t>(ff.a)] == label[static_cast<size_t>(ff.b)]) return std::nullopt;

    CutSplit cut;
    cut.e_prime = e;
    cut.e_dprime = f;
    int one = label[static_cast<size_t>(ee.lo())];  // side One holds e's lower endpoint
    cut.u_prime = ee.lo();
    cut.w_prime = ee.hi();
    if (label[static_cast<size_t>(ff.a)] == one) {
        cut.u_dprime = ff.a;
        cut.w_dprime = ff.b;
    } else if (label[static_cast<size_t>(ff.b)] == one) {
        cut.u_dprime = ff.b;
        cut.w_dprime = ff.a;
    } else {
        return std::nullopt;  // f straddles two components not involving side One
    }
    int two = label[static_cast<size_t>(cut.w_prime)];
    if (label[static_cast<size_t>(cut.w_dprime)] != two) return std::nullopt;

    cut.side.assign(label.size(), Side::Two);
    for (size_t v = 0; v < label.size(); ++v)
        if (label[v] == one) cut.side[v] = Side::One;
    return cut;
}

std::optional<CutSplit> find_disjoint_two_edge_cut(const Multigraph& g) {
    if (!g.is_k_regular(3) || !is_bipartite(g) || !is_connected(g))
        throw NotCubicBipartite("find_disjoint_two_edge_cut needs a connected cubic bipartite graph");

    const int m = g.edge_count();
    for (EdgeId e = 0; e < m; ++e) {
        for (EdgeId f = e + 1; f < m; ++f) {
            if (g.edge(e).shares_vertex(g.edge(f))) continue;
            if (auto cut = cut_split_for_pair(g, e, f)) return cut;
        }
    }
    return std::nullopt;
}

bool check_entanglement(const Multigraph& g, const Bipartition& b, const CutSplit& cut) {
    (void)g;
    return b[cut.u_prime] != b[cut.u_dprime] && b[cut.w_prime] != b[cut.w_dprime];
}

}  // namespace bookem

#include "bookem/book.hpp"

#include <algorithm>
#include <set>

#include "bookem/bipartition.hpp"

namespace bookem {

std::vector<int> CyclicOrder::positions() const {
    std::vector<int> pos(sequence.size(), -1);
    for (size_t i = 0; i < sequence.size(); ++i) {
        Vertex v = sequence[i];
        if (v < 0 || v >= static_cast<int>(sequence.size()) || pos[static_cast<size_t>(v)] != -1)
            throw BadParameter("order is not a permutation of 0..n-1");
        pos[static_cast<size_t>(v)] = static_cast<int>(i);
    }
    return pos;
}

LinearOrder LinearOrder::reversed() const {
    LinearOrder r;
    r.sequence.assign(sequence.rbegin(), sequence.rend());
    return r;
}

LinearOrder concat(const LinearOrder& a, const LinearOrder& b) {
    LinearOrder r = a;
    r.sequence.insert(r.sequence.end(), b.sequence.begin(), b.sequence.end());
    return r;
}

LinearOrder linearize(const CyclicOrder& omega, Vertex start, bool forward) {
    const auto& seq = omega.sequence;
    const int n = static_cast<int>(seq.size());
    int at = -1;
    for (int i = 0; i < n; ++i)
        if (seq[static_cast<size_t>(i)] == start) at = i;
    if (at < 0) throw BadParameter("linearize: start vertex not in order");
    LinearOrder lin;
    lin.sequence.reserve(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        int i = forward ? (at + k) % n : (at - k % n + n) % n;
        lin.sequence.push_back(seq[static_cast<size_t>(i)]);
    }
    return lin;
}

int PageColoring::pages_used() const {
    std::set<int> used;
    for (int p : page_of)
        if (p >= 0) used.insert(p);
    return static_cast<int>(used.size());
}

bool crosses_at(const std::vector<int>& pos, const Edge& e, const Edge& f) {
    if (e.shares_vertex(f)) return false;
    int a = pos[static_cast<size_t>(e.a)];
    int b = pos[static_cast<size_t>(e.b)];
    int c = pos[static_cast<size_t>(f.a)];
    int d = pos[static_cast<size_t>(f.b)];
    if (a > b) std::swap(a, b);
    bool c_inside = a < c && c < b;
    bool d_inside = a < d && d < b;
    return c_inside != d_inside;
}

bool crosses(const CyclicOrder& omega, const Edge& e, const Edge& f) {
    return crosses_at(omega.positions(), e, f);
}

VerifyReport verify_matching_book_embedding(const Multigraph& g, const CyclicOrder& omega,
                                            const PageColoring& c) {
    if (omega.size() != g.vertex_count())
        throw BadParameter("order size does not match vertex count");
    if (static_cast<int>(c.page_of.size()) != g.edge_count())
        throw BadParameter("coloring size does not match edge count");

    VerifyReport report;
    report.max_degree = g.max_degree();
    report.page_count = c.pages_used();
    std::vector<int> pos = omega.positions();

    const int m = g.edge_count();
    for (EdgeId e = 0; e < m; ++e)
        if (c[e] < 0) report.violations.push_back({Violation::Kind::Uncolored, -1, e, -1});

    for (EdgeId e = 0; e < m; ++e) {
        if (c[e] < 0) continue;
        for (EdgeId f = e + 1; f < m; ++f) {
            if (c[e] != c[f]) continue;
            if (g.edge(e).shares_vertex(g.edge(f)))
                report.violations.push_back({Violation::Kind::SharedEndpoint, c[e], e, f});
            else if (crosses_at(pos, g.edge(e), g.edge(f)))
                report.violations.push_back({Violation::Kind::Crossing, c[e], e, f});
        }
    }
    report.subhamiltonian = is_subhamiltonian_order(g, omega);
    report.ok = report.violations.empty();
    return report;
}

Multigraph conflict_graph(const Multigraph& g, const CyclicOrder& omega) {
    std::vector<int> pos = omega.positions();
    std::vector<std::pair<Vertex, Vertex>> pairs;
    const int m = g.edge_count();
    for (EdgeId e = 0; e < m; ++e)
        for (EdgeId f = e + 1; f < m; ++f)
            if (crosses_at(pos, g.edge(e), g.edge(f))) pairs.push_back({e, f});
    return Multigraph(m, pairs);
}

bool is_subhamiltonian_order(const Multigraph& g, const CyclicOrder& omega) {
    return is_bipartite(conflict_graph(g, omega));
}

}  // namespace bookem

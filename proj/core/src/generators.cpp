#include "bookem/generators.hpp"

#include <algorithm>

#include "bookem/bipartition.hpp"
#include "bookem/cuts.hpp"

namespace bookem {

Multigraph gen_theta() {
    return Multigraph(2, {{0, 1}, {0, 1}, {0, 1}});
}

Multigraph gen_prism(int k) {
    if (k < 2) throw BadParameter("gen_prism needs k >= 2");
    const int ring = 2 * k;
    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(static_cast<size_t>(3 * ring));
    for (int i = 0; i < ring; ++i) edges.push_back({i, (i + 1) % ring});
    for (int i = 0; i < ring; ++i) edges.push_back({ring + i, ring + (i + 1) % ring});
    for (int i = 0; i < ring; ++i) edges.push_back({i, ring + i});
    return Multigraph(2 * ring, edges);
}

Multigraph gen_doubled_c4() {
    return Multigraph(4, {{0, 1}, {0, 1}, {2, 3}, {2, 3}, {0, 2}, {1, 3}});
}

Multigraph piece(PieceKind kind) {
    switch (kind) {
        case PieceKind::Theta: return gen_theta();
        case PieceKind::Cube: return gen_prism(2);
        case PieceKind::HexPrism: return gen_prism(3);
        case PieceKind::DoubledC4: return gen_doubled_c4();
    }
    throw BadParameter("unknown piece kind");
}

const char* piece_name(PieceKind kind) {
    switch (kind) {
        case PieceKind::Theta: return "theta";
        case PieceKind::Cube: return "cube";
        case PieceKind::HexPrism: return "hexprism";
        case PieceKind::DoubledC4: return "doubled-c4";
    }
    return "?";
}

Multigraph glue(const Multigraph& h1, EdgeId e1, const Multigraph& h2, EdgeId e2) {
    if (e1 < 0 || e1 >= h1.edge_count() || e2 < 0 || e2 >= h2.edge_count())
        throw BadIndex("glue: edge id out of range");
    if (!h1.is_k_regular(3) || !h2.is_k_regular(3))
        throw NotCubicBipartite("glue needs cubic pieces");
    Bipartition b1 = bipartition(h1);
    Bipartition b2 = bipartition(h2);

    const Edge& a = h1.edge(e1);
    const Edge& b = h2.edge(e2);
    Vertex u_prime = (b1[a.a] == Part::White) ? a.a : a.b;   // White side of e1
    Vertex u_dprime = h1.edge(e1).other(u_prime);
    Vertex w_prime = (b2[b.a] == Part::Black) ? b.a : b.b;   // Black side of e2
    Vertex w_dprime = h2.edge(e2).other(w_prime);

    const int n1 = h1.vertex_count();
    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(static_cast<size_t>(h1.edge_count() + h2.edge_count()));
    for (EdgeId e = 0; e < h1.edge_count(); ++e) {
        if (e == e1) continue;
        edges.push_back({h1.edge(e).a, h1.edge(e).b});
    }
    for (EdgeId e = 0; e < h2.edge_count(); ++e) {
        if (e == e2) continue;
        edges.push_back({h2.edge(e).a + n1, h2.edge(e).b + n1});
    }
    edges.push_back({u_prime, w_prime + n1});    // e': White(h1) -> Black(h2)
    edges.push_back({u_dprime, w_dprime + n1});  // e'': Black(h1) -> White(h2)
    return Multigraph(n1 + h2.vertex_count(), edges);
}

GluedInstance gen_random_glued(std::uint64_t seed, int piece_count,
                               std::span<const PieceKind> menu) {
    if (piece_count < 1) throw BadParameter("piece_count must be at least 1");
    if (menu.empty()) throw BadParameter("piece menu is empty");

    Lcg rng(seed);
    GluedInstance inst;
    inst.graph = piece(menu[rng.draw(menu.size())]);

    for (int step = 1; step < piece_count; ++step) {
        Multigraph next = piece(menu[rng.draw(menu.size())]);

        std::vector<char> reserved(static_cast<size_t>(inst.graph.edge_count()), 0);
        for (auto [x, y] : inst.planted_cuts) {
            reserved[static_cast<size_t>(x)] = 1;
            reserved[static_cast<size_t>(y)] = 1;
        }
        std::vector<EdgeId> candidates;
        for (EdgeId e = 0; e < inst.graph.edge_count(); ++e)
            if (!reserved[static_cast<size_t>(e)]) candidates.push_back(e);

        EdgeId host_edge = candidates[rng.draw(candidates.size())];
        EdgeId piece_edge = static_cast<EdgeId>(rng.draw(static_cast<std::uint64_t>(next.edge_count())));

        // Surviving ids shift down past the deleted host edge.
        for (auto& [x, y] : inst.planted_cuts) {
            if (x > host_edge) --x;
            if (y > host_edge) --y;
        }
        int m_before = inst.graph.edge_count() + next.edge_count();
        inst.graph = glue(inst.graph, host_edge, next, piece_edge);
        inst.planted_cuts.push_back({m_before - 2, m_before - 1});
    }
    return inst;
}

}  // namespace bookem

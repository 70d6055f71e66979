#include "bookem/dispersable.hpp"

#include <algorithm>
#include <cassert>

#include "bookem/bipartition.hpp"
#include "bookem/connectivity.hpp"

namespace bookem {

namespace {

constexpr int kGammaPage = 2;  // patch and cut edges land on the third page

PatchedPiece make_piece(const Multigraph& g, const CutSplit& cut, Side target, Vertex patch_a,
                        Vertex patch_b) {
    PatchedPiece piece;
    std::vector<int> local(static_cast<size_t>(g.vertex_count()), -1);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (cut.side[static_cast<size_t>(v)] == target) {
            local[static_cast<size_t>(v)] = static_cast<int>(piece.vertex_back_map.size());
            piece.vertex_back_map.push_back(v);
        }
    }
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (e == cut.e_prime || e == cut.e_dprime) continue;
        const Edge& ed = g.edge(e);
        if (cut.side[static_cast<size_t>(ed.a)] != target) continue;
        if (cut.side[static_cast<size_t>(ed.b)] != target)
            throw GraphError("cut sides are inconsistent: non-cut edge straddles");
        edges.push_back({local[static_cast<size_t>(ed.a)], local[static_cast<size_t>(ed.b)]});
        piece.edge_back_map.push_back(e);
    }
    edges.push_back({local[static_cast<size_t>(patch_a)], local[static_cast<size_t>(patch_b)]});
    piece.edge_back_map.push_back(-1);
    piece.patch_edge = static_cast<EdgeId>(edges.size()) - 1;
    piece.attach_start = local[static_cast<size_t>(patch_b)];
    piece.h = Multigraph(static_cast<int>(piece.vertex_back_map.size()), edges);
    return piece;
}

}  // namespace

std::pair<PatchedPiece, PatchedPiece> split_at_cut(const Multigraph& g, const Bipartition& b,
                                                   const CutSplit& cut) {
    if (static_cast<int>(cut.side.size()) != g.vertex_count())
        throw GraphError("cut does not belong to this graph");
    if (!check_entanglement(g, b, cut))
        throw EntanglementViolated("cut attachments do not straddle the bipartition");

    PatchedPiece one = make_piece(g, cut, Side::One, cut.u_prime, cut.u_dprime);
    PatchedPiece two = make_piece(g, cut, Side::Two, cut.w_prime, cut.w_dprime);
    for (const PatchedPiece* p : {&one, &two}) {
        if (!p->h.is_k_regular(3) || !is_bipartite(p->h))
            throw GraphError("split produced a non-cubic or non-bipartite piece");
        if (p->h.vertex_count() >= g.vertex_count())
            throw GraphError("split piece is not smaller than its parent");
    }
    return {std::move(one), std::move(two)};
}

PageColoring normalize_colors(const PageColoring& c, EdgeId e, int target_page) {
    int from = c[e];
    if (from < 0) throw BadParameter("normalize_colors: edge is uncolored");
    PageColoring out = c;
    if (from == target_page) return out;
    for (int& p : out.page_of) {
        if (p == from) p = target_page;
        else if (p == target_page) p = from;
    }
    return out;
}

std::pair<CyclicOrder, PageColoring> combine(const Multigraph& g,
                                             const PatchedPiece& left, const CyclicOrder& omega1,
                                             const PageColoring& c1,
                                             const PatchedPiece& right, const CyclicOrder& omega2,
                                             const PageColoring& c2,
                                             const CutSplit& cut) {
    if (c1[left.patch_edge] != kGammaPage || c2[right.patch_edge] != kGammaPage)
        throw BadParameter("combine: patch edges must be normalized to the gamma page");

    PageColoring spliced;
    spliced.page_of.assign(static_cast<size_t>(g.edge_count()), -1);
    for (EdgeId e = 0; e < left.h.edge_count(); ++e)
        if (e != left.patch_edge) spliced.page_of[static_cast<size_t>(left.edge_back_map[e])] = c1[e];
    for (EdgeId e = 0; e < right.h.edge_count(); ++e)
        if (e != right.patch_edge) spliced.page_of[static_cast<size_t>(right.edge_back_map[e])] = c2[e];
    spliced.page_of[static_cast<size_t>(cut.e_prime)] = kGammaPage;
    spliced.page_of[static_cast<size_t>(cut.e_dprime)] = kGammaPage;

    // Either linearization direction works on paper; verified retry keeps the
    // output certified even if one direction were ever off.
    for (int dirs = 0; dirs < 4; ++dirs) {
        bool fwd1 = (dirs & 1) == 0;
        bool fwd2 = (dirs & 2) == 0;
        LinearOrder lambda1 = linearize(omega1, left.attach_start, fwd1);
        LinearOrder lambda2 = linearize(omega2, right.attach_start, fwd2);
        LinearOrder lambda = concat(lambda1.reversed(), lambda2);

        CyclicOrder omega;
        omega.sequence.reserve(lambda.sequence.size());
        for (size_t i = 0; i < lambda.sequence.size(); ++i) {
            Vertex local = lambda.sequence[i];
            const auto& back = (i < lambda1.sequence.size()) ? left.vertex_back_map
                                                             : right.vertex_back_map;
            omega.sequence.push_back(back[static_cast<size_t>(local)]);
        }

        VerifyReport report = verify_matching_book_embedding(g, omega, spliced);
        if (report.dispersable_subhamiltonian()) return {omega, spliced};
    }
    throw CombineVerificationFailed("no linearization direction yields a verified splice");
}

namespace {

bool is_theta(const Multigraph& g) {
    return g.vertex_count() == 2 && g.edge_count() == 3;
}

struct Recursor {
    long long node_limit;
    DecompositionTrace trace;

    int leaf(DecompositionTrace::Node::Kind kind, std::vector<Vertex> root_vertices) {
        std::sort(root_vertices.begin(), root_vertices.end());
        trace.nodes.push_back({kind, std::move(root_vertices), -1, -1});
        return static_cast<int>(trace.nodes.size()) - 1;
    }

    // Embeds a connected cubic bipartite piece; to_root maps local vertex ids
    // to the ids of the graph embed_dispersable was called on.
    std::pair<CyclicOrder, PageColoring> embed(const Multigraph& h, const std::vector<Vertex>& to_root,
                                               int& trace_node) {
        if (is_theta(h)) {
            CyclicOrder omega{{0, 1}};
            PageColoring c{{0, 1, 2}};
            VerifyReport report = verify_matching_book_embedding(h, omega, c);
            if (!report.dispersable_subhamiltonian())
                throw GraphError("theta base embedding failed verification");
            trace_node = leaf(DecompositionTrace::Node::Kind::ThetaLeaf, to_root);
            return {omega, c};
        }

        std::optional<CutSplit> cut = find_disjoint_two_edge_cut(h);
        if (!cut) {
            DispersableResult res = exact_dispersable_subhamiltonian(h, node_limit);
            if (res.status == DispersableResult::Status::Exhausted)
                throw BaseCaseExhausted("3-connected base case hit the search node limit", res.nodes);
            if (res.status == DispersableResult::Status::NotFound)
                throw GraphError("no witness for a 3-connected base case; this should not happen");
            trace_node = leaf(DecompositionTrace::Node::Kind::ThreeConnectedLeaf, to_root);
            return {res.order, res.coloring};
        }

        Bipartition b = bipartition(h);
        auto [one, two] = split_at_cut(h, b, *cut);
#ifndef NDEBUG
        assert(is_planar(one.h).planar && is_planar(two.h).planar);
#endif
        auto lift = [&](const PatchedPiece& p) {
            std::vector<Vertex> lifted;
            lifted.reserve(p.vertex_back_map.size());
            for (Vertex v : p.vertex_back_map) lifted.push_back(to_root[static_cast<size_t>(v)]);
            return lifted;
        };
        int t1 = -1, t2 = -1;
        auto [omega1, c1] = embed(one.h, lift(one), t1);
        auto [omega2, c2] = embed(two.h, lift(two), t2);

        PageColoring c1n = normalize_colors(c1, one.patch_edge, kGammaPage);
        PageColoring c2n = normalize_colors(c2, two.patch_edge, kGammaPage);
        auto result = combine(h, one, omega1, c1n, two, omega2, c2n, *cut);

        std::vector<Vertex> here = to_root;
        std::sort(here.begin(), here.end());
        trace.nodes.push_back({DecompositionTrace::Node::Kind::Split, std::move(here), t1, t2});
        trace_node = static_cast<int>(trace.nodes.size()) - 1;
        return result;
    }
};

}  // namespace

Embedding embed_dispersable(const Multigraph& g, long long node_limit) {
    if (!g.is_k_regular(3)) throw NotCubic("input is not 3-regular");
    bipartition(g);  // throws NotBipartite with an odd-cycle witness
    PlanarityVerdict verdict = is_planar(g);
    if (!verdict.planar) throw NotPlanar("input is not planar", std::move(verdict));

    Components comps = connected_components(g);
    Recursor rec{node_limit, {}};
    Embedding out;
    out.coloring.page_of.assign(static_cast<size_t>(g.edge_count()), -1);

    for (int comp = 0; comp < comps.count; ++comp) {
        std::vector<Vertex> to_root;
        std::vector<int> local(static_cast<size_t>(g.vertex_count()), -1);
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            if (comps.label[static_cast<size_t>(v)] == comp) {
                local[static_cast<size_t>(v)] = static_cast<int>(to_root.size());
                to_root.push_back(v);
            }
        }
        std::vector<std::pair<Vertex, Vertex>> edges;
        std::vector<EdgeId> edge_to_root;
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            const Edge& ed = g.edge(e);
            if (comps.label[static_cast<size_t>(ed.a)] != comp) continue;
            edges.push_back({local[static_cast<size_t>(ed.a)], local[static_cast<size_t>(ed.b)]});
            edge_to_root.push_back(e);
        }
        Multigraph sub(static_cast<int>(to_root.size()), edges);

        int trace_node = -1;
        auto [omega, coloring] = rec.embed(sub, to_root, trace_node);
        rec.trace.roots.push_back(trace_node);

        for (Vertex v : omega.sequence)
            out.order.sequence.push_back(to_root[static_cast<size_t>(v)]);
        for (EdgeId e = 0; e < sub.edge_count(); ++e)
            out.coloring.page_of[static_cast<size_t>(edge_to_root[e])] = coloring[e];
    }

    out.trace = std::move(rec.trace);
    VerifyReport report = verify_matching_book_embedding(g, out.order, out.coloring);
    if (!report.dispersable_subhamiltonian())
        throw GraphError("combined embedding failed final verification");
    return out;
}

}  // namespace bookem

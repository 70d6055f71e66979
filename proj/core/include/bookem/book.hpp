#pragma once

#include <vector>

#include "bookem/multigraph.hpp"

namespace bookem {

// Spine order read cyclically; each vertex appears exactly once.
struct CyclicOrder {
    std::vector<Vertex> sequence;

    int size() const { return static_cast<int>(sequence.size()); }
    // position[v] = index of v in sequence
    std::vector<int> positions() const;
};

// Spine order with a distinguished start.
struct LinearOrder {
    std::vector<Vertex> sequence;

    LinearOrder reversed() const;
    CyclicOrder to_cyclic() const { return CyclicOrder{sequence}; }
};

LinearOrder concat(const LinearOrder& a, const LinearOrder& b);

// One of the two linear orders reading omega from `start`; forward follows
// the successor direction of the stored sequence.
LinearOrder linearize(const CyclicOrder& omega, Vertex start, bool forward);

// Total page assignment; -1 marks an uncolored edge.
struct PageColoring {
    std::vector<int> page_of;  // indexed by edge id

    int operator[](EdgeId e) const { return page_of[static_cast<size_t>(e)]; }
    // Number of distinct pages actually used.
    int pages_used() const;
};

// True iff e and f are vertex-disjoint and their endpoints interleave around
// omega. Edges sharing an endpoint never cross; parallel copies never cross.
bool crosses(const CyclicOrder& omega, const Edge& e, const Edge& f);

// Position-indexed variant used in inner loops: pos[v] = spine position.
bool crosses_at(const std::vector<int>& pos, const Edge& e, const Edge& f);

struct Violation {
    enum class Kind { SharedEndpoint, Crossing, Uncolored };
    Kind kind;
    int page;   // -1 for Uncolored
    EdgeId e;
    EdgeId f;   // -1 for Uncolored
};

// ok covers the book-embedding contract (every edge colored, each page a
// noncrossing matching). Whether the embedding is additionally dispersable
// (page_count == max degree) and subhamiltonian is reported alongside, so a
// witness using more than Delta pages still verifies ok.
struct VerifyReport {
    bool ok = false;
    int page_count = 0;
    std::vector<Violation> violations;
    bool subhamiltonian = false;
    int max_degree = 0;

    bool dispersable_subhamiltonian() const {
        return ok && page_count == max_degree && subhamiltonian;
    }
};

VerifyReport verify_matching_book_embedding(const Multigraph& g, const CyclicOrder& omega,
                                            const PageColoring& c);

// Vertices are the edge ids of g; an edge joins e, f iff crosses(omega, e, f).
Multigraph conflict_graph(const Multigraph& g, const CyclicOrder& omega);

// omega admits a 2-page (not necessarily matching) crossing-free assignment,
// i.e. the conflict graph is bipartite.
bool is_subhamiltonian_order(const Multigraph& g, const CyclicOrder& omega);

}  // namespace bookem

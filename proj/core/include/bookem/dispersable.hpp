#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bookem/book.hpp"
#include "bookem/cuts.hpp"
#include "bookem/multigraph.hpp"
#include "bookem/planarity.hpp"
#include "bookem/solver.hpp"

namespace bookem {

struct NotCubic : GraphError {
    using GraphError::GraphError;
};

struct NotPlanar : GraphError {
    NotPlanar(std::string msg, PlanarityVerdict v)
        : GraphError(std::move(msg)), verdict(std::move(v)) {}
    PlanarityVerdict verdict;
};

struct EntanglementViolated : GraphError {
    using GraphError::GraphError;
};

struct CombineVerificationFailed : GraphError {
    using GraphError::GraphError;
};

struct BaseCaseExhausted : GraphError {
    BaseCaseExhausted(std::string msg, long long n)
        : GraphError(std::move(msg)), nodes(n) {}
    long long nodes;
};

// One side of a split, restored to cubic by a patch edge joining the two
// attachment vertices. back maps translate local ids to the parent graph;
// the patch edge (always the last edge id) maps to -1.
struct PatchedPiece {
    Multigraph h;
    EdgeId patch_edge;
    std::vector<Vertex> vertex_back_map;
    std::vector<EdgeId> edge_back_map;
    Vertex attach_start;  // local id of u'' resp. w'': where linearization starts
};

// Records the recursion for diagnostics: leaves partition V(G).
struct DecompositionTrace {
    struct Node {
        enum class Kind { ThetaLeaf, ThreeConnectedLeaf, Split };
        Kind kind;
        std::vector<Vertex> vertices;  // in root-graph ids, sorted
        int left = -1;                 // child indices for Split
        int right = -1;
    };
    std::vector<Node> nodes;
    std::vector<int> roots;  // one per connected component
};

// H1 = side One + u'u'', H2 = side Two + w'w''. Both pieces come out cubic
// and bipartite; local vertex ids follow increasing parent ids, local edge
// ids follow increasing parent edge ids with the patch edge appended last.
// Throws EntanglementViolated if the cut fails the entanglement check.
std::pair<PatchedPiece, PatchedPiece> split_at_cut(const Multigraph& g, const Bipartition& b,
                                                   const CutSplit& cut);

// Page-permuted copy of c with c(e) = target (a transposition of two pages).
PageColoring normalize_colors(const PageColoring& c, EdgeId e, int target_page);

// Splices two verified piece embeddings (patch edges already on target_page
// gamma = 2) across the cut: omega = reverse(lin(omega1 from u'')) followed
// by lin(omega2 from w''), pages copied through the back maps, and both cut
// edges put on gamma. Tries the four linearization direction pairs in a fixed
// order and returns the first splice that passes the full verifier.
// Throws CombineVerificationFailed if none does.
std::pair<CyclicOrder, PageColoring> combine(const Multigraph& g,
                                             const PatchedPiece& left, const CyclicOrder& omega1,
                                             const PageColoring& c1,
                                             const PatchedPiece& right, const CyclicOrder& omega2,
                                             const PageColoring& c2,
                                             const CutSplit& cut);

struct Embedding {
    CyclicOrder order;
    PageColoring coloring;
    DecompositionTrace trace;
};

// Dispersable subhamiltonian book embedding of a cubic planar bipartite
// multigraph: recursively split at disjoint 2-edge-cuts, solve Theta and
// 3-connected leaves, splice back together. Components are embedded
// independently and their spines concatenated. The result always passes the
// full verifier with 3 pages.
// Throws NotCubic / NotBipartite / NotPlanar on hypothesis failures and
// BaseCaseExhausted when a leaf search hits node_limit.
Embedding embed_dispersable(const Multigraph& g, long long node_limit = kDefaultNodeLimit);

}  // namespace bookem

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bookem/bipartition.hpp"
#include "bookem/multigraph.hpp"

namespace bookem {

struct NotCubicBipartite : GraphError {
    using GraphError::GraphError;
};

enum class Side : std::uint8_t { One, Two };

// A vertex-disjoint 2-edge-cut {e', e''} together with the split it induces.
// e' = u'w', e'' = u''w''; u', u'' lie on side One, w', w'' on side Two.
struct CutSplit {
    EdgeId e_prime;
    EdgeId e_dprime;
    Vertex u_prime;
    Vertex u_dprime;
    Vertex w_prime;
    Vertex w_dprime;
    std::vector<Side> side;  // indexed by vertex
};

// Builds the CutSplit for the pair {e, f} if it is vertex-disjoint and its
// removal splits the graph into exactly two sides with both edges straddling.
// Side One is the side containing the lower-numbered endpoint of the edge
// with the smaller id. No regularity assumptions; returns nullopt otherwise.
std::optional<CutSplit> cut_split_for_pair(const Multigraph& g, EdgeId e, EdgeId f);

// Lexicographically least (by edge-id pair) vertex-disjoint disconnecting
// edge pair of a connected cubic bipartite multigraph, or nullopt when none
// exists -- the caller may then conclude 3-connectedness.
// Throws NotCubicBipartite when the precondition fails.
std::optional<CutSplit> find_disjoint_two_edge_cut(const Multigraph& g);

// The attachment vertices on each side lie in distinct bipartition parts.
// Always true for k-regular bipartite g with k >= 3; exposed as a check so
// callers can assert it and tests can sweep it over brute-forced cuts.
bool check_entanglement(const Multigraph& g, const Bipartition& b, const CutSplit& cut);

}  // namespace bookem

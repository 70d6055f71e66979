// Independent brute-force oracles for the test suites. Everything here is
// deliberately written from the definitions (delete-and-count connectivity,
// geometric chord intersection, exhaustive enumeration) and stays off the
// library's own code paths wherever a library result is under test.
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bookem/book.hpp"
#include "bookem/multigraph.hpp"

namespace oracles {

using bookem::CyclicOrder;
using bookem::EdgeId;
using bookem::Multigraph;
using bookem::Vertex;

// Component count with vertex/edge masks, by plain BFS.
int component_count(const Multigraph& g, const std::vector<char>* dead_vertices = nullptr,
                    const std::vector<char>* dead_edges = nullptr);

std::vector<Vertex> cutpoints_delete_and_count(const Multigraph& g);
std::vector<EdgeId> bridges_delete_and_count(const Multigraph& g);

// All vertex-disjoint edge pairs whose removal disconnects the graph.
std::vector<std::pair<EdgeId, EdgeId>> disjoint_two_edge_cuts(const Multigraph& g);

// Chord intersection on points of a circle placed by spine position.
bool crosses_geometric(const CyclicOrder& omega, const bookem::Edge& e, const bookem::Edge& f);

// Exhaustive mbt: every cyclic order (vertex 0 pinned, reflections skipped)
// times every page assignment, smallest page count <= budget or nullopt.
std::optional<int> mbt_naive(const Multigraph& g, int page_budget);

// Exists a 2-page crossing-free assignment for omega, by trying all 2^m
// (requires m <= 20).
bool subhamiltonian_bruteforce(const Multigraph& g, const CyclicOrder& omega);

// Planarity by exhaustive K5 / K3,3 minor search (n <= 7).
bool planar_by_minors(const Multigraph& g);

// Multigraph isomorphism by backtracking on degree-compatible assignments.
bool isomorphic(const Multigraph& a, const Multigraph& b);

// Small test graphs.
Multigraph cycle_graph(int k);
Multigraph path_graph(int k);
Multigraph complete_graph(int k);
Multigraph complete_bipartite(int a, int b);
Multigraph doubled_edge();  // 2 vertices, 2 parallel edges (2-regular)

}  // namespace oracles

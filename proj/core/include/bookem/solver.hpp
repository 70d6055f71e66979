#pragma once

#include <cstdint>

#include "bookem/book.hpp"
#include "bookem/multigraph.hpp"

namespace bookem {

inline constexpr long long kDefaultNodeLimit = 100'000'000;

// Exact search over spine orders. Vertex 0 is pinned to the first spine slot
// and reflections are quotiented, so (n-1)!/2 orders are considered; vertices
// are appended most-constrained-first (placed-neighbor count, then index) and
// a branch dies as soon as the completed-edge constraint graph has no page
// assignment within budget. A search node is one vertex placement.

struct MbtResult {
    enum class Status { Found, NoneWithinBudget, Exhausted };
    Status status;
    int value = 0;          // exact mbt when Found
    CyclicOrder order;      // witness when Found
    PageColoring coloring;  // witness when Found
    long long nodes = 0;
};

// Least p <= page_budget admitting a crossing-free assignment into p matching
// pages, with a verified witness. Exhausted means the node limit was hit with
// the value still unknown; NoneWithinBudget is a proof that mbt > page_budget.
MbtResult exact_mbt(const Multigraph& g, int page_budget,
                    long long node_limit = kDefaultNodeLimit);

struct DispersableResult {
    enum class Status { Found, NotFound, Exhausted };
    Status status;
    CyclicOrder order;
    PageColoring coloring;
    long long nodes = 0;
};

// Witness with exactly 3 matching pages, crossing-free, on a subhamiltonian
// order. Intended for 3-connected cubic planar bipartite base cases, where
// existence is guaranteed; there NotFound would indicate a bug, while for
// nonplanar inputs (K33) it is the true answer. Exhausted reports the node
// limit was hit with the question still open.
// Throws NotCubicBipartite if g is not connected cubic bipartite.
DispersableResult exact_dispersable_subhamiltonian(const Multigraph& g,
                                                   long long node_limit = kDefaultNodeLimit);

}  // namespace bookem

#pragma once

#include <cstdint>
#include <vector>

#include "bookem/multigraph.hpp"

namespace bookem {

enum class Part : std::uint8_t { White, Black };

inline Part opposite(Part p) { return p == Part::White ? Part::Black : Part::White; }

struct Bipartition {
    std::vector<Part> part;  // indexed by vertex

    Part operator[](Vertex v) const { return part[static_cast<size_t>(v)]; }
};

// Carries an odd closed walk (first vertex repeated at the end) as witness.
struct NotBipartite : GraphError {
    NotBipartite(std::string msg, std::vector<Vertex> cycle)
        : GraphError(std::move(msg)), odd_cycle(std::move(cycle)) {}
    std::vector<Vertex> odd_cycle;
};

// BFS 2-coloring per component; the lowest vertex of each component is White.
// Throws NotBipartite with an odd-cycle witness.
Bipartition bipartition(const Multigraph& g);

bool is_bipartite(const Multigraph& g);

// In-degree minus out-degree of v under the White->Black orientation,
// counting only edges with both endpoints in h_vertices.
int oriented_degree(const Multigraph& g, const Bipartition& b,
                    const std::vector<Vertex>& h_vertices, Vertex v);

}  // namespace bookem

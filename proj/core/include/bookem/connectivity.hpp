#pragma once

#include <vector>

#include "bookem/multigraph.hpp"

namespace bookem {

// Component label per vertex, labels dense in 0..count-1 in order of the
// smallest vertex of each component.
struct Components {
    std::vector<int> label;
    int count = 0;
};

Components connected_components(const Multigraph& g);
bool is_connected(const Multigraph& g);  // true for n <= 1

// Vertices whose removal increases the component count.
std::vector<Vertex> cutpoints(const Multigraph& g);

// Edges whose removal disconnects their component. A parallel edge is never
// a bridge (its twin keeps the endpoints joined).
std::vector<EdgeId> bridges(const Multigraph& g);

}  // namespace bookem

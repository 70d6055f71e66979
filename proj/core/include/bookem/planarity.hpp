#pragma once

#include <optional>
#include <vector>

#include "bookem/multigraph.hpp"

namespace bookem {

// Subdivision certificate for nonplanarity: the branch vertices of a K5 or
// K3,3 together with the internally disjoint connecting paths (each path
// stored as a vertex walk including both branch endpoints).
struct KuratowskiWitness {
    enum class Kind { K5, K33 };
    Kind kind;
    std::vector<Vertex> branch_vertices;
    std::vector<std::vector<Vertex>> paths;
};

struct PlanarityVerdict {
    bool planar;
    std::optional<KuratowskiWitness> witness;  // best-effort, nonplanar only
};

// Incremental face-embedding planarity test (Demoucron style), run per
// biconnected component of the simplification of g. Parallel edges never
// change planarity of a loopless multigraph, so multiplicities are dropped
// up front. Quadratic, deterministic.
PlanarityVerdict is_planar(const Multigraph& g);

}  // namespace bookem

#pragma once

#include <string>

#include "bookem/book.hpp"
#include "bookem/multigraph.hpp"

namespace bookem {

struct RenderOptions {
    // Stroke same-page crossing or endpoint-sharing arcs in red on top.
    bool highlight_conflicts = false;
};

// Arc diagram: vertices as dots on a horizontal spine in omega order, every
// edge a semicircular arc above the spine, one fixed named stroke per page,
// parallel copies at increasing radii. Output bytes are a pure function of
// the inputs.
std::string render_arc_diagram(const Multigraph& g, const CyclicOrder& omega,
                               const PageColoring& c, const RenderOptions& opts = {});

}  // namespace bookem

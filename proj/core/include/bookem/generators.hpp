#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bookem/multigraph.hpp"

namespace bookem {

// 64-bit linear congruential generator (MMIX constants). Pinned here so
// generated corpora are reproducible from the seed alone:
//   x <- 6364136223846793005 * x + 1442695040888963407   (mod 2^64)
// draw(bound) advances once and returns x % bound.
class Lcg {
  public:
    explicit Lcg(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ = 6364136223846793005ULL * state_ + 1442695040888963407ULL;
        return state_;
    }
    std::uint64_t draw(std::uint64_t bound) { return next() % bound; }

  private:
    std::uint64_t state_;
};

// Two vertices joined by three parallel edges (the trivial cubic multigraph).
Multigraph gen_theta();

// Even prism C_{2k} x K_2: 4k vertices, 6k edges, cubic bipartite planar
// 3-connected. k = 2 is the cube. Throws BadParameter for k < 2.
Multigraph gen_prism(int k);

// Vertices a,b,c,d = 0..3; edges ab x2, cd x2, ac, bd. The smallest cubic
// bipartite multigraph with a disjoint 2-edge-cut ({ac, bd}).
Multigraph gen_doubled_c4();

enum class PieceKind { Theta, Cube, HexPrism, DoubledC4 };

Multigraph piece(PieceKind kind);
const char* piece_name(PieceKind kind);

// Deletes e1 = u'u'' from h1 and e2 = w'w'' from h2, then joins the sides by
// e' = u'w' and e'' = u''w'' choosing endpoints so that e' runs White(h1) to
// Black(h2) under the canonical bipartitions (no part swap needed). Vertices
// keep their ids (h2 offset by |h1|); surviving edges keep their relative
// order, e' and e'' get the last two ids. The result is cubic bipartite with
// planted disjoint 2-edge-cut {e', e''}, and planar whenever h1, h2 are.
Multigraph glue(const Multigraph& h1, EdgeId e1, const Multigraph& h2, EdgeId e2);

struct GluedInstance {
    Multigraph graph;
    // Planted disjoint 2-edge-cuts, lower id first, in gluing order.
    std::vector<std::pair<EdgeId, EdgeId>> planted_cuts;
};

// Left-deep random gluing of piece_count pieces drawn from menu, driven by
// the Lcg above. Glue edges on the accumulated side avoid previously planted
// cut edges, so every planted pair survives into the final graph.
GluedInstance gen_random_glued(std::uint64_t seed, int piece_count,
                               std::span<const PieceKind> menu);

}  // namespace bookem

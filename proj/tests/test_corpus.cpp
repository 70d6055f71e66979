#include <doctest.h>

#include <algorithm>
#include <set>

#include "bookem/connectivity.hpp"
#include "bookem/cuts.hpp"
#include "bookem/dispersable.hpp"
#include "bookem/generators.hpp"
#include "bookem/mel.hpp"
#include "bookem/planarity.hpp"
#include "bookem/svg.hpp"
#include "oracles.hpp"

using namespace bookem;

TEST_CASE("generators produce loopless cubic bipartite planar graphs") {
    std::vector<Multigraph> graphs = {gen_theta(), gen_doubled_c4()};
    for (int k = 2; k <= 6; ++k) graphs.push_back(gen_prism(k));
    std::vector<PieceKind> menu{PieceKind::Theta, PieceKind::Cube, PieceKind::HexPrism,
                                PieceKind::DoubledC4};
    for (std::uint64_t seed = 1; seed <= 8; ++seed)
        graphs.push_back(gen_random_glued(seed, 3, menu).graph);

    for (const Multigraph& g : graphs) {
        CHECK(g.is_k_regular(3));
        CHECK(is_bipartite(g));
        CHECK(is_planar(g).planar);
        CHECK(is_connected(g));
    }
}

TEST_CASE("gen_theta and gen_prism shapes") {
    Multigraph theta = gen_theta();
    CHECK(theta.vertex_count() == 2);
    CHECK(theta.edge_count() == 3);

    Multigraph cube = gen_prism(2);
    CHECK(cube.vertex_count() == 8);
    CHECK(cube.edge_count() == 12);
    CHECK(oracles::isomorphic(cube, Multigraph(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0},
                                                   {4, 5}, {5, 6}, {6, 7}, {7, 4},
                                                   {0, 4}, {1, 5}, {2, 6}, {3, 7}})));

    Multigraph hex = gen_prism(3);
    CHECK(hex.vertex_count() == 12);
    CHECK(hex.edge_count() == 18);

    CHECK_THROWS_AS(gen_prism(1), BadParameter);
    CHECK_THROWS_AS(gen_prism(0), BadParameter);
}

TEST_CASE("glue of two thetas is the doubled-C4") {
    Multigraph g = glue(gen_theta(), 2, gen_theta(), 2);
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 6);
    CHECK(oracles::isomorphic(g, gen_doubled_c4()));
    // The planted pair is the last two ids and is a genuine disjoint cut.
    auto cut = cut_split_for_pair(g, 4, 5);
    CHECK(cut.has_value());
}

TEST_CASE("glue keeps planarity and plants a cut for larger pieces") {
    Multigraph g = glue(gen_prism(2), 3, gen_prism(2), 9);
    CHECK(g.vertex_count() == 16);
    CHECK(g.is_k_regular(3));
    CHECK(is_bipartite(g));
    CHECK(is_planar(g).planar);
    auto cut = cut_split_for_pair(g, g.edge_count() - 2, g.edge_count() - 1);
    REQUIRE(cut.has_value());
    auto [one, two] = split_at_cut(g, bipartition(g), *cut);
    CHECK(oracles::isomorphic(one.h, gen_prism(2)));
    CHECK(oracles::isomorphic(two.h, gen_prism(2)));
}

TEST_CASE("gen_random_glued is deterministic and honest about its cuts") {
    std::vector<PieceKind> theta_only{PieceKind::Theta};
    GluedInstance a = gen_random_glued(1, 2, theta_only);
    GluedInstance b = gen_random_glued(1, 2, theta_only);
    CHECK(a.graph.same_edges(b.graph));
    CHECK(a.planted_cuts == b.planted_cuts);
    CHECK(oracles::isomorphic(a.graph, gen_doubled_c4()));

    GluedInstance one_piece = gen_random_glued(9, 1, theta_only);
    CHECK(one_piece.graph.same_edges(gen_theta()));
    CHECK(one_piece.planted_cuts.empty());

    std::vector<PieceKind> menu{PieceKind::Theta, PieceKind::Cube};
    GluedInstance big = gen_random_glued(1, 10, menu);
    CHECK(big.graph.vertex_count() <= 84);
    CHECK(big.planted_cuts.size() == 9);
    for (auto [e, f] : big.planted_cuts) CHECK(cut_split_for_pair(big.graph, e, f).has_value());
    Embedding emb = embed_dispersable(big.graph);
    CHECK(verify_matching_book_embedding(big.graph, emb.order, emb.coloring)
              .dispersable_subhamiltonian());
}

TEST_CASE("MEL bytes for theta and round trips") {
    CHECK(write_mel(gen_theta()) == "2 3\n0 1\n0 1\n0 1\n");
    CHECK(read_mel("2 3\n0 1\n0 1\n0 1\n").same_edges(gen_theta()));

    for (const Multigraph& g : {gen_doubled_c4(), gen_prism(3)}) {
        Multigraph back = read_mel(write_mel(g));
        CHECK(back.same_edges(g));
        CHECK(write_mel(back) == write_mel(g));
    }

    Multigraph commented = read_mel("# a graph\n\n  \n4 2\n# edge block\n0 1\n2 3\n");
    CHECK(commented.vertex_count() == 4);
    CHECK(commented.edge_count() == 2);
}

TEST_CASE("MEL parse failures carry line numbers") {
    CHECK_THROWS_AS(read_mel(""), ParseError);
    CHECK_THROWS_AS(read_mel("2\n"), ParseError);
    CHECK_THROWS_AS(read_mel("2 x\n"), ParseError);
    CHECK_THROWS_AS(read_mel("2 1\n0 1 9\n"), ParseError);
    CHECK_THROWS_AS(read_mel("2 2\n0 1\n"), ParseError);
    CHECK_THROWS_AS(read_mel("2 1\n0 2\n"), ParseError);
    CHECK_THROWS_AS(read_mel("2 1\n0 1\nleftovers\n"), ParseError);
    CHECK_THROWS_AS(read_mel("2 1\n1 1\n"), LoopRejected);

    try {
        read_mel("# leading comment\n3 2\n0 1\n0 3\n");
    } catch (const ParseError& e) {
        CHECK(e.line == 4);
    }
}

TEST_CASE("embedding format: theta witness bytes and round trips") {
    Multigraph theta = gen_theta();
    CyclicOrder omega{{0, 1}};
    PageColoring c{{0, 1, 2}};
    std::string text = write_embedding(theta, omega, c);
    CHECK(text == "order: 0 1\npage 0: 0-1\npage 1: 0-1#1\npage 2: 0-1#2\n");
    auto [omega2, c2] = read_embedding(text, theta);
    CHECK(omega2.sequence == omega.sequence);
    CHECK(c2.page_of == c.page_of);

    Multigraph g = gen_random_glued(5, 3, std::vector<PieceKind>{PieceKind::Theta,
                                                                 PieceKind::DoubledC4})
                       .graph;
    Embedding emb = embed_dispersable(g);
    std::string bytes = write_embedding(g, emb.order, emb.coloring);
    auto [o2, cc2] = read_embedding(bytes, g);
    CHECK(o2.sequence == emb.order.sequence);
    CHECK(cc2.page_of == emb.coloring.page_of);
    CHECK(write_embedding(g, o2, cc2) == bytes);
}

TEST_CASE("embedding parse failures") {
    Multigraph theta = gen_theta();
    CHECK_THROWS_AS(read_embedding("", theta), ParseError);
    CHECK_THROWS_AS(read_embedding("order: 0\n", theta), ParseError);
    CHECK_THROWS_AS(read_embedding("order: 0 0\n", theta), ParseError);
    CHECK_THROWS_AS(read_embedding("order: 0 1\npage 1: 0-1\n", theta), ParseError);
    CHECK_THROWS_AS(read_embedding("order: 0 1\npage 0: 0-1#3\n", theta), ParseError);
    CHECK_THROWS_AS(read_embedding("order: 0 1\npage 0: 0-1 0-1\n", theta), ParseError);
    CHECK_THROWS_AS(read_embedding("order: 0 1\npage 0: 2-3\n", theta), ParseError);

    // Missing edges read back as uncolored, not as parse errors.
    auto [omega, c] = read_embedding("order: 0 1\npage 0: 0-1\n", theta);
    CHECK(c.page_of == std::vector<int>{0, -1, -1});
}

TEST_CASE("svg arc diagram: deterministic, one stroke per page, parallels split") {
    Multigraph theta = gen_theta();
    CyclicOrder omega{{0, 1}};
    PageColoring c{{0, 1, 2}};
    std::string svg = render_arc_diagram(theta, omega, c);
    CHECK(svg == render_arc_diagram(theta, omega, c));
    CHECK(svg.find("<svg") == 0);

    auto count = [&](const std::string& hay, const std::string& needle) {
        size_t at = 0, found = 0;
        while ((at = hay.find(needle, at)) != std::string::npos) {
            ++found;
            at += needle.size();
        }
        return found;
    };
    CHECK(count(svg, "<circle") == 2);
    CHECK(count(svg, "<path") == 3);
    CHECK(count(svg, "stroke=\"teal\"") == 1);
    CHECK(count(svg, "stroke=\"darkorange\"") == 1);
    CHECK(count(svg, "stroke=\"slateblue\"") == 1);
    // Three distinct radii for the parallel copies.
    CHECK(svg.find("A 20 20") != std::string::npos);
    CHECK(svg.find("A 20 34") != std::string::npos);
    CHECK(svg.find("A 20 48") != std::string::npos);

    Multigraph dc4 = gen_doubled_c4();
    Embedding emb = embed_dispersable(dc4);
    std::string svg2 = render_arc_diagram(dc4, emb.order, emb.coloring);
    CHECK(count(svg2, "<circle") == 4);
    CHECK(count(svg2, "<path") == 6);
    CHECK(svg2.find("stroke=\"red\"") == std::string::npos);

    // Conflict highlighting marks the offending arcs.
    PageColoring clash{{0, 0, 1, 1, 2, 2}};
    RenderOptions opts;
    opts.highlight_conflicts = true;
    std::string svg3 = render_arc_diagram(dc4, emb.order, clash, opts);
    CHECK(count(svg3, "stroke=\"red\"") >= 2);
}

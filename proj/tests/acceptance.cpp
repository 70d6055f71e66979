// Acceptance suite: one line per criterion, nonzero exit if any fails.
//
//   1. embed succeeds and verifies on a 200-graph glued corpus (< 60 s)
//   2. exact mbt = 3 on all corpus graphs with n <= 10; 2/3/4 controls (< 5 min)
//   3. entanglement holds for every brute-forced disjoint 2-edge-cut (n <= 12)
//   4. no cutpoints or bridges across >= 100 regular bipartite graphs
//   5. glue/split round trip and byte-exact serialization round trips
//   6. base-case solver witnesses for the cube and hexagonal prism within 1e6 nodes
//   7. crossing predicate agrees with chord geometry on all orders, n <= 6

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <numeric>
#include <string>
#include <vector>

#include "bookem/bipartition.hpp"
#include "bookem/connectivity.hpp"
#include "bookem/cuts.hpp"
#include "bookem/dispersable.hpp"
#include "bookem/generators.hpp"
#include "bookem/mel.hpp"
#include "bookem/solver.hpp"
#include "oracles.hpp"

using namespace bookem;

namespace {

struct Criterion {
    bool pass = true;
    long checks = 0;
    std::string detail;

    void require(bool condition, const std::string& what) {
        ++checks;
        if (!condition && pass) {
            pass = false;
            detail = what;
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<Multigraph> glued_corpus_200() {
    std::vector<Multigraph> corpus;
    const std::vector<std::vector<PieceKind>> menus = {
        {PieceKind::Theta, PieceKind::Cube, PieceKind::HexPrism, PieceKind::DoubledC4},
        {PieceKind::Theta, PieceKind::Cube},
        {PieceKind::HexPrism},  // 7 pieces reach n = 84
        {PieceKind::DoubledC4, PieceKind::Cube, PieceKind::Theta},
    };
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        size_t menu_idx = static_cast<size_t>(seed % menus.size());
        int pieces = 2 + static_cast<int>(seed % 6);  // 2..7 pieces
        if (menu_idx == 2) pieces = 6 + static_cast<int>((seed / 4) % 2);  // n = 72 or 84
        corpus.push_back(gen_random_glued(seed, pieces, menus[menu_idx]).graph);
    }
    return corpus;
}

bool pages_are_perfect_matchings(const Multigraph& g, const PageColoring& c, int pages) {
    for (int page = 0; page < pages; ++page) {
        std::vector<int> covered(static_cast<size_t>(g.vertex_count()), 0);
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            if (c[e] != page) continue;
            covered[static_cast<size_t>(g.edge(e).a)]++;
            covered[static_cast<size_t>(g.edge(e).b)]++;
        }
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (covered[static_cast<size_t>(v)] != 1) return false;
    }
    return true;
}

Criterion criterion_1_theorem_at_desk_scale(std::string& extra) {
    Criterion c;
    auto start = std::chrono::steady_clock::now();
    std::vector<Multigraph> corpus = glued_corpus_200();
    int max_n = 0;
    for (const Multigraph& g : corpus) {
        max_n = std::max(max_n, g.vertex_count());
        try {
            Embedding emb = embed_dispersable(g);
            VerifyReport report = verify_matching_book_embedding(g, emb.order, emb.coloring);
            c.require(report.ok, "verifier found violations");
            c.require(report.page_count == 3, "page count is not 3");
            c.require(report.subhamiltonian, "conflict graph is not bipartite");
            c.require(pages_are_perfect_matchings(g, emb.coloring, 3),
                      "a page is not a perfect matching");
        } catch (const GraphError& e) {
            c.require(false, std::string("embed failed: ") + e.what());
        }
    }
    double elapsed = seconds_since(start);
    c.require(elapsed < 60.0, "corpus run exceeded 60 s");
    extra = std::to_string(corpus.size()) + " graphs, max n=" + std::to_string(max_n) + ", " +
            std::to_string(elapsed).substr(0, 5) + " s";
    return c;
}

Criterion criterion_2_oracle_equivalence(std::string& extra) {
    Criterion c;
    auto start = std::chrono::steady_clock::now();

    std::vector<Multigraph> small;
    small.push_back(gen_theta());
    small.push_back(gen_doubled_c4());
    small.push_back(gen_prism(2));
    std::vector<PieceKind> theta_menu{PieceKind::Theta};
    std::vector<PieceKind> mixed{PieceKind::Theta, PieceKind::DoubledC4};
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        Multigraph g = gen_random_glued(seed, 2 + static_cast<int>(seed % 4), theta_menu).graph;
        if (g.vertex_count() <= 10) small.push_back(g);
        Multigraph h = gen_random_glued(seed, 2, mixed).graph;
        if (h.vertex_count() <= 10) small.push_back(h);
    }
    for (const Multigraph& g : small) {
        MbtResult r = exact_mbt(g, 4);
        c.require(r.status == MbtResult::Status::Found, "mbt search did not finish");
        if (r.status == MbtResult::Status::Found)
            c.require(r.value == 3, "corpus graph has mbt != 3");
    }

    // Controls: C4 / Theta / K4 against both solver and the naive oracle.
    struct Control {
        Multigraph g;
        int expected;
    };
    std::vector<Control> controls;
    controls.push_back({oracles::cycle_graph(4), 2});
    controls.push_back({gen_theta(), 3});
    controls.push_back({oracles::complete_graph(4), 4});
    for (const Control& ctl : controls) {
        MbtResult r = exact_mbt(ctl.g, 6);
        c.require(r.status == MbtResult::Status::Found && r.value == ctl.expected,
                  "control value mismatch");
        auto naive = oracles::mbt_naive(ctl.g, 6);
        c.require(naive.has_value() && *naive == ctl.expected, "naive oracle mismatch");
    }

    double elapsed = seconds_since(start);
    c.require(elapsed < 300.0, "mbt suite exceeded 5 min");
    extra = std::to_string(small.size()) + " corpus graphs + 3 controls, " +
            std::to_string(elapsed).substr(0, 5) + " s";
    return c;
}

Criterion criterion_3_entanglement(std::string& extra) {
    Criterion c;
    std::vector<Multigraph> corpus;
    corpus.push_back(gen_theta());
    corpus.push_back(gen_doubled_c4());
    corpus.push_back(gen_prism(2));
    corpus.push_back(gen_prism(3));
    std::vector<PieceKind> menus[] = {
        {PieceKind::Theta},
        {PieceKind::Theta, PieceKind::DoubledC4},
        {PieceKind::Theta, PieceKind::Cube},
        {PieceKind::DoubledC4},
    };
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        for (const auto& menu : menus) {
            Multigraph g = gen_random_glued(seed, 2 + static_cast<int>(seed % 5), menu).graph;
            if (g.vertex_count() <= 12) corpus.push_back(g);
        }
    }

    long cuts_checked = 0;
    for (const Multigraph& g : corpus) {
        if (!is_connected(g)) continue;
        Bipartition b = bipartition(g);
        for (auto [e, f] : oracles::disjoint_two_edge_cuts(g)) {
            auto cut = cut_split_for_pair(g, e, f);
            c.require(cut.has_value(), "brute-forced cut did not split into two sides");
            if (cut) c.require(check_entanglement(g, b, *cut), "entanglement violated");
            ++cuts_checked;
        }
    }
    c.require(cuts_checked > 0, "no cuts were enumerated");
    extra = std::to_string(corpus.size()) + " graphs, " + std::to_string(cuts_checked) +
            " brute-forced cuts";
    return c;
}

Criterion criterion_4_no_cutpoints_no_bridges(std::string& extra) {
    Criterion c;
    std::vector<Multigraph> corpus;
    corpus.push_back(oracles::doubled_edge());
    for (int k = 2; k <= 30; ++k) corpus.push_back(oracles::cycle_graph(2 * k));
    corpus.push_back(gen_theta());
    corpus.push_back(gen_doubled_c4());
    for (int k = 2; k <= 8; ++k) corpus.push_back(gen_prism(k));
    std::vector<PieceKind> menu{PieceKind::Theta, PieceKind::Cube, PieceKind::DoubledC4};
    for (std::uint64_t seed = 1; seed <= 64; ++seed)
        corpus.push_back(gen_random_glued(seed, 2 + static_cast<int>(seed % 4), menu).graph);

    c.require(corpus.size() >= 100, "corpus smaller than 100 graphs");
    for (const Multigraph& g : corpus) {
        bool regular = g.is_k_regular(2) || g.is_k_regular(3);
        c.require(regular && is_bipartite(g) && is_connected(g), "corpus graph not eligible");
        c.require(cutpoints(g).empty(), "found a cutpoint");
        c.require(bridges(g).empty(), "found a bridge");
    }
    extra = std::to_string(corpus.size()) + " graphs";
    return c;
}

Criterion criterion_5_round_trips(std::string& extra) {
    Criterion c;
    const std::vector<PieceKind> all_pieces = {PieceKind::Theta, PieceKind::Cube,
                                               PieceKind::HexPrism, PieceKind::DoubledC4};
    long serializations = 0;
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        Lcg rng(seed * 7919);
        Multigraph a = piece(all_pieces[rng.draw(all_pieces.size())]);
        Multigraph b = piece(all_pieces[rng.draw(all_pieces.size())]);
        EdgeId ea = static_cast<EdgeId>(rng.draw(static_cast<std::uint64_t>(a.edge_count())));
        EdgeId eb = static_cast<EdgeId>(rng.draw(static_cast<std::uint64_t>(b.edge_count())));

        Multigraph g = glue(a, ea, b, eb);
        auto cut = cut_split_for_pair(g, g.edge_count() - 2, g.edge_count() - 1);
        c.require(cut.has_value(), "planted pair is not a cut");
        if (!cut) continue;
        auto [one, two] = split_at_cut(g, bipartition(g), *cut);
        c.require(oracles::isomorphic(one.h, a), "side One is not isomorphic to its piece");
        c.require(oracles::isomorphic(two.h, b), "side Two is not isomorphic to its piece");

        // Serialization round trips, byte for byte.
        std::string mel = write_mel(g);
        Multigraph back = read_mel(mel);
        c.require(back.same_edges(g) && write_mel(back) == mel, "MEL round trip not exact");

        Embedding emb = embed_dispersable(g);
        std::string bytes = write_embedding(g, emb.order, emb.coloring);
        auto [omega, coloring] = read_embedding(bytes, g);
        c.require(omega.sequence == emb.order.sequence &&
                      coloring.page_of == emb.coloring.page_of &&
                      write_embedding(g, omega, coloring) == bytes,
                  "embedding round trip not exact");
        serializations += 2;
    }
    extra = "50 glue constructions, " + std::to_string(serializations) + " round trips";
    return c;
}

Criterion criterion_6_base_case_solver(std::string& extra) {
    Criterion c;
    long long nodes_cube = 0, nodes_hex = 0;
    for (int k : {2, 3}) {
        Multigraph g = gen_prism(k);
        DispersableResult r = exact_dispersable_subhamiltonian(g, 1'000'000);
        c.require(r.status == DispersableResult::Status::Found,
                  "no witness within 1e6 search nodes");
        if (r.status != DispersableResult::Status::Found) continue;
        c.require(r.nodes <= 1'000'000, "node budget exceeded");
        VerifyReport report = verify_matching_book_embedding(g, r.order, r.coloring);
        c.require(report.dispersable_subhamiltonian(), "witness failed verification");
        (k == 2 ? nodes_cube : nodes_hex) = r.nodes;
    }
    extra = "cube: " + std::to_string(nodes_cube) + " nodes, hexagonal prism: " +
            std::to_string(nodes_hex) + " nodes";
    return c;
}

Criterion criterion_7_crossing_micro_suite(std::string& extra) {
    Criterion c;
    long comparisons = 0;
    for (int n = 2; n <= 6; ++n) {
        std::vector<std::pair<Vertex, Vertex>> pairs;
        for (Vertex a = 0; a < n; ++a)
            for (Vertex b = a + 1; b < n; ++b) pairs.push_back({a, b});

        std::vector<Vertex> rest;
        for (Vertex v = 1; v < n; ++v) rest.push_back(v);
        do {
            CyclicOrder omega;
            omega.sequence.push_back(0);
            omega.sequence.insert(omega.sequence.end(), rest.begin(), rest.end());
            for (size_t i = 0; i < pairs.size(); ++i) {
                for (size_t j = i; j < pairs.size(); ++j) {
                    Edge e{pairs[i].first, pairs[i].second};
                    Edge f{pairs[j].first, pairs[j].second};
                    bool lib = crosses(omega, e, f);
                    bool geo = oracles::crosses_geometric(omega, e, f);
                    c.require(lib == geo, "predicate disagrees with chord geometry");
                    ++comparisons;
                }
            }
        } while (std::next_permutation(rest.begin(), rest.end()));
    }
    extra = std::to_string(comparisons) + " comparisons across all orders, n <= 6";
    return c;
}

}  // namespace

int main() {
    struct Entry {
        const char* name;
        Criterion (*run)(std::string&);
    };
    const Entry entries[] = {
        {"theorem-at-desk-scale corpus", criterion_1_theorem_at_desk_scale},
        {"exact mbt oracle equivalence", criterion_2_oracle_equivalence},
        {"entanglement sweep", criterion_3_entanglement},
        {"no cutpoints / no bridges", criterion_4_no_cutpoints_no_bridges},
        {"glue/split and serialization round trips", criterion_5_round_trips},
        {"base-case solver budget", criterion_6_base_case_solver},
        {"crossing predicate micro-suite", criterion_7_crossing_micro_suite},
    };

    int passed = 0;
    const int total = static_cast<int>(sizeof(entries) / sizeof(entries[0]));
    for (int i = 0; i < total; ++i) {
        auto start = std::chrono::steady_clock::now();
        std::string extra;
        Criterion c;
        try {
            c = entries[i].run(extra);
        } catch (const std::exception& e) {
            c.pass = false;
            c.detail = std::string("exception: ") + e.what();
        }
        double elapsed = seconds_since(start);
        if (c.pass) ++passed;
        std::printf("[%d/%d] %s: %s (%s; %ld checks, %.2f s)\n", i + 1, total, entries[i].name,
                    c.pass ? "PASS" : "FAIL", c.pass ? extra.c_str() : c.detail.c_str(), c.checks,
                    elapsed);
        std::fflush(stdout);
    }
    std::printf("ACCEPTANCE: %d/%d criteria passed\n", passed, total);
    return passed == total ? 0 : 1;
}

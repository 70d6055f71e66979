#include <benchmark/benchmark.h>

#include "bookem/cuts.hpp"
#include "bookem/dispersable.hpp"
#include "bookem/generators.hpp"
#include "bookem/planarity.hpp"
#include "bookem/solver.hpp"

using namespace bookem;

namespace {

Multigraph glued_instance(int pieces) {
    std::vector<PieceKind> menu{PieceKind::Theta, PieceKind::Cube, PieceKind::HexPrism,
                                PieceKind::DoubledC4};
    return gen_random_glued(42, pieces, menu).graph;
}

void BM_EmbedGlued(benchmark::State& state) {
    Multigraph g = glued_instance(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        Embedding emb = embed_dispersable(g);
        benchmark::DoNotOptimize(emb.order.sequence.data());
    }
    state.SetLabel("n=" + std::to_string(g.vertex_count()));
}
BENCHMARK(BM_EmbedGlued)->Arg(2)->Arg(4)->Arg(6)->Arg(8)->Arg(10);

void BM_FindDisjointCut(benchmark::State& state) {
    Multigraph g = glued_instance(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto cut = find_disjoint_two_edge_cut(g);
        benchmark::DoNotOptimize(cut);
    }
    state.SetLabel("m=" + std::to_string(g.edge_count()));
}
BENCHMARK(BM_FindDisjointCut)->Arg(2)->Arg(6)->Arg(10);

void BM_BaseCaseSolver(benchmark::State& state) {
    Multigraph g = gen_prism(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        DispersableResult r = exact_dispersable_subhamiltonian(g);
        benchmark::DoNotOptimize(r.nodes);
    }
}
BENCHMARK(BM_BaseCaseSolver)->Arg(2)->Arg(3)->Arg(4);

void BM_ExactMbtCube(benchmark::State& state) {
    Multigraph g = gen_prism(2);
    for (auto _ : state) {
        MbtResult r = exact_mbt(g, 4);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(BM_ExactMbtCube);

void BM_Planarity(benchmark::State& state) {
    Multigraph g = gen_prism(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        PlanarityVerdict v = is_planar(g);
        benchmark::DoNotOptimize(v.planar);
    }
    state.SetLabel("n=" + std::to_string(g.vertex_count()));
}
BENCHMARK(BM_Planarity)->Arg(3)->Arg(8)->Arg(16);

void BM_VerifyEmbedding(benchmark::State& state) {
    Multigraph g = glued_instance(static_cast<int>(state.range(0)));
    Embedding emb = embed_dispersable(g);
    for (auto _ : state) {
        VerifyReport r = verify_matching_book_embedding(g, emb.order, emb.coloring);
        benchmark::DoNotOptimize(r.ok);
    }
    state.SetLabel("m=" + std::to_string(g.edge_count()));
}
BENCHMARK(BM_VerifyEmbedding)->Arg(4)->Arg(10);

}  // namespace

BENCHMARK_MAIN();

// Microbenchmarks for the hot paths: mutation with reduction, canonical
// forms, graded dimensions, exploration, and the polygon flip procedure.

#include <benchmark/benchmark.h>

#include "qpt/exchange_graph.hpp"
#include "qpt/path_algebra.hpp"
#include "qpt/polygon.hpp"
#include "qpt/qp_io.hpp"
#include "qpt/silting.hpp"

using namespace qpt;

namespace {

QP straight_a3() {
    return parse_qp(R"({"vertices":["1","2","3"],
        "arrows":[{"id":"a","src":"1","tgt":"2"},{"id":"b","src":"2","tgt":"3"}],
        "potential":[]})");
}

QP hexagon_cycle() {
    PolygonPair hex;
    hex.k = 6;
    hex.l = 0;
    PolygonTriangulation t;
    t.chords = {{1, 3}, {3, 5}, {1, 5}};
    return polygon_quiver(hex, t);
}

void bm_mutate(benchmark::State& state) {
    QP qp = hexagon_cycle();
    for (auto _ : state) benchmark::DoNotOptimize(mutate(qp, 0));
}
BENCHMARK(bm_mutate);

void bm_canonical_form(benchmark::State& state) {
    QP qp = mutate(hexagon_cycle(), 0);
    for (auto _ : state) benchmark::DoNotOptimize(canonical_form(qp));
}
BENCHMARK(bm_canonical_form);

void bm_jacobian_dims(benchmark::State& state) {
    QP qp = mutate(straight_a3(), 1);
    for (auto _ : state) benchmark::DoNotOptimize(jacobian_dims(qp));
}
BENCHMARK(bm_jacobian_dims);

void bm_explore(benchmark::State& state) {
    QP qp = straight_a3();
    for (auto _ : state) benchmark::DoNotOptimize(explore(qp, (int)state.range(0), Direction::Both));
}
BENCHMARK(bm_explore)->Arg(3)->Arg(5);

void bm_seg_explore(benchmark::State& state) {
    QP qp = straight_a3();
    for (auto _ : state) benchmark::DoNotOptimize(seg_explore(qp, 4, Direction::Both));
}
BENCHMARK(bm_seg_explore);

void bm_flip_sequence(benchmark::State& state) {
    PolygonPair pp;
    pp.k = 8;
    pp.l = 6;
    auto all = all_triangulations(pp);
    for (auto _ : state) {
        for (std::size_t i = 0; i < all.size(); i += 97)
            benchmark::DoNotOptimize(exconvrep_sequence(pp, all[i]));
    }
}
BENCHMARK(bm_flip_sequence);

} // namespace

BENCHMARK_MAIN();

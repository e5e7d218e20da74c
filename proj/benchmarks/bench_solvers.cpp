#include <benchmark/benchmark.h>

#include "ostp/bench.hpp"
#include "ostp/heuristics.hpp"
#include "ostp/moves.hpp"
#include "ostp/oracle.hpp"
#include "ostp/path.hpp"
#include "ostp/qa.hpp"
#include "ostp/rng.hpp"
#include "ostp/sa.hpp"

namespace {

using namespace ostp;

const QoTWeights kWeights{0.3, 0.3, 0.4};
const QoTConstraints kConstraints{0.05, 0.001, 0.3};

// Deterministic mid-size instance shared by all benchmarks at a given scale.
SocialGraph make_graph(int nodes, std::size_t edges, std::uint64_t seed) {
    GeneratorSpec gen;
    gen.node_count = nodes;
    gen.edge_count = edges;
    gen.seed = seed;
    return generate_graph(gen);
}

SubNetwork make_instance(int nodes, std::size_t edges, std::uint64_t seed) {
    const SocialGraph g = make_graph(nodes, edges, seed);
    Rng pick(derive_seed(seed, 2));
    const int s = static_cast<int>(pick.index(static_cast<std::size_t>(g.node_count())));
    int d = s;
    while (d == s) d = static_cast<int>(pick.index(static_cast<std::size_t>(g.node_count())));
    return extract_subnetwork(g, g.id(s), g.id(d), 6);
}

void BM_generate_graph(benchmark::State& state) {
    const int nodes = static_cast<int>(state.range(0));
    const std::size_t edges = static_cast<std::size_t>(nodes) * 6;
    for (auto _ : state) {
        benchmark::DoNotOptimize(make_graph(nodes, edges, 99));
    }
}
BENCHMARK(BM_generate_graph)->Arg(50)->Arg(200)->Arg(400);

void BM_extract_subnetwork(benchmark::State& state) {
    const int nodes = static_cast<int>(state.range(0));
    const SocialGraph g = make_graph(nodes, static_cast<std::size_t>(nodes) * 6, 99);
    Rng pick(derive_seed(99, 2));
    const int s = static_cast<int>(pick.index(static_cast<std::size_t>(g.node_count())));
    int d = s;
    while (d == s) d = static_cast<int>(pick.index(static_cast<std::size_t>(g.node_count())));
    const std::string src = g.id(s), dst = g.id(d);
    for (auto _ : state) {
        benchmark::DoNotOptimize(extract_subnetwork(g, src, dst, 6));
    }
}
BENCHMARK(BM_extract_subnetwork)->Arg(50)->Arg(200)->Arg(400)->Unit(benchmark::kMicrosecond);

void BM_oracle_enumeration(benchmark::State& state) {
    const SubNetwork net = make_instance(12, 26, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(optimal_path(net, kWeights, kConstraints));
    }
}
BENCHMARK(BM_oracle_enumeration)->Unit(benchmark::kMicrosecond);

void BM_mfpb_hostp(benchmark::State& state) {
    const SubNetwork net = make_instance(static_cast<int>(state.range(0)),
                                         static_cast<std::size_t>(state.range(0)) * 6, 99);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mfpb_hostp(net, kWeights, kConstraints));
    }
}
BENCHMARK(BM_mfpb_hostp)->Arg(50)->Arg(200)->Arg(400)->Unit(benchmark::kMicrosecond);

void BM_h_mcop(benchmark::State& state) {
    const SubNetwork net = make_instance(static_cast<int>(state.range(0)),
                                         static_cast<std::size_t>(state.range(0)) * 6, 99);
    for (auto _ : state) {
        benchmark::DoNotOptimize(h_mcop(net, kWeights, kConstraints, 1.0));
    }
}
BENCHMARK(BM_h_mcop)->Arg(50)->Arg(200)->Arg(400)->Unit(benchmark::kMicrosecond);

void BM_sa_solve(benchmark::State& state) {
    const SubNetwork net = make_instance(50, 300, 99);
    SaParams params;
    params.max_steps = state.range(0);
    params.seed = 31;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sa_solve(net, kWeights, kConstraints, params));
    }
}
BENCHMARK(BM_sa_solve)->Arg(200)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_qa_solve(benchmark::State& state) {
    const SubNetwork net = make_instance(50, 300, 99);
    QaParams params;
    params.max_steps = state.range(0);
    params.warmup_sweeps = 10;
    params.seed = 31;
    for (auto _ : state) {
        benchmark::DoNotOptimize(qa_solve(net, kWeights, kConstraints, params));
    }
}
BENCHMARK(BM_qa_solve)->Arg(50)->Arg(500)->Unit(benchmark::kMillisecond);

void BM_propose_move(benchmark::State& state) {
    const SubNetwork net = make_instance(200, 1200, 99);
    const MoveContext ctx(net, 20, kWeights);
    Rng rng(5);
    std::vector<int> path = random_valid_path(net, rng, 1000);
    for (auto _ : state) {
        std::vector<int> next = propose_move(ctx, path, rng);
        benchmark::DoNotOptimize(next);
        path = std::move(next);
    }
}
BENCHMARK(BM_propose_move);

void BM_local_move_delta(benchmark::State& state) {
    const SubNetwork net = make_instance(200, 1200, 99);
    Rng rng(5);
    std::vector<std::vector<int>> init;
    for (int r = 0; r < 30; ++r) init.push_back(random_valid_path(net, rng, 1000));
    ReplicaSystem sys(net, kWeights, kConstraints, 5.0, std::move(init));
    const MoveContext ctx(net, 20, kWeights);
    const double jt = coupling_jt(150.0, 30, 10.0 / 3.0, 1e6);
    int r = 0;
    for (auto _ : state) {
        const std::vector<int> prop = propose_move(ctx, sys.path(r), rng);
        benchmark::DoNotOptimize(local_move_delta(sys, r, prop, jt));
        r = (r + 1) % sys.replica_count();
    }
}
BENCHMARK(BM_local_move_delta);

void BM_run_benchmark_tiny(benchmark::State& state) {
    BenchSuite suite;
    suite.scales = {{12, 24}};
    suite.weight_groups = {kWeights};
    suite.pairs_per_scale = 1;
    suite.solvers = {"qa", "mfpb"};
    suite.master_seed = 17;
    suite.qa.max_steps = 50;
    suite.qa.warmup_sweeps = 5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_benchmark(suite));
    }
}
BENCHMARK(BM_run_benchmark_tiny)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();

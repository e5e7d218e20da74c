#ifndef OSTP_BENCH_HPP
#define OSTP_BENCH_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ostp/graph.hpp"
#include "ostp/qa.hpp"
#include "ostp/qot.hpp"
#include "ostp/sa.hpp"

namespace ostp {

struct ScaleSpec {
    int nodes;
    std::size_t edges;
};

// One graph per scale; pairs_per_scale source/target pairs per graph; every
// (scale, weight, pair, solver, restart) combination becomes one row. Solver
// run seeds derive from master_seed, so instances are identical across
// solvers and the whole table is reproducible.
struct BenchSuite {
    std::vector<ScaleSpec> scales;
    std::vector<QoTWeights> weight_groups;
    QoTConstraints constraints{0.05, 0.001, 0.3};
    int pairs_per_scale = 2;
    std::vector<std::string> solvers{"qa", "mfpb"}; // qa|sa|mfpb|hmcop|oracle
    int restarts = 1;
    int max_hops = 6;
    std::uint64_t master_seed = 20260815;
    QaParams qa;            // per-row seed overrides the seed field
    SaParams sa;
    double hmcop_lambda = 1.0;
};

// 25 scales interpolating 50..400 nodes and 63..2356 edges, the four default
// weight groups, and the default constraints
BenchSuite desk_default_suite();

struct ResultRow {
    int scale_id = 0; // 1-based
    int nodes = 0;
    std::size_t edges = 0;
    int weight_id = 0;  // 1-based
    int pair_id = 0;    // 1-based
    std::string solver;
    int restart_id = 0; // 1-based
    std::string status; // optimal-found | infeasible-instance | no-path | error: ...
    bool feasible = false;
    double utility = 0.0;    // meaningful only when feasible
    std::string path;        // space-joined node ids, empty when absent
    double wall_time = 0.0;  // includes subnetwork extraction for mfpb only
    long long steps = 0;
    std::uint64_t seed = 0;
};

std::vector<ResultRow> run_benchmark(const BenchSuite& suite);

// Header plus one line per row; RFC-style quoting; doubles shortest-roundtrip
std::string rows_to_csv(const std::vector<ResultRow>& rows);
std::vector<ResultRow> rows_from_csv(std::string_view csv);

// Per (scale, weight, solver) aggregate plus an all-scales aggregate per
// (weight, solver). qa_gain on a non-qa all-scales row is the relative mean
// utility advantage of qa over that solver for the same weight group.
struct SummaryRow {
    std::string scale; // "1".."25" or "all"
    int weight_id = 0;
    std::string solver;
    long long rows = 0;
    long long feasible_rows = 0;
    double feasible_rate = 0.0;
    double mean_utility = 0.0; // over feasible rows; 0 when none
    double mean_wall_time = 0.0;
    bool has_qa_gain = false;
    double qa_gain = 0.0;
};

std::vector<SummaryRow> summarize(const std::vector<ResultRow>& rows);
std::string summary_to_csv(const std::vector<SummaryRow>& rows);

} // namespace ostp

#endif

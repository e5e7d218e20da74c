// Command-line front end: graph generation, single solves, benchmark suites,
// and summary tables. All randomness flows from explicit --seed values.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ostp/bench.hpp"
#include "ostp/graph.hpp"
#include "ostp/heuristics.hpp"
#include "ostp/oracle.hpp"
#include "ostp/qa.hpp"
#include "ostp/qot.hpp"
#include "ostp/result.hpp"
#include "ostp/rng.hpp"
#include "ostp/sa.hpp"

using json = nlohmann::json;

namespace {

struct Triple {
    double a = 0.0, b = 0.0, c = 0.0;
};

// "0.3,0.3,0.4" -> three doubles
Triple parse_triple(const std::string& text, const std::string& what) {
    Triple t;
    std::istringstream in(text);
    char c1 = 0, c2 = 0;
    if (!(in >> t.a >> c1 >> t.b >> c2 >> t.c) || c1 != ',' || c2 != ',' || !(in >> std::ws).eof()) {
        throw std::runtime_error(what + " must be three comma-separated numbers, got '" + text +
                                 "'");
    }
    return t;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

json outcome_to_json(const ostp::SolveOutcome& out) {
    json j;
    j["solver"] = out.solver_id;
    j["status"] = ostp::to_string(out.result.status);
    j["feasible"] = out.result.feasible;
    if (out.result.feasible) {
        j["path"] = out.result.path;
        j["utility"] = out.result.utility;
        j["qot"] = {{"trust", out.result.qot.trust},
                    {"intimacy", out.result.qot.intimacy},
                    {"rho", out.result.qot.rho}};
    }
    j["steps"] = out.steps_executed;
    j["moves_attempted"] = out.moves_attempted;
    j["moves_accepted"] = out.moves_accepted;
    j["restarts_used"] = out.restarts_used;
    j["wall_time"] = out.wall_time;
    return j;
}

ostp::QaParams qa_params_from_json(const json& j, ostp::QaParams base) {
    if (j.contains("P")) base.P = j.at("P").get<int>();
    if (j.contains("T")) base.T = j.at("T").get<double>();
    if (j.contains("gamma0")) base.gamma0 = j.at("gamma0").get<double>();
    if (j.contains("xi")) base.xi = j.at("xi").get<double>();
    if (j.contains("max_steps")) base.max_steps = j.at("max_steps").get<long long>();
    if (j.contains("M")) base.M = j.at("M").get<int>();
    if (j.contains("moves_multiplier")) base.moves_multiplier = j.at("moves_multiplier").get<int>();
    if (j.contains("per_replica_budget")) base.per_replica_budget = j.at("per_replica_budget").get<bool>();
    if (j.contains("penalty_beta")) base.penalty_beta = j.at("penalty_beta").get<double>();
    if (j.contains("jt_cap")) base.jt_cap = j.at("jt_cap").get<double>();
    if (j.contains("warmup_sweeps")) base.warmup_sweeps = j.at("warmup_sweeps").get<int>();
    if (j.contains("t0")) base.t0 = j.at("t0").get<double>();
    if (j.contains("temp_schedule")) {
        const auto s = j.at("temp_schedule").get<std::string>();
        if (s == "fixed") base.temp_schedule = ostp::TempSchedule::Fixed;
        else if (s == "linear") base.temp_schedule = ostp::TempSchedule::Linear;
        else throw std::runtime_error("temp_schedule must be 'fixed' or 'linear', got '" + s + "'");
    }
    return base;
}

ostp::SaParams sa_params_from_json(const json& j, ostp::SaParams base) {
    if (j.contains("t0")) base.t0 = j.at("t0").get<double>();
    if (j.contains("cooling")) base.cooling = j.at("cooling").get<double>();
    if (j.contains("max_steps")) base.max_steps = j.at("max_steps").get<long long>();
    if (j.contains("moves_per_step")) base.moves_per_step = j.at("moves_per_step").get<int>();
    if (j.contains("M")) base.M = j.at("M").get<int>();
    if (j.contains("penalty_beta")) base.penalty_beta = j.at("penalty_beta").get<double>();
    return base;
}

// suite files override the desk-scale defaults field by field
ostp::BenchSuite suite_from_json(const json& j) {
    ostp::BenchSuite s = ostp::desk_default_suite();
    if (j.contains("scales")) {
        s.scales.clear();
        for (const auto& e : j.at("scales")) {
            if (e.is_array()) {
                if (e.size() != 2) throw std::runtime_error("scale entries need [nodes, edges]");
                s.scales.push_back({e.at(0).get<int>(), e.at(1).get<std::size_t>()});
            } else {
                s.scales.push_back(
                    {e.at("nodes").get<int>(), e.at("edges").get<std::size_t>()});
            }
        }
    }
    if (j.contains("weight_groups")) {
        s.weight_groups.clear();
        for (const auto& e : j.at("weight_groups")) {
            if (e.size() != 3) throw std::runtime_error("weight groups need three entries");
            s.weight_groups.push_back(
                {e.at(0).get<double>(), e.at(1).get<double>(), e.at(2).get<double>()});
        }
    }
    if (j.contains("constraints")) {
        const auto& e = j.at("constraints");
        if (e.size() != 3) throw std::runtime_error("constraints need three entries");
        s.constraints = {e.at(0).get<double>(), e.at(1).get<double>(), e.at(2).get<double>()};
    }
    if (j.contains("pairs_per_scale")) s.pairs_per_scale = j.at("pairs_per_scale").get<int>();
    if (j.contains("solvers")) {
        s.solvers.clear();
        for (const auto& e : j.at("solvers")) s.solvers.push_back(e.get<std::string>());
    }
    if (j.contains("restarts")) s.restarts = j.at("restarts").get<int>();
    if (j.contains("max_hops")) s.max_hops = j.at("max_hops").get<int>();
    if (j.contains("master_seed")) s.master_seed = j.at("master_seed").get<std::uint64_t>();
    if (j.contains("qa")) s.qa = qa_params_from_json(j.at("qa"), s.qa);
    if (j.contains("sa")) s.sa = sa_params_from_json(j.at("sa"), s.sa);
    if (j.contains("hmcop_lambda")) s.hmcop_lambda = j.at("hmcop_lambda").get<double>();
    return s;
}

int cmd_generate(int nodes, std::size_t edges, std::uint64_t seed, const std::string& out_path) {
    ostp::GeneratorSpec spec;
    spec.node_count = nodes;
    spec.edge_count = edges;
    spec.seed = seed;
    const auto g = ostp::generate_graph(spec);
    ostp::save_graph_file(g, out_path);
    std::cout << "wrote " << out_path << " (" << g.node_count() << " nodes, " << g.edge_count()
              << " edges)\n";
    return 0;
}

struct SolveOptions {
    std::string graph_path;
    std::string source;
    std::string target;
    std::string solver = "qa";
    std::string weights = "0.3,0.3,0.4";
    std::string constraints = "0.05,0.001,0.3";
    int max_hops = 6;
    std::uint64_t seed = 0;
    int restarts = 1;
    ostp::QaParams qa;
    ostp::SaParams sa;
    std::string temp_schedule = "fixed";
    double hmcop_lambda = 1.0;
};

ostp::SolveOutcome run_one(const ostp::SubNetwork& net, const SolveOptions& opt,
                           const ostp::QoTWeights& w, const ostp::QoTConstraints& c,
                           std::uint64_t seed) {
    if (opt.solver == "qa") {
        ostp::QaParams p = opt.qa;
        p.seed = seed;
        p.temp_schedule = opt.temp_schedule == "linear" ? ostp::TempSchedule::Linear
                                                        : ostp::TempSchedule::Fixed;
        return ostp::qa_solve(net, w, c, p);
    }
    if (opt.solver == "sa") {
        ostp::SaParams p = opt.sa;
        p.seed = seed;
        return ostp::sa_solve(net, w, c, p);
    }
    ostp::SolveOutcome out;
    const auto started = std::chrono::steady_clock::now();
    if (opt.solver == "mfpb") {
        out.result = ostp::mfpb_hostp(net, w, c);
        out.solver_id = "mfpb";
    } else if (opt.solver == "hmcop") {
        out.result = ostp::h_mcop(net, w, c, opt.hmcop_lambda);
        out.solver_id = "hmcop";
    } else if (opt.solver == "oracle") {
        out.result = ostp::optimal_path(net, w, c);
        out.solver_id = "oracle";
    } else {
        throw std::runtime_error("unknown solver '" + opt.solver +
                                 "' (expected qa|sa|mfpb|hmcop|oracle)");
    }
    out.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return out;
}

int cmd_solve(const SolveOptions& opt) {
    const auto wt = parse_triple(opt.weights, "--weights");
    const auto ct = parse_triple(opt.constraints, "--constraints");
    const ostp::QoTWeights w{wt.a, wt.b, wt.c};
    const ostp::QoTConstraints c{ct.a, ct.b, ct.c};
    ostp::validate(w);
    ostp::validate(c);
    if (opt.restarts < 1) throw std::runtime_error("--restarts must be >= 1");

    const auto g = ostp::load_graph_file(opt.graph_path);
    const auto net = ostp::extract_subnetwork(g, opt.source, opt.target, opt.max_hops);

    ostp::SolveOutcome best;
    double total_wall = 0.0;
    for (int r = 0; r < opt.restarts; ++r) {
        const std::uint64_t seed =
            opt.restarts == 1 ? opt.seed
                              : ostp::derive_seed(opt.seed, static_cast<std::uint64_t>(r + 1));
        auto out = run_one(net, opt, w, c, seed);
        total_wall += out.wall_time;
        const bool better =
            r == 0 || (out.result.feasible &&
                       (!best.result.feasible || out.result.utility > best.result.utility ||
                        (out.result.utility == best.result.utility &&
                         out.result.path.size() < best.result.path.size())));
        if (better) {
            best = std::move(out);
            best.restarts_used = r + 1;
        }
    }
    best.wall_time = total_wall;

    json j = outcome_to_json(best);
    j["graph"] = opt.graph_path;
    j["source"] = opt.source;
    j["target"] = opt.target;
    j["max_hops"] = opt.max_hops;
    j["seed"] = opt.seed;
    j["restarts"] = opt.restarts;
    std::cout << j.dump(2) << "\n";
    return best.result.status == ostp::Status::OptimalFound ? 0 : 2;
}

int cmd_bench(const std::string& suite_path, const std::string& out_path) {
    ostp::BenchSuite suite;
    if (suite_path == "default") {
        suite = ostp::desk_default_suite();
    } else {
        suite = suite_from_json(json::parse(read_file(suite_path)));
    }
    const auto rows = ostp::run_benchmark(suite);
    write_file(out_path, ostp::rows_to_csv(rows));
    std::cout << "wrote " << out_path << " (" << rows.size() << " rows)\n";
    return 0;
}

int cmd_summarize(const std::string& in_path, const std::string& out_path) {
    const auto rows = ostp::rows_from_csv(read_file(in_path));
    const auto summary = ostp::summarize(rows);
    write_file(out_path, ostp::summary_to_csv(summary));
    std::cout << "wrote " << out_path << " (" << summary.size() << " groups)\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"optimal social trust path toolkit"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "write a random social graph file");
    int gen_nodes = 0;
    std::size_t gen_edges = 0;
    std::uint64_t gen_seed = 0;
    std::string gen_out;
    gen->add_option("--nodes", gen_nodes, "node count")->required();
    gen->add_option("--edges", gen_edges, "symmetric edge count")->required();
    gen->add_option("--seed", gen_seed, "generator seed")->required();
    gen->add_option("--out", gen_out, "output graph file")->required();

    // solve
    auto* solve = app.add_subcommand("solve", "find a trust path in a graph file");
    SolveOptions opt;
    solve->add_option("--graph", opt.graph_path, "graph file")->required();
    solve->add_option("--source", opt.source, "source node id")->required();
    solve->add_option("--target", opt.target, "target node id")->required();
    solve->add_option("--solver", opt.solver, "qa|sa|mfpb|hmcop|oracle")
        ->check(CLI::IsMember({"qa", "sa", "mfpb", "hmcop", "oracle"}));
    solve->add_option("--weights", opt.weights, "wT,wr,wrho (default 0.3,0.3,0.4)");
    solve->add_option("--constraints", opt.constraints, "cT,cr,crho (default 0.05,0.001,0.3)");
    solve->add_option("--max-hops", opt.max_hops, "hop budget (default 6)");
    solve->add_option("--seed", opt.seed, "solver seed (default 0)");
    solve->add_option("--restarts", opt.restarts, "independent runs, best kept (default 1)");
    solve->add_option("--P", opt.qa.P, "replica count (qa)");
    solve->add_option("--T", opt.qa.T, "simulation temperature (qa)");
    solve->add_option("--gamma0", opt.qa.gamma0, "initial transverse field (qa)");
    solve->add_option("--xi", opt.qa.xi, "field schedule shape (qa)");
    long long steps = -1;
    solve->add_option("--max-steps", steps, "annealing steps (qa/sa)");
    int prune_m = -1;
    solve->add_option("--M", prune_m, "neighborhood prune size (qa/sa)");
    double beta = -1.0;
    solve->add_option("--beta", beta, "constraint penalty weight (qa/sa)");
    solve->add_option("--temp-schedule", opt.temp_schedule, "fixed|linear (qa)")
        ->check(CLI::IsMember({"fixed", "linear"}));
    solve->add_option("--t0", opt.qa.t0, "start temperature (qa linear schedule, sa)");
    solve->add_option("--cooling", opt.sa.cooling, "cooling multiplier (sa)");
    solve->add_option("--moves-per-step", opt.sa.moves_per_step, "proposals per step (sa)");
    solve->add_option("--lambda", opt.hmcop_lambda, "aggregation exponent (hmcop)");

    // bench
    auto* bench = app.add_subcommand("bench", "run a benchmark suite to CSV");
    std::string suite_path, bench_out;
    bench->add_option("--suite", suite_path, "suite JSON file, or 'default'")->required();
    bench->add_option("--out", bench_out, "output CSV")->required();

    // summarize
    auto* summ = app.add_subcommand("summarize", "aggregate a benchmark CSV");
    std::string summ_in, summ_out;
    summ->add_option("--in", summ_in, "benchmark CSV")->required();
    summ->add_option("--out", summ_out, "summary CSV")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return cmd_generate(gen_nodes, gen_edges, gen_seed, gen_out);
        if (solve->parsed()) {
            if (steps >= 0) {
                opt.qa.max_steps = steps;
                opt.sa.max_steps = steps;
            }
            if (prune_m >= 0) {
                opt.qa.M = prune_m;
                opt.sa.M = prune_m;
            }
            if (beta >= 0.0) {
                opt.qa.penalty_beta = beta;
                opt.sa.penalty_beta = beta;
            }
            if (solve->count("--t0")) opt.sa.t0 = opt.qa.t0;
            return cmd_solve(opt);
        }
        if (bench->parsed()) return cmd_bench(suite_path, bench_out);
        if (summ->parsed()) return cmd_summarize(summ_in, summ_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

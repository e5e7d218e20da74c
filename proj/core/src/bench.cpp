#include "ostp/bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <map>
#include <stdexcept>

#include "ostp/heuristics.hpp"
#include "ostp/oracle.hpp"
#include "ostp/path.hpp"
#include "ostp/rng.hpp"

namespace ostp {

namespace {

constexpr const char* kRowHeader =
    "scale,nodes,edges,weight,pair,solver,restart,status,feasible,utility,path,wall_time,steps,"
    "seed";
constexpr const char* kSummaryHeader =
    "scale,weight,solver,rows,feasible_rows,feasible_rate,mean_utility,mean_wall_time,qa_gain";

std::string format_double(double x) {
    char buf[32];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, x);
    (void)ec;
    return std::string(buf, p);
}

bool needs_quoting(std::string_view s) {
    return s.find_first_of(",\"\n\r") != std::string_view::npos;
}

std::string csv_field(std::string_view s) {
    if (!needs_quoting(s)) return std::string(s);
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

// RFC-style records: quoted fields may contain separators and doubled quotes
std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
    std::vector<std::vector<std::string>> records;
    std::vector<std::string> record;
    std::string field;
    bool quoted = false;
    bool any = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char ch = text[i];
        if (quoted) {
            if (ch == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field += ch;
            }
            continue;
        }
        switch (ch) {
            case '"': quoted = true; any = true; break;
            case ',':
                record.push_back(std::move(field));
                field.clear();
                any = true;
                break;
            case '\r': break;
            case '\n':
                if (any || !field.empty() || !record.empty()) {
                    record.push_back(std::move(field));
                    field.clear();
                    records.push_back(std::move(record));
                    record.clear();
                    any = false;
                }
                break;
            default: field += ch; any = true; break;
        }
    }
    if (any || !field.empty() || !record.empty()) {
        record.push_back(std::move(field));
        records.push_back(std::move(record));
    }
    return records;
}

template <class T>
T parse_num(const std::string& s, const char* what) {
    T out{};
    const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
        throw std::runtime_error(std::string("malformed ") + what + " '" + s + "'");
    }
    return out;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

bool known_solver(const std::string& s) {
    return s == "qa" || s == "sa" || s == "mfpb" || s == "hmcop" || s == "oracle";
}

// recompute everything the row claims from the emitted path
void revalidate(const SubNetwork& net, const OptResult& result, const QoTWeights& w,
                const QoTConstraints& c) {
    std::vector<int> nodes;
    nodes.reserve(result.path.size());
    for (const auto& id : result.path) {
        const int v = net.index_of(id);
        if (v < 0) throw std::runtime_error("revalidation: unknown node '" + id + "'");
        nodes.push_back(v);
    }
    if (!is_valid_path(net, nodes)) throw std::runtime_error("revalidation: path invalid");
    const QoTVector q = aggregate(net, nodes);
    if (!is_feasible(q, c)) throw std::runtime_error("revalidation: path infeasible");
    if (std::abs(utility(q, w) - result.utility) > 1e-12) {
        throw std::runtime_error("revalidation: utility mismatch");
    }
}

} // namespace

BenchSuite desk_default_suite() {
    BenchSuite suite;
    for (int i = 0; i < 25; ++i) {
        const double f = static_cast<double>(i) / 24.0;
        suite.scales.push_back(
            {static_cast<int>(std::llround(50.0 + (400.0 - 50.0) * f)),
             static_cast<std::size_t>(std::llround(63.0 + (2356.0 - 63.0) * f))});
    }
    suite.weight_groups = {
        {0.25, 0.25, 0.5},
        {0.25, 0.5, 0.25},
        {0.5, 0.25, 0.25},
        {0.3, 0.3, 0.4},
    };
    return suite;
}

std::vector<ResultRow> run_benchmark(const BenchSuite& suite) {
    if (suite.scales.empty()) throw std::invalid_argument("suite has no scales");
    if (suite.weight_groups.empty()) throw std::invalid_argument("suite has no weight groups");
    for (const auto& w : suite.weight_groups) validate(w);
    validate(suite.constraints);
    if (suite.pairs_per_scale < 1) throw std::invalid_argument("pairs_per_scale must be >= 1");
    if (suite.restarts < 1) throw std::invalid_argument("restarts must be >= 1");
    if (suite.max_hops < 1) throw std::invalid_argument("max_hops must be >= 1");
    if (suite.solvers.empty()) throw std::invalid_argument("suite has no solvers");
    for (const auto& s : suite.solvers) {
        if (!known_solver(s)) throw std::invalid_argument("unknown solver '" + s + "'");
    }

    std::vector<ResultRow> rows;
    for (std::size_t si = 0; si < suite.scales.size(); ++si) {
        const ScaleSpec scale = suite.scales[si];
        SocialGraph graph;
        std::string graph_error;
        try {
            GeneratorSpec gen;
            gen.node_count = scale.nodes;
            gen.edge_count = scale.edges;
            gen.seed = derive_seed(suite.master_seed, 1, si);
            graph = generate_graph(gen);
        } catch (const std::exception& e) {
            graph_error = e.what();
        }

        for (int pi = 0; pi < suite.pairs_per_scale; ++pi) {
            std::string source, target;
            if (graph_error.empty() && graph.node_count() >= 2) {
                Rng pick(derive_seed(suite.master_seed, 2, si, static_cast<std::uint64_t>(pi)));
                const int s = static_cast<int>(pick.index(static_cast<std::size_t>(graph.node_count())));
                int d = s;
                while (d == s) {
                    d = static_cast<int>(pick.index(static_cast<std::size_t>(graph.node_count())));
                }
                source = graph.id(s);
                target = graph.id(d);
            }

            for (std::size_t wi = 0; wi < suite.weight_groups.size(); ++wi) {
                const QoTWeights& w = suite.weight_groups[wi];
                for (const auto& solver : suite.solvers) {
                    for (int ri = 0; ri < suite.restarts; ++ri) {
                        ResultRow row;
                        row.scale_id = static_cast<int>(si) + 1;
                        row.nodes = scale.nodes;
                        row.edges = scale.edges;
                        row.weight_id = static_cast<int>(wi) + 1;
                        row.pair_id = pi + 1;
                        row.solver = solver;
                        row.restart_id = ri + 1;
                        row.seed = derive_seed(suite.master_seed, 3, si,
                                               static_cast<std::uint64_t>(pi),
                                               (wi << 20) | static_cast<std::uint64_t>(ri),
                                               fnv1a64(solver));
                        try {
                            if (!graph_error.empty()) throw std::runtime_error(graph_error);
                            if (source.empty()) {
                                throw std::runtime_error("scale too small to pick a pair");
                            }
                            const Timer extract_timer;
                            const SubNetwork net =
                                extract_subnetwork(graph, source, target, suite.max_hops);
                            const double extract_time = extract_timer.seconds();

                            OptResult result;
                            if (solver == "qa") {
                                QaParams qp = suite.qa;
                                qp.seed = row.seed;
                                SolveOutcome o = qa_solve(net, w, suite.constraints, qp);
                                result = std::move(o.result);
                                row.wall_time = o.wall_time;
                                row.steps = o.steps_executed;
                            } else if (solver == "sa") {
                                SaParams sp = suite.sa;
                                sp.seed = row.seed;
                                SolveOutcome o = sa_solve(net, w, suite.constraints, sp);
                                result = std::move(o.result);
                                row.wall_time = o.wall_time;
                                row.steps = o.steps_executed;
                            } else if (solver == "mfpb") {
                                const Timer t;
                                result = mfpb_hostp(net, w, suite.constraints);
                                row.wall_time = extract_time + t.seconds();
                            } else if (solver == "hmcop") {
                                const Timer t;
                                result = h_mcop(net, w, suite.constraints, suite.hmcop_lambda);
                                row.wall_time = t.seconds();
                            } else { // oracle
                                const Timer t;
                                result = optimal_path(net, w, suite.constraints);
                                row.wall_time = t.seconds();
                            }

                            if (result.status == Status::OptimalFound) {
                                revalidate(net, result, w, suite.constraints);
                                row.feasible = true;
                                row.utility = result.utility;
                                for (std::size_t k = 0; k < result.path.size(); ++k) {
                                    if (k) row.path += ' ';
                                    row.path += result.path[k];
                                }
                            }
                            row.status = to_string(result.status);
                        } catch (const std::exception& e) {
                            row.status = std::string("error: ") + e.what();
                            row.feasible = false;
                            row.utility = 0.0;
                            row.path.clear();
                        }
                        rows.push_back(std::move(row));
                    }
                }
            }
        }
    }
    return rows;
}

std::string rows_to_csv(const std::vector<ResultRow>& rows) {
    std::string out = kRowHeader;
    out += '\n';
    for (const auto& r : rows) {
        out += std::to_string(r.scale_id);
        out += ',';
        out += std::to_string(r.nodes);
        out += ',';
        out += std::to_string(r.edges);
        out += ',';
        out += std::to_string(r.weight_id);
        out += ',';
        out += std::to_string(r.pair_id);
        out += ',';
        out += csv_field(r.solver);
        out += ',';
        out += std::to_string(r.restart_id);
        out += ',';
        out += csv_field(r.status);
        out += ',';
        out += r.feasible ? "true" : "false";
        out += ',';
        if (r.feasible) out += format_double(r.utility);
        out += ',';
        out += csv_field(r.path);
        out += ',';
        out += format_double(r.wall_time);
        out += ',';
        out += std::to_string(r.steps);
        out += ',';
        out += std::to_string(r.seed);
        out += '\n';
    }
    return out;
}

std::vector<ResultRow> rows_from_csv(std::string_view csv) {
    const auto records = parse_csv(csv);
    if (records.empty()) throw std::runtime_error("empty csv");
    std::string header;
    for (std::size_t i = 0; i < records[0].size(); ++i) {
        if (i) header += ',';
        header += records[0][i];
    }
    if (header != kRowHeader) throw std::runtime_error("unexpected csv header '" + header + "'");
    std::vector<ResultRow> rows;
    for (std::size_t i = 1; i < records.size(); ++i) {
        const auto& f = records[i];
        if (f.size() != 14) {
            throw std::runtime_error("row " + std::to_string(i) + ": expected 14 fields, got " +
                                     std::to_string(f.size()));
        }
        ResultRow r;
        r.scale_id = parse_num<int>(f[0], "scale");
        r.nodes = parse_num<int>(f[1], "nodes");
        r.edges = parse_num<std::size_t>(f[2], "edges");
        r.weight_id = parse_num<int>(f[3], "weight");
        r.pair_id = parse_num<int>(f[4], "pair");
        r.solver = f[5];
        r.restart_id = parse_num<int>(f[6], "restart");
        r.status = f[7];
        if (f[8] == "true") {
            r.feasible = true;
        } else if (f[8] == "false") {
            r.feasible = false;
        } else {
            throw std::runtime_error("malformed feasible flag '" + f[8] + "'");
        }
        r.utility = f[9].empty() ? 0.0 : parse_num<double>(f[9], "utility");
        r.path = f[10];
        r.wall_time = parse_num<double>(f[11], "wall_time");
        r.steps = parse_num<long long>(f[12], "steps");
        r.seed = parse_num<std::uint64_t>(f[13], "seed");
        rows.push_back(std::move(r));
    }
    return rows;
}

std::vector<SummaryRow> summarize(const std::vector<ResultRow>& rows) {
    if (rows.empty()) throw std::invalid_argument("no rows to summarize");
    struct Acc {
        long long rows = 0;
        long long feasible = 0;
        double utility_sum = 0.0;
        double wall_sum = 0.0;
    };
    // scale key 0 = all-scales aggregate
    std::map<std::tuple<int, int, std::string>, Acc> groups;
    for (const auto& r : rows) {
        for (const int scale_key : {r.scale_id, 0}) {
            Acc& a = groups[{scale_key, r.weight_id, r.solver}];
            ++a.rows;
            if (r.feasible) {
                ++a.feasible;
                a.utility_sum += r.utility;
            }
            a.wall_sum += r.wall_time;
        }
    }

    std::vector<SummaryRow> out;
    for (const auto& [key, acc] : groups) {
        const auto& [scale_key, weight_id, solver] = key;
        SummaryRow s;
        s.scale = scale_key == 0 ? "all" : std::to_string(scale_key);
        s.weight_id = weight_id;
        s.solver = solver;
        s.rows = acc.rows;
        s.feasible_rows = acc.feasible;
        s.feasible_rate = static_cast<double>(acc.feasible) / static_cast<double>(acc.rows);
        s.mean_utility =
            acc.feasible ? acc.utility_sum / static_cast<double>(acc.feasible) : 0.0;
        s.mean_wall_time = acc.wall_sum / static_cast<double>(acc.rows);
        if (scale_key == 0 && solver != "qa") {
            const auto qa = groups.find({0, weight_id, std::string("qa")});
            if (qa != groups.end() && qa->second.feasible > 0 && acc.feasible > 0 &&
                s.mean_utility > 0.0) {
                const double qa_mean =
                    qa->second.utility_sum / static_cast<double>(qa->second.feasible);
                s.qa_gain = (qa_mean - s.mean_utility) / s.mean_utility;
                s.has_qa_gain = true;
            }
        }
        out.push_back(std::move(s));
    }
    // numeric scales ascending, then the all-scales block
    std::sort(out.begin(), out.end(), [](const SummaryRow& a, const SummaryRow& b) {
        const int sa = a.scale == "all" ? 1 << 30 : parse_num<int>(a.scale, "scale");
        const int sb = b.scale == "all" ? 1 << 30 : parse_num<int>(b.scale, "scale");
        if (sa != sb) return sa < sb;
        if (a.weight_id != b.weight_id) return a.weight_id < b.weight_id;
        return a.solver < b.solver;
    });
    return out;
}

std::string summary_to_csv(const std::vector<SummaryRow>& rows) {
    std::string out = kSummaryHeader;
    out += '\n';
    for (const auto& r : rows) {
        out += csv_field(r.scale);
        out += ',';
        out += std::to_string(r.weight_id);
        out += ',';
        out += csv_field(r.solver);
        out += ',';
        out += std::to_string(r.rows);
        out += ',';
        out += std::to_string(r.feasible_rows);
        out += ',';
        out += format_double(r.feasible_rate);
        out += ',';
        out += format_double(r.mean_utility);
        out += ',';
        out += format_double(r.mean_wall_time);
        out += ',';
        if (r.has_qa_gain) out += format_double(r.qa_gain);
        out += '\n';
    }
    return out;
}

} // namespace ostp

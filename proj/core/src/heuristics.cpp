#include "ostp/heuristics.hpp"

#include <cmath>
#include <queue>
#include <unordered_set>

#include "ostp/path.hpp"

namespace ostp {

std::vector<int> BackwardTable::path_from(int v) const {
    std::vector<int> out;
    int cur = v;
    while (cur >= 0) {
        out.push_back(cur);
        cur = labels[static_cast<std::size_t>(cur)].next_hop;
    }
    return out;
}

namespace {

constexpr double kInf = 1e300;

// delta or g_lambda, selected once per search
struct CostFn {
    bool use_g = false;
    double lambda = 1.0;
    const QoTConstraints* c;
    double operator()(const QoTVector& q) const {
        return use_g ? g_lambda(q, *c, lambda) : delta(q, *c);
    }
};

BackwardTable backward_search_impl(const SubNetwork& net, const CostFn& cost) {
    BackwardTable table;
    table.labels.assign(static_cast<std::size_t>(net.node_count()), {});

    auto& labels = table.labels;
    auto& target_label = labels[static_cast<std::size_t>(net.target)];
    target_label.reached = true;
    target_label.qot = QoTVector{};
    target_label.cost = cost(target_label.qot);

    struct Entry {
        double cost;
        int node;
        bool operator>(const Entry& o) const {
            if (cost != o.cost) return cost > o.cost;
            return node > o.node;
        }
    };
    std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> queue;
    queue.push({target_label.cost, net.target});
    std::vector<char> settled(static_cast<std::size_t>(net.node_count()), 0);

    auto on_recorded_path = [&](int start, int probe) {
        for (int cur = start; cur >= 0; cur = labels[static_cast<std::size_t>(cur)].next_hop) {
            if (cur == probe) return true;
        }
        return false;
    };

    while (!queue.empty()) {
        const Entry top = queue.top();
        queue.pop();
        if (settled[static_cast<std::size_t>(top.node)]) continue;
        settled[static_cast<std::size_t>(top.node)] = 1;
        const BackwardLabel via = labels[static_cast<std::size_t>(top.node)];
        if (via.hops + 1 > net.max_hops) continue;

        for (const auto& arc : net.neighbors(top.node)) {
            const int u = arc.to;
            if (settled[static_cast<std::size_t>(u)]) continue;
            if (on_recorded_path(top.node, u)) continue;

            BackwardLabel cand;
            cand.reached = true;
            cand.qot.trust = via.qot.trust * arc.trust;
            cand.qot.intimacy = via.qot.intimacy * arc.intimacy;
            cand.rho_sum = via.rho_sum + (top.node == net.target ? 0.0 : net.rho(top.node));
            cand.rho_count = via.rho_count + (top.node == net.target ? 0 : 1);
            cand.qot.rho =
                cand.rho_count == 0 ? 1.0 : cand.rho_sum / static_cast<double>(cand.rho_count);
            cand.hops = via.hops + 1;
            cand.next_hop = top.node;
            cand.cost = cost(cand.qot);

            auto& cur = labels[static_cast<std::size_t>(u)];
            const bool better =
                !cur.reached || cand.cost < cur.cost ||
                (cand.cost == cur.cost &&
                 (cand.hops < cur.hops || (cand.hops == cur.hops && cand.next_hop < cur.next_hop)));
            if (better) {
                cur = cand;
                queue.push({cand.cost, u});
            }
        }
    }
    return table;
}

struct ForeseenView {
    QoTVector qot;
    int hops = 0;
    bool simple = false;
};

// partial path + edge (u,m) + recorded backward path of m
ForeseenView foreseen(const SubNetwork& net, const BackwardTable& table,
                      const std::vector<char>& on_partial, const QoTVector& partial,
                      double partial_rho_sum, int partial_rho_count, int partial_hops, int u,
                      const SubNetwork::Arc& arc) {
    const int m = arc.to;
    const auto& label = table.labels[static_cast<std::size_t>(m)];
    ForeseenView f;
    f.hops = partial_hops + 1 + label.hops;
    f.simple = true;
    for (int cur = label.next_hop; cur >= 0;
         cur = table.labels[static_cast<std::size_t>(cur)].next_hop) {
        if (on_partial[static_cast<std::size_t>(cur)]) {
            f.simple = false;
            break;
        }
    }
    f.qot.trust = partial.trust * arc.trust * label.qot.trust;
    f.qot.intimacy = partial.intimacy * arc.intimacy * label.qot.intimacy;
    double rho_sum = partial_rho_sum + label.rho_sum;
    int rho_count = partial_rho_count + label.rho_count;
    if (u != net.source) {
        rho_sum += net.rho(u);
        ++rho_count;
    }
    if (m != net.target) {
        rho_sum += net.rho(m);
        ++rho_count;
    }
    f.qot.rho = rho_count == 0 ? 1.0 : rho_sum / static_cast<double>(rho_count);
    return f;
}

OptResult completed(const SubNetwork& net, const std::vector<int>& nodes, const QoTWeights& w,
                    const QoTConstraints& c) {
    OptResult r;
    r.qot = aggregate(net, nodes);
    r.utility = utility(r.qot, w);
    r.feasible = is_feasible(r.qot, c);
    r.status = r.feasible ? Status::OptimalFound : Status::InfeasibleInstance;
    if (r.feasible) {
        r.path.reserve(nodes.size());
        for (int v : nodes) r.path.push_back(net.id(v));
    } else {
        r.utility = 0.0;
    }
    return r;
}

} // namespace

BackwardTable backward_search(const SubNetwork& net, const QoTConstraints& c) {
    validate(c);
    return backward_search_impl(net, CostFn{false, 1.0, &c});
}

OptResult forward_search(const SubNetwork& net, const QoTWeights& w, const QoTConstraints& c,
                         const BackwardTable& table) {
    validate(w);
    validate(c);
    std::unordered_set<std::uint64_t> removed; // undirected pair keys
    const auto key = [&](int a, int b) {
        if (a > b) std::swap(a, b);
        return static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(net.node_count()) +
               static_cast<std::uint64_t>(b);
    };

    const std::size_t max_restarts = net.slots.size() + 1;
    for (std::size_t attempt = 0; attempt < max_restarts; ++attempt) {
        std::vector<int> partial{net.source};
        std::vector<char> on_partial(static_cast<std::size_t>(net.node_count()), 0);
        on_partial[static_cast<std::size_t>(net.source)] = 1;
        QoTVector q; // aggregates of the partial path, rho parts kept separately
        double rho_sum = 0.0;
        int rho_count = 0;

        bool restart = false;
        while (!restart) {
            const int u = partial.back();
            if (u == net.target) return completed(net, partial, w, c);

            const int hops = path_hops(partial);
            const SubNetwork::Arc* best = nullptr;
            double best_score = -kInf;
            if (hops < net.max_hops) {
                for (const auto& arc : net.neighbors(u)) {
                    if (on_partial[static_cast<std::size_t>(arc.to)]) continue;
                    if (!table.labels[static_cast<std::size_t>(arc.to)].reached) continue;
                    if (removed.count(key(u, arc.to))) continue;
                    // rho of partial+m is identical across candidates, so the
                    // ranking reduces to the trust and intimacy terms
                    const double score =
                        w.wT * q.trust * arc.trust + w.wr * q.intimacy * arc.intimacy;
                    if (score > best_score) {
                        best_score = score;
                        best = &arc;
                    }
                }
            }

            if (!best) {
                if (partial.size() == 1) {
                    OptResult r;
                    r.status = Status::InfeasibleInstance;
                    return r;
                }
                removed.insert(key(partial[partial.size() - 2], u));
                restart = true;
                continue;
            }

            const ForeseenView f =
                foreseen(net, table, on_partial, q, rho_sum, rho_count, hops, u, *best);
            if (!f.simple || f.hops > net.max_hops || !is_feasible(f.qot, c)) {
                removed.insert(key(u, best->to));
                restart = true;
                continue;
            }

            q.trust *= best->trust;
            q.intimacy *= best->intimacy;
            if (u != net.source) {
                rho_sum += net.rho(u);
                ++rho_count;
            }
            q.rho = rho_count == 0 ? 1.0 : rho_sum / static_cast<double>(rho_count);
            partial.push_back(best->to);
            on_partial[static_cast<std::size_t>(best->to)] = 1;
        }
    }
    OptResult r;
    r.status = Status::InfeasibleInstance;
    return r;
}

OptResult mfpb_hostp(const SubNetwork& net, const QoTWeights& w, const QoTConstraints& c) {
    if (net.empty()) {
        OptResult r;
        r.status = Status::NoPath;
        return r;
    }
    const BackwardTable table = backward_search(net, c);
    const auto& source_label = table.labels[static_cast<std::size_t>(net.source)];
    if (!source_label.reached || source_label.cost > 1.0) {
        OptResult r;
        r.status = Status::InfeasibleInstance;
        return r;
    }
    return forward_search(net, w, c, table);
}

OptResult h_mcop(const SubNetwork& net, const QoTWeights& w, const QoTConstraints& c,
                 double lambda) {
    validate(w);
    validate(c);
    if (lambda < 1.0) throw std::invalid_argument("lambda must be >= 1");
    if (net.empty()) {
        OptResult r;
        r.status = Status::NoPath;
        return r;
    }

    const BackwardTable table = backward_search_impl(net, CostFn{true, lambda, &c});
    const auto& source_label = table.labels[static_cast<std::size_t>(net.source)];
    if (!source_label.reached || g_lambda(source_label.qot, c, 1.0) > 3.0) {
        OptResult r;
        r.status = Status::InfeasibleInstance;
        return r;
    }

    // single forward walk, no link deletion: prefer feasible foreseen
    // completions by utility, otherwise follow the least-violating one
    std::vector<int> partial{net.source};
    std::vector<char> on_partial(static_cast<std::size_t>(net.node_count()), 0);
    on_partial[static_cast<std::size_t>(net.source)] = 1;
    QoTVector q;
    double rho_sum = 0.0;
    int rho_count = 0;

    while (partial.back() != net.target) {
        const int u = partial.back();
        const int hops = path_hops(partial);
        const SubNetwork::Arc* best = nullptr;
        bool best_feasible = false;
        double best_utility = -kInf;
        double best_g = kInf;
        if (hops < net.max_hops) {
            for (const auto& arc : net.neighbors(u)) {
                if (on_partial[static_cast<std::size_t>(arc.to)]) continue;
                if (!table.labels[static_cast<std::size_t>(arc.to)].reached) continue;
                const ForeseenView f =
                    foreseen(net, table, on_partial, q, rho_sum, rho_count, hops, u, arc);
                if (!f.simple || f.hops > net.max_hops) continue;
                if (is_feasible(f.qot, c)) {
                    const double fu = utility(f.qot, w);
                    if (!best_feasible || fu > best_utility) {
                        best = &arc;
                        best_feasible = true;
                        best_utility = fu;
                    }
                } else if (!best_feasible) {
                    const double fg = g_lambda(f.qot, c, lambda);
                    if (fg < best_g) {
                        best = &arc;
                        best_g = fg;
                    }
                }
            }
        }
        if (!best) {
            OptResult r;
            r.status = Status::InfeasibleInstance;
            return r;
        }
        q.trust *= best->trust;
        q.intimacy *= best->intimacy;
        if (u != net.source) {
            rho_sum += net.rho(u);
            ++rho_count;
        }
        q.rho = rho_count == 0 ? 1.0 : rho_sum / static_cast<double>(rho_count);
        partial.push_back(best->to);
        on_partial[static_cast<std::size_t>(best->to)] = 1;
    }
    return completed(net, partial, w, c);
}

} // namespace ostp

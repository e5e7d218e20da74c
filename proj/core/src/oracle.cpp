#include "ostp/oracle.hpp"

#include <stdexcept>

namespace ostp {

namespace {

// DFS in ascending neighbor order emits completed paths lexicographically;
// dist_to_target pruning drops only branches that cannot finish in budget,
// so the enumeration stays exact
template <class Visit>
void walk_paths(const SubNetwork& net, std::size_t cap, Visit&& visit) {
    if (net.empty()) return;
    std::size_t emitted = 0;
    std::vector<char> on_path(static_cast<std::size_t>(net.node_count()), 0);
    std::vector<int> path{net.source};
    on_path[static_cast<std::size_t>(net.source)] = 1;

    auto dfs = [&](auto&& self, int u, int hops) -> void {
        for (const auto& arc : net.neighbors(u)) {
            const int v = arc.to;
            if (v == net.target) {
                if (++emitted > cap) {
                    throw std::runtime_error("path enumeration exceeded cap of " +
                                             std::to_string(cap));
                }
                path.push_back(v);
                visit(path);
                path.pop_back();
                continue;
            }
            if (on_path[static_cast<std::size_t>(v)]) continue;
            if (hops + 1 + net.dist_to_target[static_cast<std::size_t>(v)] > net.max_hops) continue;
            on_path[static_cast<std::size_t>(v)] = 1;
            path.push_back(v);
            self(self, v, hops + 1);
            path.pop_back();
            on_path[static_cast<std::size_t>(v)] = 0;
        }
    };
    dfs(dfs, net.source, 0);
}

} // namespace

std::vector<std::vector<int>> enumerate_paths(const SubNetwork& net, std::size_t cap) {
    std::vector<std::vector<int>> out;
    walk_paths(net, cap, [&](const std::vector<int>& p) { out.push_back(p); });
    return out;
}

std::size_t count_paths(const SubNetwork& net, std::size_t cap) {
    std::size_t n = 0;
    walk_paths(net, cap, [&](const std::vector<int>&) { ++n; });
    return n;
}

OptResult optimal_path(const SubNetwork& net, const QoTWeights& w, const QoTConstraints& c,
                       std::size_t cap) {
    validate(w);
    validate(c);
    OptResult best;
    bool any_path = false;
    std::vector<int> best_nodes;
    walk_paths(net, cap, [&](const std::vector<int>& p) {
        any_path = true;
        const QoTVector q = aggregate(net, p);
        if (!is_feasible(q, c)) return;
        const double u = utility(q, w);
        // first-seen wins ties entirely: enumeration order is lexicographic
        const bool better = !best.feasible || u > best.utility ||
                            (u == best.utility && path_hops(p) < path_hops(best_nodes));
        if (better) {
            best_nodes = p;
            best.qot = q;
            best.utility = u;
            best.feasible = true;
        }
    });
    if (!any_path) {
        best.status = Status::NoPath;
    } else if (!best.feasible) {
        best.status = Status::InfeasibleInstance;
    } else {
        best.status = Status::OptimalFound;
        best.path.reserve(best_nodes.size());
        for (int v : best_nodes) best.path.push_back(net.id(v));
    }
    return best;
}

} // namespace ostp

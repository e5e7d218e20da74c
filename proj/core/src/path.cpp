#include "ostp/path.hpp"

#include <stdexcept>

namespace ostp {

QoTVector aggregate(const SubNetwork& net, std::span<const int> path) {
    if (path.size() < 2) throw std::invalid_argument("path needs at least two nodes");
    QoTVector q;
    double rho_sum = 0.0;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        const auto* arc = net.find_arc(path[i], path[i + 1]);
        if (!arc) {
            throw std::invalid_argument("missing edge " + net.id(path[i]) + "-" +
                                        net.id(path[i + 1]));
        }
        q.trust *= arc->trust;
        q.intimacy *= arc->intimacy;
        if (i > 0) rho_sum += net.rho(path[i]);
    }
    const std::size_t intermediates = path.size() - 2;
    q.rho = intermediates == 0 ? 1.0 : rho_sum / static_cast<double>(intermediates);
    return q;
}

bool is_valid_path(const SubNetwork& net, std::span<const int> path) {
    if (net.empty() || path.size() < 2) return false;
    if (path.front() != net.source || path.back() != net.target) return false;
    if (path_hops(path) > net.max_hops) return false;
    std::vector<char> seen(static_cast<std::size_t>(net.node_count()), 0);
    for (int v : path) {
        if (v < 0 || v >= net.node_count()) return false;
        if (seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = 1;
    }
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        if (!net.find_arc(path[i], path[i + 1])) return false;
    }
    return true;
}

std::vector<int> random_valid_path(const SubNetwork& net, Rng& rng, int max_attempts) {
    if (net.empty()) return {};
    std::vector<char> on_path(static_cast<std::size_t>(net.node_count()), 0);
    std::vector<int> path;
    std::vector<int> candidates;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        std::fill(on_path.begin(), on_path.end(), 0);
        path.assign(1, net.source);
        on_path[static_cast<std::size_t>(net.source)] = 1;
        while (true) {
            const int u = path.back();
            if (u == net.target) return path;
            const int budget = net.max_hops - path_hops(path) - 1;
            candidates.clear();
            for (const auto& arc : net.neighbors(u)) {
                if (on_path[static_cast<std::size_t>(arc.to)]) continue;
                if (net.dist_to_target[static_cast<std::size_t>(arc.to)] > budget) continue;
                candidates.push_back(arc.to);
            }
            if (candidates.empty()) break; // cornered; retry from scratch
            const int v = candidates[rng.index(candidates.size())];
            path.push_back(v);
            on_path[static_cast<std::size_t>(v)] = 1;
        }
    }
    return {};
}

} // namespace ostp

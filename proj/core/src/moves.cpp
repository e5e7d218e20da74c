#include "ostp/moves.hpp"

#include <algorithm>

#include "ostp/path.hpp"

namespace ostp {

MoveContext::MoveContext(const SubNetwork& network, int M, const QoTWeights& w)
    : net(&network), prune_m(M), weights(w) {
    validate(w);
    pruned.resize(static_cast<std::size_t>(network.node_count()));
    for (int v = 0; v < network.node_count(); ++v) {
        pruned[static_cast<std::size_t>(v)] = neighbors_pruned(network, v, M, w);
    }
}

namespace {

bool contains(const std::vector<int>& path, int v) {
    return std::find(path.begin(), path.end(), v) != path.end();
}

// replace one intermediate node, keeping both adjacent edges present
bool try_substitute(const MoveContext& ctx, const std::vector<int>& path, Rng& rng,
                    std::vector<int>& out) {
    const std::size_t n = path.size();
    if (n < 3) return false;
    const std::size_t pos = 1 + rng.index(n - 2);
    const int pred = path[pos - 1];
    const int succ = path[pos + 1];
    std::vector<int> candidates;
    for (int cand : ctx.pruned[static_cast<std::size_t>(pred)]) {
        if (cand == path[pos] || contains(path, cand)) continue;
        if (!ctx.net->find_arc(cand, succ)) continue;
        candidates.push_back(cand);
    }
    if (candidates.empty()) return false;
    out = path;
    out[pos] = candidates[rng.index(candidates.size())];
    return true;
}

// delete one intermediate node whose neighbors are directly connected
bool try_minus(const MoveContext& ctx, const std::vector<int>& path, Rng& rng,
               std::vector<int>& out) {
    const std::size_t n = path.size();
    if (n < 3) return false;
    const std::size_t pos = 1 + rng.index(n - 2);
    if (!ctx.net->find_arc(path[pos - 1], path[pos + 1])) return false;
    out = path;
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(pos));
    return true;
}

// insert a node into one gap, if the hop budget allows
bool try_plus(const MoveContext& ctx, const std::vector<int>& path, Rng& rng,
              std::vector<int>& out) {
    if (path_hops(path) >= ctx.net->max_hops) return false;
    const std::size_t gap = rng.index(path.size() - 1);
    const int left = path[gap];
    const int right = path[gap + 1];
    std::vector<int> candidates;
    for (int cand : ctx.pruned[static_cast<std::size_t>(left)]) {
        if (contains(path, cand)) continue;
        if (!ctx.net->find_arc(cand, right)) continue;
        candidates.push_back(cand);
    }
    if (candidates.empty()) return false;
    out = path;
    out.insert(out.begin() + static_cast<std::ptrdiff_t>(gap) + 1,
               candidates[rng.index(candidates.size())]);
    return true;
}

} // namespace

std::vector<int> propose_move(const MoveContext& ctx, const std::vector<int>& path, Rng& rng) {
    std::vector<int> out;
    const std::size_t first = rng.index(3);
    for (std::size_t k = 0; k < 3; ++k) {
        switch ((first + k) % 3) {
            case 0:
                if (try_substitute(ctx, path, rng, out)) return out;
                break;
            case 1:
                if (try_minus(ctx, path, rng, out)) return out;
                break;
            case 2:
                if (try_plus(ctx, path, rng, out)) return out;
                break;
        }
    }
    return path;
}

} // namespace ostp

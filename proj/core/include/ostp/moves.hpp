#ifndef OSTP_MOVES_HPP
#define OSTP_MOVES_HPP

#include <vector>

#include "ostp/graph.hpp"
#include "ostp/qot.hpp"
#include "ostp/rng.hpp"

namespace ostp {

// Precomputed per-node candidate lists for the move primitives. Candidates
// are the top-M neighbors by single-edge utility, so proposals stay O(M)
// regardless of degree.
struct MoveContext {
    MoveContext(const SubNetwork& net, int M, const QoTWeights& weights);

    const SubNetwork* net;
    int prune_m;
    QoTWeights weights;
    std::vector<std::vector<int>> pruned;
};

// One plus-minus proposal: substitute, minus, or plus with equal draw weight;
// a primitive without a legal realization falls through to the next in that
// fixed cyclic order. Returns the input path unchanged when none applies.
// The result is always a valid path of the subnetwork.
std::vector<int> propose_move(const MoveContext& ctx, const std::vector<int>& path, Rng& rng);

} // namespace ostp

#endif

#ifndef OSTP_HEURISTICS_HPP
#define OSTP_HEURISTICS_HPP

#include <vector>

#include "ostp/graph.hpp"
#include "ostp/qot.hpp"
#include "ostp/result.hpp"

namespace ostp {

// One label per node: the recorded backward local path to the target and the
// aggregates of that single path. rho_sum/rho_count cover the intermediate
// nodes of the node->target path (both endpoints excluded), so extending the
// path by one hop updates rho in O(1).
struct BackwardLabel {
    bool reached = false;
    double cost = 0.0; // delta (or g_lambda) of the recorded path
    QoTVector qot;
    double rho_sum = 0.0;
    int rho_count = 0;
    int hops = 0;
    int next_hop = -1; // toward the target; -1 at the target itself
};

struct BackwardTable {
    std::vector<BackwardLabel> labels;
    // recorded path from v to the target, inclusive of both
    std::vector<int> path_from(int v) const;
};

// Label-setting run from the target over reversed edges with delta as the
// cost. delta is recomputed from the full aggregate at each relaxation since
// it is not edge-additive, and a relaxation that would revisit a node already
// on the recorded path is skipped, so every recorded chain is a simple path.
BackwardTable backward_search(const SubNetwork& net, const QoTConstraints& c);

// Greedy growth from the source by max partial utility. Each selected
// candidate is vetted through its foreseen path (partial path + recorded
// backward path); a foreseen path that is infeasible, over the hop budget, or
// non-simple causes the offending link to be removed from a working copy and
// a restart from the source. At most |E| links can be removed, which bounds
// the restarts.
OptResult forward_search(const SubNetwork& net, const QoTWeights& w, const QoTConstraints& c,
                         const BackwardTable& table);

// backward_search, then the source-infeasibility gate (delta > 1), then
// forward_search
OptResult mfpb_hostp(const SubNetwork& net, const QoTWeights& w, const QoTConstraints& c);

// Two-pass baseline: backward pass minimizes g_lambda, gate rejects when the
// source label exceeds the feasibility signature g <= 3, forward pass is a
// single walk preferring feasible foreseen completions by utility and falling
// back to minimum foreseen g_lambda.
OptResult h_mcop(const SubNetwork& net, const QoTWeights& w, const QoTConstraints& c,
                 double lambda = 1.0);

} // namespace ostp

#endif

#ifndef OSTP_PATH_HPP
#define OSTP_PATH_HPP

#include <span>
#include <vector>

#include "ostp/graph.hpp"
#include "ostp/qot.hpp"
#include "ostp/rng.hpp"

namespace ostp {

// trust/intimacy multiply along edges; rho averages over intermediate nodes
// and is 1 for a direct edge. Throws when a consecutive pair is not an edge.
QoTVector aggregate(const SubNetwork& net, std::span<const int> path);

inline int path_hops(std::span<const int> path) {
    return static_cast<int>(path.size()) - 1;
}

// source->target, simple, every hop an edge, within the hop budget
bool is_valid_path(const SubNetwork& net, std::span<const int> path);

// Random walk from source guided by dist_to_target so the hop budget stays
// satisfiable; retries up to max_attempts when the walk corners itself.
// Empty result means no path was found within the attempt budget.
std::vector<int> random_valid_path(const SubNetwork& net, Rng& rng, int max_attempts = 1000);

} // namespace ostp

#endif

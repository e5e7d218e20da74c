#ifndef OSTP_ORACLE_HPP
#define OSTP_ORACLE_HPP

#include <cstddef>
#include <vector>

#include "ostp/graph.hpp"
#include "ostp/path.hpp"
#include "ostp/result.hpp"

namespace ostp {

inline constexpr std::size_t kDefaultOraclePathCap = 1'000'000;

// Every simple source->target path of <= max_hops edges, each exactly once,
// in lexicographic node-id order. Throws when the count exceeds cap; the
// oracle exists for desk-scale ground truth only.
std::vector<std::vector<int>> enumerate_paths(const SubNetwork& net,
                                              std::size_t cap = kDefaultOraclePathCap);

std::size_t count_paths(const SubNetwork& net, std::size_t cap = kDefaultOraclePathCap);

// Exact optimum: max utility over feasible paths, ties by fewer hops, then
// lexicographic node sequence. Streams the enumeration; same cap applies.
OptResult optimal_path(const SubNetwork& net, const QoTWeights& w, const QoTConstraints& c,
                       std::size_t cap = kDefaultOraclePathCap);

} // namespace ostp

#endif

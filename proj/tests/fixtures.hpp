#ifndef OSTP_TESTS_FIXTURES_HPP
#define OSTP_TESTS_FIXTURES_HPP

#include <string>

#include "ostp/graph.hpp"

namespace fixtures {

// Four nodes in a square: paths 1-2-4 and 1-3-4. The canonical slot order of
// the extracted subnetwork is {1-2, 1-3, 2-4, 3-4}.
inline ostp::SocialGraph square() {
    ostp::SocialGraph::Builder b;
    b.add_node("1", 1.0);
    b.add_node("2", 0.8);
    b.add_node("3", 0.3);
    b.add_node("4", 1.0);
    b.add_edge("1", "2", 0.9, 0.8);
    b.add_edge("1", "3", 0.4, 0.5);
    b.add_edge("2", "4", 0.9, 0.9);
    b.add_edge("3", "4", 0.5, 0.6);
    return b.build();
}

// Backward min-delta search dead-ends here: the recorded label at m follows
// the high-trust chain m-x1-x2-d (4 hops from s), which pushes the source
// label over delta 1, while the feasible path s-m-y-d exists. The rho values
// make the chain win the backward comparison at m even though it starves the
// trust budget at s.
inline ostp::SocialGraph backward_trap() {
    ostp::SocialGraph::Builder b;
    b.add_node("s", 1.0);
    b.add_node("m", 0.1);
    b.add_node("x1", 0.35);
    b.add_node("x2", 0.35);
    b.add_node("y", 0.9);
    b.add_node("d", 1.0);
    b.add_edge("s", "m", 0.9, 1.0);
    b.add_edge("m", "x1", 0.9, 1.0);
    b.add_edge("x1", "x2", 0.9, 1.0);
    b.add_edge("x2", "d", 0.9, 1.0);
    b.add_edge("m", "y", 0.3, 1.0);
    b.add_edge("y", "d", 0.2, 1.0);
    return b.build();
}

inline ostp::QoTConstraints default_constraints() { return {0.05, 0.001, 0.3}; }

// ~20 symmetric edges on 10 nodes, the small-instance shape used across the
// statistical solver tests
inline ostp::SocialGraph small_random(std::uint64_t seed) {
    ostp::GeneratorSpec spec;
    spec.node_count = 10;
    spec.edge_count = 20;
    spec.seed = seed;
    return ostp::generate_graph(spec);
}

inline ostp::SubNetwork small_instance(std::uint64_t seed) {
    const auto g = small_random(seed);
    return ostp::extract_subnetwork(g, g.id(0), g.id(g.node_count() - 1), 6);
}

} // namespace fixtures

#endif

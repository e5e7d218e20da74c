#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <string>
#include <vector>

#include "ostp/graph.hpp"
#include "ostp/oracle.hpp"
#include "ostp/qot.hpp"

#include "fixtures.hpp"
#include "reference.hpp"

using namespace ostp;

namespace {

std::vector<std::string> to_ids(const SubNetwork& net, const std::vector<int>& path) {
    std::vector<std::string> out;
    for (int v : path) out.push_back(net.id(v));
    return out;
}

} // namespace

TEST_CASE("enumeration lists both square paths in lexicographic order") {
    const auto net = extract_subnetwork(fixtures::square(), "1", "4", 2);
    const auto paths = enumerate_paths(net);
    REQUIRE(paths.size() == 2);
    CHECK(to_ids(net, paths[0]) == std::vector<std::string>{"1", "2", "4"});
    CHECK(to_ids(net, paths[1]) == std::vector<std::string>{"1", "3", "4"});
    CHECK(count_paths(net) == 2);
}

TEST_CASE("enumeration on a complete 4-node graph") {
    SocialGraph::Builder b;
    for (const char* id : {"a", "b", "c", "d"}) b.add_node(id, 0.5);
    for (const char* u : {"a", "b", "c", "d"}) {
        for (const char* v : {"a", "b", "c", "d"}) {
            if (std::string(u) < std::string(v)) b.add_edge(u, v, 0.9, 0.9);
        }
    }
    const auto net = extract_subnetwork(b.build(), "a", "d", 3);
    // a-d, a-b-d, a-c-d, a-b-c-d, a-c-b-d
    CHECK(count_paths(net) == 5);
}

TEST_CASE("enumeration respects the hop bound exactly") {
    // chain a-b-c-d plus shortcut a-d
    SocialGraph::Builder b;
    for (const char* id : {"a", "b", "c", "d"}) b.add_node(id, 0.5);
    b.add_edge("a", "b", 0.9, 0.9);
    b.add_edge("b", "c", 0.9, 0.9);
    b.add_edge("c", "d", 0.9, 0.9);
    b.add_edge("a", "d", 0.9, 0.9);
    const auto g = b.build();

    CHECK(count_paths(extract_subnetwork(g, "a", "d", 1)) == 1);
    CHECK(count_paths(extract_subnetwork(g, "a", "d", 2)) == 1);
    CHECK(count_paths(extract_subnetwork(g, "a", "d", 3)) == 2);
}

TEST_CASE("enumeration equals the reference on random instances") {
    for (std::uint64_t seed : {3u, 14u, 159u, 265u, 358u, 979u}) {
        const auto net = fixtures::small_instance(seed);
        if (net.empty()) continue;
        const auto got = enumerate_paths(net);
        const auto want = ref::all_paths(net);
        REQUIRE(got.size() == want.size());
        for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == want[i]);
    }
}

TEST_CASE("the cap aborts oversized enumerations") {
    const auto net = fixtures::small_instance(7);
    REQUIRE_FALSE(net.empty());
    REQUIRE(count_paths(net) > 1);
    CHECK_THROWS_AS(enumerate_paths(net, 1), std::runtime_error);
    CHECK_THROWS_AS(optimal_path(net, QoTWeights{}, QoTConstraints{}, 1), std::runtime_error);
}

TEST_CASE("optimal path on the square picks the higher-utility branch") {
    const auto net = extract_subnetwork(fixtures::square(), "1", "4", 2);
    const QoTWeights w{0.3, 0.3, 0.4};
    const QoTConstraints c{0.05, 0.001, 0.3};
    const auto res = optimal_path(net, w, c);

    REQUIRE(res.status == Status::OptimalFound);
    REQUIRE(res.feasible);
    // 1-2-4: T 0.81, r 0.72, rho 0.8, utility 0.779
    // 1-3-4: T 0.20, r 0.30, rho 0.3, utility 0.270
    CHECK(res.path == std::vector<std::string>{"1", "2", "4"});
    CHECK(res.utility == doctest::Approx(0.779).epsilon(1e-12));
    CHECK(res.qot.trust == doctest::Approx(0.81).epsilon(1e-12));
    CHECK(res.qot.intimacy == doctest::Approx(0.72).epsilon(1e-12));
    CHECK(res.qot.rho == doctest::Approx(0.8).epsilon(1e-12));
}

TEST_CASE("optimal path statuses") {
    // empty extraction: no path at all
    const auto none = extract_subnetwork(fixtures::square(), "1", "4", 1);
    const auto res_none = optimal_path(none, QoTWeights{}, QoTConstraints{});
    CHECK(res_none.status == Status::NoPath);
    CHECK_FALSE(res_none.feasible);
    CHECK(res_none.path.empty());

    // paths exist but constraints exclude all of them
    const auto net = extract_subnetwork(fixtures::square(), "1", "4", 2);
    const QoTConstraints strict{0.9, 0.9, 0.9};
    const auto res_inf = optimal_path(net, QoTWeights{}, strict);
    CHECK(res_inf.status == Status::InfeasibleInstance);
    CHECK_FALSE(res_inf.feasible);
    CHECK(res_inf.path.empty());
    CHECK(res_inf.utility == 0.0);
}

TEST_CASE("ties break on fewer hops, then lexicographic order") {
    // two feasible routes with identical utility but different lengths
    SocialGraph::Builder b;
    b.add_node("s", 1.0);
    b.add_node("a", 1.0);
    b.add_node("b", 1.0);
    b.add_node("t", 1.0);
    b.add_edge("s", "t", 0.5, 0.5); // direct, utility = 0.5*wT + 0.5*wr + 1*wrho
    b.add_edge("s", "a", 1.0, 1.0);
    b.add_edge("a", "t", 0.5, 0.5); // same products, rho 1.0 as well
    b.add_edge("s", "b", 1.0, 1.0);
    b.add_edge("b", "t", 0.5, 0.5); // lexicographic loser against the a route
    const auto net = extract_subnetwork(b.build(), "s", "t", 3);
    const QoTWeights w{0.5, 0.5, 0.0};
    const QoTConstraints c{};

    const auto res = optimal_path(net, w, c);
    REQUIRE(res.status == Status::OptimalFound);
    CHECK(res.path == std::vector<std::string>{"s", "t"}); // fewer hops wins

    // drop the direct edge: a-route and b-route tie, lexicographic wins
    SocialGraph::Builder b2;
    b2.add_node("s", 1.0);
    b2.add_node("a", 1.0);
    b2.add_node("b", 1.0);
    b2.add_node("t", 1.0);
    b2.add_edge("s", "a", 1.0, 1.0);
    b2.add_edge("a", "t", 0.5, 0.5);
    b2.add_edge("s", "b", 1.0, 1.0);
    b2.add_edge("b", "t", 0.5, 0.5);
    const auto net2 = extract_subnetwork(b2.build(), "s", "t", 3);
    const auto res2 = optimal_path(net2, w, c);
    REQUIRE(res2.status == Status::OptimalFound);
    CHECK(res2.path == std::vector<std::string>{"s", "a", "t"});
}

TEST_CASE("optimum equals the reference argmax on seeded instances") {
    const QoTWeights w{0.3, 0.3, 0.4};
    const QoTConstraints c = fixtures::default_constraints();
    int nonempty = 0;
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        const auto net = fixtures::small_instance(seed);
        if (net.empty()) continue;
        ++nonempty;
        const auto res = optimal_path(net, w, c);
        const auto want = ref::best_path(net, w, c);
        if (want.found) {
            REQUIRE(res.status == Status::OptimalFound);
            CHECK(res.utility == doctest::Approx(want.utility).epsilon(1e-15));
            CHECK(res.path == to_ids(net, want.path));
        } else {
            CHECK(res.status ==
                  (want.any_path ? Status::InfeasibleInstance : Status::NoPath));
        }
    }
    CHECK(nonempty >= 40); // the generator should connect nearly all instances
}

TEST_CASE("oracle results are reproducible") {
    const auto net = fixtures::small_instance(31);
    REQUIRE_FALSE(net.empty());
    const QoTWeights w{0.25, 0.25, 0.5};
    const QoTConstraints c = fixtures::default_constraints();
    const auto r1 = optimal_path(net, w, c);
    const auto r2 = optimal_path(net, w, c);
    CHECK(r1.path == r2.path);
    CHECK(r1.utility == r2.utility);
    CHECK(r1.status == r2.status);
}

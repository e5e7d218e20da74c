#ifndef OSTP_RESULT_HPP
#define OSTP_RESULT_HPP

#include <string>
#include <vector>

#include "ostp/qot.hpp"

namespace ostp {

enum class Status {
    OptimalFound,       // feasible path returned
    InfeasibleInstance, // paths exist but none satisfies the constraints
    NoPath,             // no simple source->target path within the hop budget
};

inline std::string to_string(Status s) {
    switch (s) {
        case Status::OptimalFound: return "optimal-found";
        case Status::InfeasibleInstance: return "infeasible-instance";
        case Status::NoPath: return "no-path";
    }
    return "unknown";
}

// path and utility are meaningful only when status == OptimalFound
struct OptResult {
    std::vector<std::string> path; // node ids
    QoTVector qot;
    double utility = 0.0;
    bool feasible = false;
    Status status = Status::NoPath;
};

// uniform solver envelope consumed by the benchmark harness
struct SolveOutcome {
    OptResult result;
    long long steps_executed = 0;
    long long moves_attempted = 0;
    long long moves_accepted = 0;
    int restarts_used = 0;
    double wall_time = 0.0; // seconds, never part of determinism contracts
    std::string solver_id;
};

} // namespace ostp

#endif

#ifndef OSTP_SA_HPP
#define OSTP_SA_HPP

#include <cstdint>

#include "ostp/energy.hpp"
#include "ostp/graph.hpp"
#include "ostp/qot.hpp"
#include "ostp/result.hpp"
#include "ostp/rng.hpp"

namespace ostp {

struct SaParams {
    double t0 = 1.0;
    double cooling = 0.98; // multiplicative, applied once per step
    long long max_steps = 2000;
    int moves_per_step = 50;
    int M = 20;
    double penalty_beta = 5.0;
    int init_attempts = 1000;
    std::uint64_t seed = 0;
};

// Metropolis: certain when e_new <= e_cur, else probability exp((e_cur-e_new)/t)
bool sa_accept(double e_cur, double e_new, double t, Rng& rng);

// Single chain from a random valid starting path; returns the best feasible
// path ever occupied. Same potential as the quantum annealer.
SolveOutcome sa_solve(const SubNetwork& net, const QoTWeights& w, const QoTConstraints& c,
                      const SaParams& params);

} // namespace ostp

#endif

#ifndef OSTP_ENERGY_HPP
#define OSTP_ENERGY_HPP

#include "ostp/qot.hpp"

namespace ostp {

// relative shortfall per violated constraint; zero exactly when feasible
inline double violation_penalty(const QoTVector& q, const QoTConstraints& c) {
    auto term = [](double v, double bound) {
        if (v >= bound) return 0.0;
        return (bound - v) / (bound == 0.0 ? 1.0 : bound);
    };
    return term(q.trust, c.cT) + term(q.intimacy, c.cr) + term(q.rho, c.crho);
}

// Shared potential of both annealers: minimizing it maximizes utility, and
// infeasible paths stay reachable at a beta-scaled cost instead of being
// forbidden outright.
inline double path_energy(const QoTVector& q, const QoTWeights& w, const QoTConstraints& c,
                          double beta) {
    return (1.0 - utility(q, w)) + beta * violation_penalty(q, c);
}

} // namespace ostp

#endif

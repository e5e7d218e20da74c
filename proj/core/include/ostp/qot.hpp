#ifndef OSTP_QOT_HPP
#define OSTP_QOT_HPP

#include <stdexcept>

namespace ostp {

// Aggregate quality-of-trust of a path. trust and intimacy are products over
// edges; rho is the arithmetic mean over intermediate nodes and defaults to 1
// when the path has none (direct source-target edge).
struct QoTVector {
    double trust = 1.0;
    double intimacy = 1.0;
    double rho = 1.0;
};

struct QoTWeights {
    double wT = 1.0 / 3.0;
    double wr = 1.0 / 3.0;
    double wrho = 1.0 / 3.0;
};

struct QoTConstraints {
    double cT = 0.0;
    double cr = 0.0;
    double crho = 0.0;
};

void validate(const QoTWeights& w);     // each in [0,1], sum == 1 within 1e-12
void validate(const QoTConstraints& c); // each in [0,1)

// F = wT*T + wr*r + wrho*rho
double utility(const QoTVector& q, const QoTWeights& w);

// delta = max_k (1 - q_k) / (1 - c_k); feasible iff delta <= 1.
// Larger metric values mean smaller delta, so delta orders partial paths by
// how close they are to violating the tightest constraint.
double delta(const QoTVector& q, const QoTConstraints& c);

// g_lambda = sum_k ((1 - q_k) / (1 - c_k))^lambda; g_1 <= 3 whenever
// delta <= 1, which makes it a softer feasibility surrogate.
double g_lambda(const QoTVector& q, const QoTConstraints& c, double lambda);

inline bool is_feasible(const QoTVector& q, const QoTConstraints& c) {
    return q.trust >= c.cT && q.intimacy >= c.cr && q.rho >= c.crho;
}

} // namespace ostp

#endif

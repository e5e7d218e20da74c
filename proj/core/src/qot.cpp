#include "ostp/qot.hpp"

#include <cmath>
#include <string>

namespace ostp {

void validate(const QoTWeights& w) {
    auto in_unit = [](double x) { return x >= 0.0 && x <= 1.0; };
    if (!in_unit(w.wT) || !in_unit(w.wr) || !in_unit(w.wrho)) {
        throw std::invalid_argument("weights must lie in [0,1]");
    }
    const double sum = w.wT + w.wr + w.wrho;
    if (std::abs(sum - 1.0) > 1e-12) {
        throw std::invalid_argument("weights must sum to 1, got " + std::to_string(sum));
    }
}

void validate(const QoTConstraints& c) {
    auto ok = [](double x) { return x >= 0.0 && x < 1.0; };
    if (!ok(c.cT) || !ok(c.cr) || !ok(c.crho)) {
        throw std::invalid_argument("constraints must lie in [0,1)");
    }
}

double utility(const QoTVector& q, const QoTWeights& w) {
    return w.wT * q.trust + w.wr * q.intimacy + w.wrho * q.rho;
}

double delta(const QoTVector& q, const QoTConstraints& c) {
    const double dT = (1.0 - q.trust) / (1.0 - c.cT);
    const double dr = (1.0 - q.intimacy) / (1.0 - c.cr);
    const double drho = (1.0 - q.rho) / (1.0 - c.crho);
    return std::max(dT, std::max(dr, drho));
}

double g_lambda(const QoTVector& q, const QoTConstraints& c, double lambda) {
    const double dT = (1.0 - q.trust) / (1.0 - c.cT);
    const double dr = (1.0 - q.intimacy) / (1.0 - c.cr);
    const double drho = (1.0 - q.rho) / (1.0 - c.crho);
    return std::pow(dT, lambda) + std::pow(dr, lambda) + std::pow(drho, lambda);
}

} // namespace ostp

#include "ostp/sa.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "ostp/moves.hpp"
#include "ostp/path.hpp"

namespace ostp {

bool sa_accept(double e_cur, double e_new, double t, Rng& rng) {
    if (!(t > 0.0)) throw std::invalid_argument("t must be > 0");
    if (e_new <= e_cur) return true;
    return rng.uniform() < std::exp((e_cur - e_new) / t);
}

SolveOutcome sa_solve(const SubNetwork& net, const QoTWeights& w, const QoTConstraints& c,
                      const SaParams& params) {
    validate(w);
    validate(c);
    if (!(params.t0 > 0.0)) throw std::invalid_argument("t0 must be > 0");
    if (!(params.cooling > 0.0 && params.cooling < 1.0)) {
        throw std::invalid_argument("cooling must be in (0,1)");
    }
    if (params.max_steps < 1) throw std::invalid_argument("max_steps must be >= 1");
    if (params.moves_per_step < 1) throw std::invalid_argument("moves_per_step must be >= 1");
    if (params.M < 1) throw std::invalid_argument("M must be >= 1");
    if (!(params.penalty_beta >= 0.0)) throw std::invalid_argument("penalty_beta must be >= 0");

    SolveOutcome out;
    out.solver_id = "sa";
    const auto started = std::chrono::steady_clock::now();
    const auto finish = [&]() {
        out.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    };
    if (net.empty()) {
        out.result.status = Status::NoPath;
        finish();
        return out;
    }

    Rng rng(params.seed);
    std::vector<int> current = random_valid_path(net, rng, params.init_attempts);
    if (current.empty()) {
        out.result.status = Status::NoPath;
        finish();
        return out;
    }
    QoTVector cur_qot = aggregate(net, current);
    double cur_energy = path_energy(cur_qot, w, c, params.penalty_beta);

    bool have_best = false;
    std::vector<int> best_path;
    QoTVector best_qot;
    double best_utility = 0.0;
    int best_hops = 0;
    const auto consider = [&](const std::vector<int>& path, const QoTVector& q) {
        if (!is_feasible(q, c)) return;
        const double u = utility(q, w);
        const int h = static_cast<int>(path.size()) - 1;
        if (!have_best || u > best_utility || (u == best_utility && h < best_hops)) {
            have_best = true;
            best_path = path;
            best_qot = q;
            best_utility = u;
            best_hops = h;
        }
    };
    consider(current, cur_qot);

    MoveContext ctx(net, params.M, w);
    double t = params.t0;
    for (long long step = 0; step < params.max_steps; ++step) {
        for (int k = 0; k < params.moves_per_step; ++k) {
            const std::vector<int> prop = propose_move(ctx, current, rng);
            ++out.moves_attempted;
            if (prop == current) continue;
            const QoTVector q = aggregate(net, prop);
            const double e = path_energy(q, w, c, params.penalty_beta);
            if (sa_accept(cur_energy, e, t, rng)) {
                current = prop;
                cur_qot = q;
                cur_energy = e;
                ++out.moves_accepted;
                consider(current, cur_qot);
            }
        }
        t *= params.cooling;
    }

    out.steps_executed = params.max_steps;
    if (have_best) {
        out.result.status = Status::OptimalFound;
        out.result.feasible = true;
        out.result.qot = best_qot;
        out.result.utility = best_utility;
        out.result.path.reserve(best_path.size());
        for (int v : best_path) out.result.path.push_back(net.id(v));
    } else {
        out.result.status = Status::InfeasibleInstance;
    }
    finish();
    return out;
}

} // namespace ostp

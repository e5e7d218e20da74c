#include "ostp/qa.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "ostp/moves.hpp"
#include "ostp/path.hpp"

namespace ostp {

double gamma_schedule(double t, double eta, double gamma0, double xi) {
    if (!(eta > 0.0)) throw std::invalid_argument("eta must be > 0");
    if (!(gamma0 > 0.0)) throw std::invalid_argument("gamma0 must be > 0");
    if (!(xi > 0.0)) throw std::invalid_argument("xi must be > 0");
    if (t <= 0.0) return gamma0;
    if (t >= eta) return 0.0;
    const double u = t / eta;
    return (1.0 - u) * (gamma0 * xi) / (u + xi);
}

double coupling_jt(double gamma, int P, double T, double jt_cap) {
    if (P < 2) throw std::invalid_argument("P must be >= 2");
    if (!(T > 0.0)) throw std::invalid_argument("T must be > 0");
    if (!(jt_cap > 0.0)) throw std::invalid_argument("jt_cap must be > 0");
    const double x = gamma / (static_cast<double>(P) * T);
    // tanh x = -em / (2 + em) with em = expm1(-2x) in (-1, 0]
    const double em = std::expm1(-2.0 * x);
    if (em == 0.0) return jt_cap; // gamma == 0: ln tanh diverges
    const double log_tanh = std::log(-em) - std::log(2.0 + em);
    const double jt = -0.5 * T * log_tanh;
    if (jt >= jt_cap) return jt_cap;
    // tanh saturates to 1 for large gamma; stay strictly positive
    return jt > 0.0 ? jt : std::numeric_limits<double>::min();
}

std::vector<int> path_slots(const SubNetwork& net, std::span<const int> path) {
    std::vector<int> slots;
    slots.reserve(path.size());
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        const auto* arc = net.find_arc(path[i], path[i + 1]);
        if (!arc) {
            throw std::invalid_argument("missing edge " + net.id(path[i]) + "-" +
                                        net.id(path[i + 1]));
        }
        slots.push_back(arc->slot);
    }
    std::sort(slots.begin(), slots.end());
    return slots;
}

std::vector<signed char> encode_spins(const SubNetwork& net, std::span<const int> path) {
    std::vector<signed char> spins(static_cast<std::size_t>(net.slot_count()), -1);
    for (int s : path_slots(net, path)) spins[static_cast<std::size_t>(s)] = 1;
    return spins;
}

std::optional<std::vector<int>> decode_spins(const SubNetwork& net,
                                             std::span<const signed char> spins) {
    if (spins.size() != static_cast<std::size_t>(net.slot_count())) return std::nullopt;
    std::vector<std::vector<int>> incident(static_cast<std::size_t>(net.node_count()));
    std::size_t plus_count = 0;
    for (std::size_t s = 0; s < spins.size(); ++s) {
        if (spins[s] == 1) {
            ++plus_count;
            const auto& slot = net.slots[s];
            incident[static_cast<std::size_t>(slot.u)].push_back(static_cast<int>(s));
            incident[static_cast<std::size_t>(slot.v)].push_back(static_cast<int>(s));
        } else if (spins[s] != -1) {
            return std::nullopt;
        }
    }
    for (int v = 0; v < net.node_count(); ++v) {
        const std::size_t deg = incident[static_cast<std::size_t>(v)].size();
        if (v == net.source || v == net.target) {
            if (deg != 1) return std::nullopt;
        } else if (deg != 0 && deg != 2) {
            return std::nullopt;
        }
    }

    std::vector<int> path{net.source};
    int prev_slot = -1;
    std::size_t consumed = 0;
    while (path.back() != net.target) {
        if (consumed > plus_count) return std::nullopt;
        const int u = path.back();
        int next_slot = -1;
        for (int s : incident[static_cast<std::size_t>(u)]) {
            if (s != prev_slot) {
                next_slot = s;
                break;
            }
        }
        if (next_slot < 0) return std::nullopt;
        const auto& slot = net.slots[static_cast<std::size_t>(next_slot)];
        path.push_back(slot.u == u ? slot.v : slot.u);
        prev_slot = next_slot;
        ++consumed;
    }
    if (consumed != plus_count) return std::nullopt; // stray +1 component
    return path;
}

ReplicaSystem::ReplicaSystem(const SubNetwork& net, const QoTWeights& w, const QoTConstraints& c,
                             double penalty_beta, std::vector<std::vector<int>> initial_paths)
    : net_(&net), w_(w), c_(c), beta_(penalty_beta), P_(static_cast<int>(initial_paths.size())) {
    validate(w);
    validate(c);
    if (P_ < 2) throw std::invalid_argument("need at least 2 replicas");
    paths_ = std::move(initial_paths);
    slots_.resize(static_cast<std::size_t>(P_));
    qot_.resize(static_cast<std::size_t>(P_));
    pot_.resize(static_cast<std::size_t>(P_));
    spins_.assign(static_cast<std::size_t>(net.slot_count()) * static_cast<std::size_t>(P_), -1);
    for (int r = 0; r < P_; ++r) {
        const auto& p = paths_[static_cast<std::size_t>(r)];
        if (!is_valid_path(net, p)) {
            throw std::invalid_argument("replica " + std::to_string(r) + " path is invalid");
        }
        slots_[static_cast<std::size_t>(r)] = path_slots(net, p);
        qot_[static_cast<std::size_t>(r)] = aggregate(net, p);
        pot_[static_cast<std::size_t>(r)] = path_energy(qot_[static_cast<std::size_t>(r)], w_, c_, beta_);
        for (int s : slots_[static_cast<std::size_t>(r)]) {
            spins_[static_cast<std::size_t>(s) * static_cast<std::size_t>(P_) +
                   static_cast<std::size_t>(r)] = 1;
        }
    }
}

void ReplicaSystem::set_path(int r, const std::vector<int>& path) {
    auto& old_slots = slots_[static_cast<std::size_t>(r)];
    for (int s : old_slots) {
        spins_[static_cast<std::size_t>(s) * static_cast<std::size_t>(P_) +
               static_cast<std::size_t>(r)] = -1;
    }
    old_slots = path_slots(*net_, path);
    for (int s : old_slots) {
        spins_[static_cast<std::size_t>(s) * static_cast<std::size_t>(P_) +
               static_cast<std::size_t>(r)] = 1;
    }
    paths_[static_cast<std::size_t>(r)] = path;
    qot_[static_cast<std::size_t>(r)] = aggregate(*net_, path);
    pot_[static_cast<std::size_t>(r)] = path_energy(qot_[static_cast<std::size_t>(r)], w_, c_, beta_);
}

double effective_hamiltonian(const ReplicaSystem& sys, double jt) {
    const int P = sys.replica_count();
    double pot_sum = 0.0;
    for (int r = 0; r < P; ++r) pot_sum += sys.potential(r);
    long long coupling = 0;
    const int K = sys.net().slot_count();
    for (int s = 0; s < K; ++s) {
        for (int r = 0; r + 1 < P; ++r) {
            coupling += static_cast<long long>(sys.spin(s, r)) * sys.spin(s, r + 1);
        }
        coupling += static_cast<long long>(sys.spin(s, 0)) * sys.spin(s, P - 1);
    }
    return pot_sum / static_cast<double>(P) - jt * static_cast<double>(coupling);
}

double local_move_delta(const ReplicaSystem& sys, int replica, const std::vector<int>& new_path,
                        double jt) {
    const QoTVector q = aggregate(*sys.net_, new_path);
    const double new_pot = path_energy(q, sys.w_, sys.c_, sys.beta_);
    const double d_pot =
        (new_pot - sys.pot_[static_cast<std::size_t>(replica)]) / static_cast<double>(sys.P_);

    const std::vector<int> new_slots = path_slots(*sys.net_, new_path);
    const std::vector<int>& old_slots = sys.slots_[static_cast<std::size_t>(replica)];
    const int P = sys.P_;
    const int left = (replica + P - 1) % P;
    const int right = (replica + 1) % P;

    long long d_coupling = 0;
    auto flip = [&](int slot, int dy) {
        // dy = new spin minus old spin; P == 2 counts the single neighbor
        // twice, matching the chain-plus-ring pair sum
        const long long nb = static_cast<long long>(sys.spin(slot, left)) + sys.spin(slot, right);
        d_coupling += dy * nb;
    };
    std::size_t i = 0, j = 0;
    while (i < old_slots.size() || j < new_slots.size()) {
        if (j == new_slots.size() || (i < old_slots.size() && old_slots[i] < new_slots[j])) {
            flip(old_slots[i], -2);
            ++i;
        } else if (i == old_slots.size() || new_slots[j] < old_slots[i]) {
            flip(new_slots[j], 2);
            ++j;
        } else {
            ++i;
            ++j;
        }
    }
    return d_pot - jt * static_cast<double>(d_coupling);
}

bool qa_accept(double delta_h, double T, Rng& rng) {
    if (!(T > 0.0)) throw std::invalid_argument("T must be > 0");
    if (delta_h <= 0.0) return true;
    return rng.uniform() < std::exp(-delta_h / T);
}

SolveOutcome qa_solve(const SubNetwork& net, const QoTWeights& w, const QoTConstraints& c,
                      const QaParams& params) {
    validate(w);
    validate(c);
    if (params.P < 2) throw std::invalid_argument("P must be >= 2");
    if (!(params.T > 0.0)) throw std::invalid_argument("T must be > 0");
    if (!(params.gamma0 > 0.0)) throw std::invalid_argument("gamma0 must be > 0");
    if (!(params.xi > 0.0)) throw std::invalid_argument("xi must be > 0");
    if (params.max_steps < 1) throw std::invalid_argument("max_steps must be >= 1");
    if (params.M < 1) throw std::invalid_argument("M must be >= 1");
    if (params.moves_multiplier < 1) throw std::invalid_argument("moves_multiplier must be >= 1");
    if (!(params.jt_cap > 0.0)) throw std::invalid_argument("jt_cap must be > 0");
    if (!(params.penalty_beta >= 0.0)) throw std::invalid_argument("penalty_beta must be >= 0");
    if (params.temp_schedule == TempSchedule::Linear && !(params.t0 > 0.0)) {
        throw std::invalid_argument("t0 must be > 0");
    }
    if (params.warmup_sweeps < 0) throw std::invalid_argument("warmup_sweeps must be >= 0");

    SolveOutcome out;
    out.solver_id = "qa";
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
    std::vector<std::vector<int>> init(static_cast<std::size_t>(params.P));
    for (auto& p : init) {
        p = random_valid_path(net, rng, params.init_attempts);
        if (p.empty()) {
            out.result.status = Status::NoPath;
            finish();
            return out;
        }
    }
    ReplicaSystem sys(net, w, c, params.penalty_beta, std::move(init));

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
    for (int r = 0; r < params.P; ++r) consider(sys.path(r), sys.qot(r));

    MoveContext ctx(net, params.M, w);

    // pure-potential equilibration at temperature P*T
    const double warm_t = static_cast<double>(params.P) * params.T;
    for (int sweep = 0; sweep < params.warmup_sweeps; ++sweep) {
        for (int r = 0; r < params.P; ++r) {
            const std::vector<int> prop = propose_move(ctx, sys.path(r), rng);
            ++out.moves_attempted;
            if (prop == sys.path(r)) continue;
            const QoTVector q = aggregate(net, prop);
            const double d = path_energy(q, w, c, params.penalty_beta) - sys.potential(r);
            if (qa_accept(d, warm_t, rng)) {
                sys.set_path(r, prop);
                ++out.moves_accepted;
                consider(sys.path(r), sys.qot(r));
            }
        }
    }

    const long long budget = static_cast<long long>(params.moves_multiplier) * net.node_count() *
                             (params.per_replica_budget ? params.P : 1);
    std::vector<int> order(static_cast<std::size_t>(params.P));
    std::iota(order.begin(), order.end(), 0);

    for (long long step = 0; step < params.max_steps; ++step) {
        double t_cur = params.T;
        if (params.temp_schedule == TempSchedule::Linear) {
            const double frac = params.max_steps > 1
                                    ? static_cast<double>(step) / static_cast<double>(params.max_steps - 1)
                                    : 1.0;
            t_cur = params.t0 + (params.T - params.t0) * frac;
        }
        const double gamma = gamma_schedule(static_cast<double>(step),
                                            static_cast<double>(params.max_steps), params.gamma0,
                                            params.xi);
        const double jt = coupling_jt(gamma, params.P, t_cur, params.jt_cap);
        rng.shuffle(order);
        for (long long k = 0; k < budget; ++k) {
            const int r = order[static_cast<std::size_t>(k % params.P)];
            const std::vector<int> prop = propose_move(ctx, sys.path(r), rng);
            ++out.moves_attempted;
            if (prop == sys.path(r)) continue;
            const double dh = local_move_delta(sys, r, prop, jt);
            if (qa_accept(dh, t_cur, rng)) {
                sys.set_path(r, prop);
                ++out.moves_accepted;
                consider(sys.path(r), sys.qot(r));
            }
        }
        if (params.observer) params.observer->on_step(step, sys);
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

#ifndef OSTP_QA_HPP
#define OSTP_QA_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ostp/energy.hpp"
#include "ostp/graph.hpp"
#include "ostp/qot.hpp"
#include "ostp/result.hpp"
#include "ostp/rng.hpp"

namespace ostp {

enum class TempSchedule { Fixed, Linear };

class ReplicaSystem;

// Called once per annealing step after the step's proposal budget is spent.
// Observation only; it must not mutate the system and draws no randomness.
struct QaObserver {
    virtual ~QaObserver() = default;
    virtual void on_step(long long step, const ReplicaSystem& sys) = 0;
};

struct QaParams {
    int P = 30;               // replicas
    double T = 10.0 / 3.0;    // simulation temperature (P*T = 100 by default)
    double gamma0 = 300.0;    // initial transverse field
    double xi = 0.1;          // schedule shape; zeta is derived as gamma0*xi
    long long max_steps = 500;
    int M = 20;               // neighborhood prune size
    int moves_multiplier = 20;       // per-step proposals = moves_multiplier * N
    bool per_replica_budget = false; // multiply the budget by P
    double penalty_beta = 5.0;
    double jt_cap = 1e6;
    TempSchedule temp_schedule = TempSchedule::Fixed;
    double t0 = 10.0;      // linear schedule start; anneals down to T
    int warmup_sweeps = 50; // pure-potential equilibration at temperature P*T
    int init_attempts = 1000;
    std::uint64_t seed = 0;
    QaObserver* observer = nullptr;
};

// (1 - t/eta) * zeta / (t/eta + xi) with zeta = gamma0*xi; endpoints are
// returned exactly so Gamma(0) == gamma0 and Gamma(eta) == 0 without rounding
double gamma_schedule(double t, double eta, double gamma0, double xi);

// -(T/2) * ln tanh(gamma / (P*T)), clamped into (0, jt_cap]. Evaluated via
// expm1 so the value stays accurate and strictly monotone as gamma shrinks.
double coupling_jt(double gamma, int P, double T, double jt_cap);

// +1 on path edges, -1 on every other slot of the subnetwork edge index
std::vector<signed char> encode_spins(const SubNetwork& net, std::span<const int> path);

// Unique simple source->target path described by the +1 slots, or nullopt
// when the configuration is not a path (wrong degrees, disconnected +1 edges,
// wrong endpoints). The hop budget is a solver concern, not re-checked here.
std::optional<std::vector<int>> decode_spins(const SubNetwork& net,
                                             std::span<const signed char> spins);

// sorted slot ids of a path's edges
std::vector<int> path_slots(const SubNetwork& net, std::span<const int> path);

// P path replicas with cached aggregates, potentials, and spin vectors
// (slot-major). Replica rho couples to rho-1 and rho+1 modulo P.
class ReplicaSystem {
  public:
    ReplicaSystem(const SubNetwork& net, const QoTWeights& w, const QoTConstraints& c,
                  double penalty_beta, std::vector<std::vector<int>> initial_paths);

    const SubNetwork& net() const { return *net_; }
    int replica_count() const { return P_; }
    const std::vector<int>& path(int r) const { return paths_[static_cast<std::size_t>(r)]; }
    const std::vector<int>& slots(int r) const { return slots_[static_cast<std::size_t>(r)]; }
    const QoTVector& qot(int r) const { return qot_[static_cast<std::size_t>(r)]; }
    double potential(int r) const { return pot_[static_cast<std::size_t>(r)]; }
    signed char spin(int slot, int r) const {
        return spins_[static_cast<std::size_t>(slot) * static_cast<std::size_t>(P_) +
                      static_cast<std::size_t>(r)];
    }

    void set_path(int r, const std::vector<int>& path);

  private:
    friend double local_move_delta(const ReplicaSystem& sys, int replica,
                                   const std::vector<int>& new_path, double jt);
    const SubNetwork* net_;
    QoTWeights w_;
    QoTConstraints c_;
    double beta_;
    int P_;
    std::vector<std::vector<int>> paths_;
    std::vector<std::vector<int>> slots_; // sorted, per replica
    std::vector<QoTVector> qot_;
    std::vector<double> pot_;
    std::vector<signed char> spins_;
};

// (1/P) * sum of replica potentials - jt * (chain pair sum + ring closure
// pair), full recomputation over every slot; the reference for the
// incremental delta
double effective_hamiltonian(const ReplicaSystem& sys, double jt);

// Hamiltonian change if replica `replica` switched to new_path, evaluated
// only over the slots whose spin flips
double local_move_delta(const ReplicaSystem& sys, int replica, const std::vector<int>& new_path,
                        double jt);

// Metropolis on the effective Hamiltonian: accept with min(1, exp(-dh/T))
bool qa_accept(double delta_h, double T, Rng& rng);

SolveOutcome qa_solve(const SubNetwork& net, const QoTWeights& w, const QoTConstraints& c,
                      const QaParams& params);

} // namespace ostp

#endif

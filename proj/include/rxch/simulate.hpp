#pragma once

#include <cstdint>
#include <vector>

#include "rxch/distribution.hpp"
#include "rxch/model.hpp"

namespace rxch {

/// Counter-based deterministic generator (splitmix64 finalizer over a keyed
/// counter). Identical output on every platform; independent streams are
/// derived from (seed, stream).
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0);
  std::uint64_t next_u64();
  double uniform();  // [0, 1)

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

struct Trajectory {
  std::vector<int> inputs;   // alphabet indices into dist.xs()
  std::vector<int> states;   // dense state indices
  double dt = 0.0;
  std::uint64_t seed = 0;
};

/// Simulate the discrete-time channel: x_i IID from dist, y_i from row
/// y_{i-1} of P(x_i, dt), y_0 from the stationary distribution.
Trajectory simulate(const ReceptorModel& model, const InputDistribution& dist,
                    double dt, long long n_steps, std::uint64_t seed);

enum class MiTarget { Y, Z };

struct MiEstimate {
  double mean = 0.0;       // nats/s
  double std_error = 0.0;  // across chains
  long long n_steps = 0;   // total accumulated steps (after burn-in)
  int n_chains = 0;
  MiTarget target = MiTarget::Y;
  bool low_counts = false;  // some empirical cell was empty where the model is not
};

/// Plug-in estimate of the per-step information rate: transition counts over
/// sensitive-origin states fed through the analytic summand with empirical
/// frequencies. n_steps is the total across chains; each chain discards a
/// 1000-step burn-in.
MiEstimate estimate_mi_y(const ReceptorModel& model, const InputDistribution& dist,
                         double dt, long long n_steps, int n_chains, std::uint64_t seed);

/// Forward-filter predictive log-loss estimate of I(X;Z) for the lumped
/// output Z = f(Y): H(Z) and H(Z|X) entropy rates from the one-step
/// predictive probabilities of the conditional hidden-Markov filter.
MiEstimate estimate_mi_z(const ReceptorModel& model, const InputDistribution& dist,
                         double dt, long long n_steps, int n_chains, std::uint64_t seed);

}  // namespace rxch

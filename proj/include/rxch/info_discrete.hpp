#pragma once

#include <utility>
#include <vector>

#include "rxch/distribution.hpp"
#include "rxch/model.hpp"

namespace rxch {

using EdgeKey = std::pair<int, int>;  // (from label, to label); (y,y) = diagonal term

/// Partial entropy phi(p) = p ln p with phi(0) = 0. Domain [0,1].
double phi(double p);

/// Binary entropy -phi(p) - phi(1-p), nats.
double binary_entropy(double p);

struct InfoReport {
  double rate_per_use = 0.0;     // nats per channel use
  double rate_per_second = 0.0;  // nats/s (= rate_per_use / dt)
  double dt = 0.0;
  /// Contribution of each sensitive edge, plus the diagonal bookkeeping term
  /// (y,y) for every state originating a sensitive edge. Insensitive edges
  /// contribute exactly zero and are omitted. Sorted by key.
  std::vector<std::pair<EdgeKey, double>> per_edge;
};

/// Exact IID mutual-information rate of the discrete-time channel
/// P = I + dt Q(x), summed over sensitive transitions only.
InfoReport mi_rate_discrete(const ReceptorModel& model, const InputDistribution& dist,
                            double dt);

/// Brute-force oracle: I(X^n; Y^n | Y0)/n by exhaustive enumeration over all
/// input and state sequences, with Y0 drawn from the stationary distribution.
/// n in 1..8, guarded against blow-up.
double mi_bruteforce(const ReceptorModel& model, const InputDistribution& dist,
                     double dt, int n);

}  // namespace rxch

#pragma once

#include <utility>
#include <vector>

#include "rxch/distribution.hpp"
#include "rxch/info_discrete.hpp"
#include "rxch/model.hpp"

namespace rxch {

/// Posterior input distribution nu(x) = p(x) x / xbar, aligned with dist.xs().
/// Throws std::domain_error if the mean input is zero.
std::vector<double> posterior(const InputDistribution& dist);

/// Kullback-Leibler divergence D(nu || p) in nats, with the phi(0)=0
/// convention for zero-mass points of nu.
double divergence(const std::vector<double>& nu, const std::vector<double>& p);

struct FluxReport {
  /// Steady-state flux pi_y * q_yy' * xbar through each sensitive non-self edge.
  std::vector<std::pair<EdgeKey, double>> per_edge;
  double total = 0.0;
};

struct LimitReport {
  double rate = 0.0;        // nats/s, = flux.total * divergence
  FluxReport flux;
  double divergence = 0.0;  // nats
  /// Per-edge limit contribution iota(y,y') = pi_y q (E phi(x) - phi(E x)).
  /// Sensitive self-transitions vanish in the limit and are not listed.
  std::vector<std::pair<EdgeKey, double>> per_edge_iota;
};

FluxReport flux(const ReceptorModel& model, const InputDistribution& dist);

/// Continuous-time limit of the information rate, lim I/dt = J_S' * D(nu||p).
LimitReport limit_rate(const ReceptorModel& model, const InputDistribution& dist);

}  // namespace rxch

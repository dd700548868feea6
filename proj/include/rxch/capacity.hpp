#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rxch/distribution.hpp"
#include "rxch/model.hpp"

namespace rxch {

enum class RateMode { discrete, limit };

struct CapacityResult {
  double value = 0.0;                 // nats/s
  InputDistribution argmax = InputDistribution::point_mass(0.0);
  RateMode mode = RateMode::limit;
  double dt = 0.0;                    // meaningful in discrete mode
  double argmax_p_low = 0.0;          // mass on the lowest alphabet point
  bool theorem3_applies = false;      // |S'| <= 1: result is the Shannon capacity
  std::vector<std::pair<InputDistribution, double>> trace;
};

/// The per-second information-rate objective the capacity searches maximize.
double rate_objective(const ReceptorModel& model, const InputDistribution& dist,
                      RateMode mode, double dt);

/// Maximize over two-point distributions on {x_low, x_high}: golden-section
/// on p_low after an empirical unimodality check on a 1001-point grid, with a
/// dense-grid fallback.
CapacityResult capacity_binary(const ReceptorModel& model, double x_low, double x_high,
                               RateMode mode, double dt = 0.0);

/// Maximize over the probability simplex of a finite alphabet: multi-start
/// projected gradient ascent (fixed seed) plus exact polish on every two-point
/// face. Best found is returned with its trace; global optimality is not
/// guaranteed when |S'| > 1.
CapacityResult capacity_general(const ReceptorModel& model,
                                const std::vector<double>& alphabet, RateMode mode,
                                double dt = 0.0, std::uint64_t seed = 20240817ULL);

}  // namespace rxch

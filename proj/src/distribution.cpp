#include "rxch/distribution.hpp"

#include <cmath>
#include <stdexcept>

namespace rxch {

InputDistribution::InputDistribution(std::vector<double> xs, std::vector<double> ps)
    : xs_(std::move(xs)), ps_(std::move(ps)) {
  if (xs_.empty() || xs_.size() != ps_.size())
    throw std::invalid_argument("alphabet and probabilities must be non-empty and equal-sized");
  double total = 0.0;
  for (std::size_t i = 0; i < xs_.size(); ++i) {
    if (!std::isfinite(xs_[i])) throw std::invalid_argument("alphabet point not finite");
    if (i > 0 && !(xs_[i - 1] < xs_[i]))
      throw std::invalid_argument("alphabet points must be distinct and ascending");
    if (!(ps_[i] >= 0.0) || !std::isfinite(ps_[i]))
      throw std::invalid_argument("probability masses must be >= 0");
    total += ps_[i];
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw std::invalid_argument("probability masses must sum to 1");
  mean_ = 0.0;
  for (std::size_t i = 0; i < xs_.size(); ++i) mean_ += ps_[i] * xs_[i];
}

InputDistribution InputDistribution::point_mass(double x) {
  return InputDistribution({x}, {1.0});
}

InputDistribution InputDistribution::binary(double x_low, double x_high, double p_low) {
  if (!(p_low >= 0.0 && p_low <= 1.0))
    throw std::invalid_argument("p_low must lie in [0,1]");
  return InputDistribution({x_low, x_high}, {p_low, 1.0 - p_low});
}

bool InputDistribution::is_point_mass() const {
  int positive = 0;
  for (double p : ps_)
    if (p > 0.0) ++positive;
  return positive <= 1;
}

}  // namespace rxch

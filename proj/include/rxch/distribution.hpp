#pragma once

#include <cstddef>
#include <vector>

namespace rxch {

/// Finite input alphabet with probability masses. Alphabet points are
/// distinct and ascending; masses are >= 0 and sum to 1 (tolerance 1e-12).
/// Zero-mass points are allowed.
class InputDistribution {
 public:
  InputDistribution(std::vector<double> xs, std::vector<double> ps);

  static InputDistribution point_mass(double x);
  /// Two-point distribution with mass p_low on x_low.
  static InputDistribution binary(double x_low, double x_high, double p_low);

  const std::vector<double>& xs() const { return xs_; }
  const std::vector<double>& ps() const { return ps_; }
  std::size_t size() const { return xs_.size(); }
  double mean() const { return mean_; }
  /// True if all mass sits on a single alphabet point.
  bool is_point_mass() const;

 private:
  std::vector<double> xs_;
  std::vector<double> ps_;
  double mean_ = 0.0;
};

}  // namespace rxch

#pragma once

#include <vector>

#include "rxch/distribution.hpp"
#include "rxch/model.hpp"

namespace rxch {

/// Dense k x k row-major matrix, small enough here (k <= 9) that nothing
/// fancier is warranted.
struct Matrix {
  int n = 0;
  std::vector<double> a;

  Matrix() = default;
  explicit Matrix(int k) : n(k), a(static_cast<std::size_t>(k) * k, 0.0) {}
  double& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  double operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

/// Continuous-time generator Q(x): off-diagonal (i,j) is base_rate * x for
/// sensitive edges, base_rate otherwise; the diagonal closes each row to zero.
/// Throws std::domain_error if x is outside the model's input range.
Matrix generator(const ReceptorModel& model, double x);

/// Input-averaged generator; equals generator(model, mean) since sensitive
/// entries are linear in x. Requires the distribution's support to lie in the
/// input range.
Matrix mean_generator(const ReceptorModel& model, const InputDistribution& dist);

/// Largest total exit rate max_i |R_i| at input x.
double max_exit_rate(const ReceptorModel& model, double x);

/// Supremum of the admissible time-step set T, with a small guard factor:
/// dt * max|R_i| <= 1 - 1e-9 at both range endpoints.
double dt_max(const ReceptorModel& model);

bool dt_valid(const ReceptorModel& model, double dt);

/// One-step transition matrix P = I + dt * Q(x). Throws std::domain_error if
/// any entry leaves [0,1]; the message names the violating entry.
Matrix transition(const ReceptorModel& model, double x, double dt);

/// Stationary distribution: normalized left null vector of the mean
/// generator. Solved directly by replacing one equation of Qbar^T pi = 0 with
/// the normalization row. Throws std::runtime_error on a singular /
/// non-unique null space (reducibility failure).
std::vector<double> stationary(const ReceptorModel& model, const InputDistribution& dist);

/// Same, at an explicit mean input value.
std::vector<double> stationary_at(const ReceptorModel& model, double x_mean);

}  // namespace rxch

#include "rxch/kinetics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace rxch {

namespace {

constexpr double kDtGuard = 1e-9;

void check_in_range(const ReceptorModel& model, double x) {
  if (!(x >= model.x_min && x <= model.x_max))
    throw std::domain_error("input x = " + std::to_string(x) +
                            " outside model range [" + std::to_string(model.x_min) +
                            ", " + std::to_string(model.x_max) + "]");
}

}  // namespace

Matrix generator(const ReceptorModel& model, double x) {
  check_in_range(model, x);
  const int k = model.size();
  Matrix q(k);
  for (const Edge& e : model.edges) {
    const int i = model.index_of(e.from);
    const int j = model.index_of(e.to);
    q(i, j) = e.sensitive ? e.base_rate * x : e.base_rate;
  }
  for (int i = 0; i < k; ++i) {
    double row = 0.0;
    for (int j = 0; j < k; ++j)
      if (j != i) row += q(i, j);
    q(i, i) = -row;
  }
  return q;
}

Matrix mean_generator(const ReceptorModel& model, const InputDistribution& dist) {
  for (std::size_t i = 0; i < dist.size(); ++i)
    if (dist.ps()[i] > 0.0) check_in_range(model, dist.xs()[i]);
  // Sensitive entries are linear in x, so the expectation is the generator
  // evaluated at the mean input.
  return generator(model, dist.mean());
}

double max_exit_rate(const ReceptorModel& model, double x) {
  const Matrix q = generator(model, x);
  double worst = 0.0;
  for (int i = 0; i < q.n; ++i) worst = std::max(worst, -q(i, i));
  return worst;
}

double dt_max(const ReceptorModel& model) {
  const double worst =
      std::max(max_exit_rate(model, model.x_min), max_exit_rate(model, model.x_max));
  if (worst <= 0.0) return 1.0;  // no transitions fire; any dt up to 1 works
  return (1.0 - kDtGuard) / worst;
}

bool dt_valid(const ReceptorModel& model, double dt) {
  return dt > 0.0 && dt <= dt_max(model);
}

Matrix transition(const ReceptorModel& model, double x, double dt) {
  if (!(dt > 0.0)) throw std::domain_error("dt must be positive");
  Matrix p = generator(model, x);
  const int k = p.n;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      p(i, j) = dt * p(i, j) + (i == j ? 1.0 : 0.0);
      if (p(i, j) < 0.0 || p(i, j) > 1.0)
        throw std::domain_error("dt = " + std::to_string(dt) +
                                " leaves probability range at entry (" +
                                std::to_string(model.label_of(i)) + "," +
                                std::to_string(model.label_of(j)) +
                                ") = " + std::to_string(p(i, j)));
    }
  return p;
}

std::vector<double> stationary_at(const ReceptorModel& model, double x_mean) {
  const Matrix q = generator(model, x_mean);
  const int k = q.n;
  if (k == 1) return {1.0};

  double scale = 0.0;
  for (double v : q.a) scale = std::max(scale, std::abs(v));
  if (scale == 0.0)
    throw std::runtime_error("stationary distribution not unique: zero generator");

  // Solve A pi = b with A = Qbar^T, one equation replaced by normalization.
  std::vector<double> a(static_cast<std::size_t>(k) * k);
  std::vector<double> b(k, 0.0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) a[static_cast<std::size_t>(i) * k + j] = q(j, i);
  for (int j = 0; j < k; ++j) a[static_cast<std::size_t>(k - 1) * k + j] = 1.0;
  b[k - 1] = 1.0;

  // Gaussian elimination with partial pivoting.
  std::vector<int> perm(k);
  for (int i = 0; i < k; ++i) perm[i] = i;
  for (int col = 0; col < k; ++col) {
    int piv = col;
    for (int r = col + 1; r < k; ++r)
      if (std::abs(a[static_cast<std::size_t>(r) * k + col]) >
          std::abs(a[static_cast<std::size_t>(piv) * k + col]))
        piv = r;
    if (std::abs(a[static_cast<std::size_t>(piv) * k + col]) <= 1e-14 * scale)
      throw std::runtime_error(
          "stationary solve singular: reducible chain or non-unique null space");
    if (piv != col) {
      for (int j = 0; j < k; ++j)
        std::swap(a[static_cast<std::size_t>(piv) * k + j],
                  a[static_cast<std::size_t>(col) * k + j]);
      std::swap(b[piv], b[col]);
    }
    const double d = a[static_cast<std::size_t>(col) * k + col];
    for (int r = col + 1; r < k; ++r) {
      const double f = a[static_cast<std::size_t>(r) * k + col] / d;
      if (f == 0.0) continue;
      for (int j = col; j < k; ++j)
        a[static_cast<std::size_t>(r) * k + j] -= f * a[static_cast<std::size_t>(col) * k + j];
      b[r] -= f * b[col];
    }
  }
  std::vector<double> pi(k, 0.0);
  for (int i = k - 1; i >= 0; --i) {
    double s = b[i];
    for (int j = i + 1; j < k; ++j) s -= a[static_cast<std::size_t>(i) * k + j] * pi[j];
    pi[i] = s / a[static_cast<std::size_t>(i) * k + i];
  }

  double total = 0.0;
  for (double& v : pi) {
    if (v < 0.0 && v > -1e-12) v = 0.0;
    total += v;
  }
  for (double& v : pi) v /= total;

  // Residual check against pi Qbar = 0.
  double resid = 0.0;
  for (int j = 0; j < k; ++j) {
    double s = 0.0;
    for (int i = 0; i < k; ++i) s += pi[i] * q(i, j);
    resid = std::max(resid, std::abs(s));
  }
  if (resid > 1e-10 * scale)
    throw std::runtime_error("stationary residual too large: reducibility failure");
  return pi;
}

std::vector<double> stationary(const ReceptorModel& model, const InputDistribution& dist) {
  for (std::size_t i = 0; i < dist.size(); ++i)
    if (dist.ps()[i] > 0.0) check_in_range(model, dist.xs()[i]);
  return stationary_at(model, dist.mean());
}

}  // namespace rxch

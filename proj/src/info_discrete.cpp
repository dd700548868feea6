#include "rxch/info_discrete.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rxch/kinetics.hpp"

namespace rxch {

namespace {

// p ln p without the [0,1] domain check; used where the argument is a rate
// or an input level rather than a probability.
double xlogx(double v) { return v <= 0.0 ? 0.0 : v * std::log(v); }

struct NeumaierSum {
  double sum = 0.0;
  double comp = 0.0;
  void add(double v) {
    const double t = sum + v;
    comp += (std::abs(sum) >= std::abs(v)) ? (sum - t) + v : (v - t) + sum;
    sum = t;
  }
  double value() const { return sum + comp; }
};

// The Jensen gap of phi over the input alphabet for one transition
// probability map x -> p(y'|x,y). Non-negative by convexity; tiny negative
// round-off is clamped.
double jensen_gap(const InputDistribution& dist, const std::vector<double>& pyx) {
  double lhs = 0.0, mean = 0.0;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    lhs += dist.ps()[i] * xlogx(pyx[i]);
    mean += dist.ps()[i] * pyx[i];
  }
  double gap = lhs - xlogx(mean);
  if (gap < 0.0 && gap > -1e-15) gap = 0.0;
  return gap;
}

}  // namespace

double phi(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("phi: argument outside [0,1]");
  return xlogx(p);
}

double binary_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::domain_error("binary_entropy: argument outside [0,1]");
  return -xlogx(p) - xlogx(1.0 - p);
}

InfoReport mi_rate_discrete(const ReceptorModel& model, const InputDistribution& dist,
                            double dt) {
  if (!dt_valid(model, dt))
    throw std::domain_error("dt outside the admissible set T for this model");

  InfoReport report;
  report.dt = dt;

  // A point-mass input (or an empty sensitive set) carries no information;
  // return the exact zero without touching the stationary solve.
  const auto sens = sensitive_edges(model);
  if (dist.is_point_mass() || sens.empty()) {
    report.rate_per_use = 0.0;
    report.rate_per_second = 0.0;
    return report;
  }

  const std::vector<double> pi = stationary(model, dist);
  const int m = static_cast<int>(dist.size());

  // Group sensitive edges by origin state; each origin also carries the
  // diagonal bookkeeping term.
  std::vector<int> origins;
  for (const Edge& e : sens)
    if (origins.empty() || origins.back() != e.from) origins.push_back(e.from);

  NeumaierSum total;
  std::vector<double> pyx(m);
  for (int y_label : origins) {
    const int y = model.index_of(y_label);
    for (const Edge& e : sens) {
      if (e.from != y_label) continue;
      for (int i = 0; i < m; ++i) pyx[i] = e.base_rate * dist.xs()[i] * dt;
      const double contrib = pi[y] * jensen_gap(dist, pyx);
      report.per_edge.push_back({{e.from, e.to}, contrib});
      total.add(contrib);
    }
    // Diagonal entry of P(x, dt) for the sensitive-origin state.
    for (int i = 0; i < m; ++i) {
      double exit = 0.0;
      for (const Edge& e : model.edges)
        if (e.from == y_label)
          exit += e.sensitive ? e.base_rate * dist.xs()[i] : e.base_rate;
      pyx[i] = 1.0 - dt * exit;
    }
    const double diag = pi[y] * jensen_gap(dist, pyx);
    report.per_edge.push_back({{y_label, y_label}, diag});
    total.add(diag);
  }

  std::sort(report.per_edge.begin(), report.per_edge.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  report.rate_per_use = total.value();
  if (report.rate_per_use < 0.0 && report.rate_per_use > -1e-15)
    report.rate_per_use = 0.0;
  report.rate_per_second = report.rate_per_use / dt;
  return report;
}

double mi_bruteforce(const ReceptorModel& model, const InputDistribution& dist,
                     double dt, int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("mi_bruteforce: n must be in 1..8");
  if (!dt_valid(model, dt))
    throw std::domain_error("dt outside the admissible set T for this model");

  const int k = model.size();
  const int m = static_cast<int>(dist.size());
  double paths = k;
  for (int i = 0; i < n; ++i) paths *= static_cast<double>(m) * k;
  if (paths > 2e8) throw std::invalid_argument("mi_bruteforce: enumeration too large");

  const std::vector<double> pi = stationary(model, dist);
  std::vector<Matrix> px;
  px.reserve(m);
  for (int i = 0; i < m; ++i) px.push_back(transition(model, dist.xs()[i], dt));
  Matrix pbar(k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      double s = 0.0;
      for (int i = 0; i < m; ++i) s += dist.ps()[i] * px[i](a, b);
      pbar(a, b) = s;
    }

  // I(X^n; Y^n | Y0) by exhaustive summation: weight * sum of per-step
  // log-likelihood ratios along every (y0, x^n, y^n) path.
  NeumaierSum info;
  struct Frame {
    int depth;
    int y;
    double weight;
    double logratio;
  };
  std::vector<Frame> stack;
  for (int y0 = 0; y0 < k; ++y0)
    if (pi[y0] > 0.0) stack.push_back({0, y0, pi[y0], 0.0});
  while (!stack.empty()) {
    const Frame f = stack.back();
    stack.pop_back();
    if (f.depth == n) {
      info.add(f.weight * f.logratio);
      continue;
    }
    for (int xi = 0; xi < m; ++xi) {
      const double pxw = dist.ps()[xi];
      if (pxw == 0.0) continue;
      for (int y = 0; y < k; ++y) {
        const double step = px[xi](f.y, y);
        if (step == 0.0) continue;
        stack.push_back({f.depth + 1, y, f.weight * pxw * step,
                         f.logratio + std::log(step / pbar(f.y, y))});
      }
    }
  }
  return info.value() / n;
}

}  // namespace rxch

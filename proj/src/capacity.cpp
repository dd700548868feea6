#include "rxch/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "rxch/info_discrete.hpp"
#include "rxch/info_limit.hpp"
#include "rxch/kinetics.hpp"
#include "rxch/simulate.hpp"

namespace rxch {

namespace {

constexpr int kStarts = 32;
constexpr int kMaxAscentIters = 200;
constexpr double kGradStep = 1e-6;

int sensitive_count(const ReceptorModel& model) {
  return static_cast<int>(sensitive_edges(model).size());
}

std::vector<double> normalized(std::vector<double> p) {
  double s = 0.0;
  for (double v : p) s += v;
  for (double& v : p) v /= s;
  return p;
}

// Euclidean projection onto the probability simplex.
std::vector<double> project_simplex(std::vector<double> v) {
  std::vector<double> u = v;
  std::sort(u.begin(), u.end(), std::greater<>());
  double running = 0.0, theta = 0.0;
  for (int i = 0; i < static_cast<int>(u.size()); ++i) {
    running += u[i];
    const double t = (running - 1.0) / (i + 1);
    if (u[i] - t > 0.0) theta = t;
  }
  for (double& x : v) x = std::max(x - theta, 0.0);
  return normalized(v);
}

struct Golden {
  double x = 0.0;
  double fx = 0.0;
};

// Golden-section maximization of f on [a, b] down to interval width tol.
Golden golden_max(const std::function<double(double)>& f, double a, double b,
                  double tol) {
  const double inv = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv * (b - a), d = a + inv * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv * (b - a);
      fd = f(d);
    }
  }
  const double mid = 0.5 * (a + b);
  const double fm = f(mid);
  Golden g{mid, fm};
  if (fc > g.fx) g = {b - inv * (b - a), fc};
  if (fd > g.fx) g = {a + inv * (b - a), fd};
  return g;
}

}  // namespace

double rate_objective(const ReceptorModel& model, const InputDistribution& dist,
                      RateMode mode, double dt) {
  if (mode == RateMode::limit) return limit_rate(model, dist).rate;
  return mi_rate_discrete(model, dist, dt).rate_per_second;
}

CapacityResult capacity_binary(const ReceptorModel& model, double x_low, double x_high,
                               RateMode mode, double dt) {
  if (x_low > x_high) throw std::invalid_argument("capacity_binary: x_low > x_high");
  if (mode == RateMode::discrete && !dt_valid(model, dt))
    throw std::domain_error("capacity_binary: dt outside the admissible set T");

  CapacityResult result;
  result.mode = mode;
  result.dt = dt;
  result.theorem3_applies = sensitive_count(model) <= 1;

  if (x_low == x_high) {
    // One-point alphabet; no information for any p_low.
    result.argmax = InputDistribution::point_mass(x_low);
    result.argmax_p_low = 0.5;
    return result;
  }

  auto f = [&](double p_low) {
    return rate_objective(model, InputDistribution::binary(x_low, x_high, p_low), mode, dt);
  };

  const int grid = 1000;
  std::vector<double> vals(grid + 1);
  int imax = 0;
  for (int i = 0; i <= grid; ++i) {
    vals[i] = f(static_cast<double>(i) / grid);
    if (vals[i] > vals[imax]) imax = i;
  }
  const double tol = 1e-12 * (1.0 + std::abs(vals[imax]));
  bool unimodal = true;
  for (int i = 0; i < imax; ++i)
    if (vals[i + 1] < vals[i] - tol) unimodal = false;
  for (int i = imax; i < grid; ++i)
    if (vals[i + 1] > vals[i] + tol) unimodal = false;

  double best_p, best_v;
  if (unimodal) {
    const double a = static_cast<double>(std::max(0, imax - 1)) / grid;
    const double b = static_cast<double>(std::min(grid, imax + 1)) / grid;
    auto traced = [&](double p) {
      const double v = f(p);
      result.trace.push_back({InputDistribution::binary(x_low, x_high, p), v});
      return v;
    };
    const Golden g = golden_max(traced, a, b, 1e-7);
    best_p = g.x;
    best_v = g.fx;
  } else {
    // Fall back to a dense grid argmax.
    best_p = static_cast<double>(imax) / grid;
    best_v = vals[imax];
    for (int i = 0; i <= 100000; ++i) {
      const double p = static_cast<double>(i) / 100000;
      const double v = f(p);
      if (v > best_v) {
        best_v = v;
        best_p = p;
      }
    }
  }

  result.argmax = InputDistribution::binary(x_low, x_high, best_p);
  result.argmax_p_low = best_p;
  result.value = rate_objective(model, result.argmax, mode, dt);
  result.trace.push_back({result.argmax, result.value});
  return result;
}

CapacityResult capacity_general(const ReceptorModel& model,
                                const std::vector<double>& alphabet, RateMode mode,
                                double dt, std::uint64_t seed) {
  std::vector<double> xs = alphabet;
  std::sort(xs.begin(), xs.end());
  if (xs.empty()) throw std::invalid_argument("capacity_general: empty alphabet");
  if (std::adjacent_find(xs.begin(), xs.end()) != xs.end())
    throw std::invalid_argument("capacity_general: alphabet points must be distinct");
  if (mode == RateMode::discrete && !dt_valid(model, dt))
    throw std::domain_error("capacity_general: dt outside the admissible set T");

  const int m = static_cast<int>(xs.size());
  CapacityResult result;
  result.mode = mode;
  result.dt = dt;
  result.theorem3_applies = sensitive_count(model) <= 1;

  if (m == 1) {
    result.argmax = InputDistribution::point_mass(xs[0]);
    result.argmax_p_low = 1.0;
    return result;
  }

  auto f = [&](const std::vector<double>& ps) {
    return rate_objective(model, InputDistribution(xs, normalized(ps)), mode, dt);
  };

  std::vector<double> best_p(m, 0.0);
  double best_v = -1.0;
  auto consider = [&](const std::vector<double>& ps, double v) {
    result.trace.push_back({InputDistribution(xs, normalized(ps)), v});
    if (v > best_v) {
      best_v = v;
      best_p = normalized(ps);
    }
  };

  // Multi-start projected gradient ascent with numerical gradients.
  for (int start = 0; start < kStarts; ++start) {
    CounterRng rng(seed, static_cast<std::uint64_t>(start));
    std::vector<double> p(m);
    for (double& v : p) v = -std::log(1.0 - rng.uniform());
    p = normalized(p);
    double fp = f(p);

    for (int iter = 0; iter < kMaxAscentIters; ++iter) {
      std::vector<double> g(m);
      for (int i = 0; i < m; ++i) {
        std::vector<double> up = p, dn = p;
        up[i] += kGradStep;
        if (p[i] >= kGradStep) {
          dn[i] -= kGradStep;
          g[i] = (f(up) - f(dn)) / (2.0 * kGradStep);
        } else {
          g[i] = (f(up) - fp) / kGradStep;
        }
      }
      double gmax = 0.0, gmean = 0.0;
      for (double v : g) gmean += v / m;
      for (double& v : g) {
        v -= gmean;
        gmax = std::max(gmax, std::abs(v));
      }
      if (gmax == 0.0) break;

      bool improved = false;
      for (double eta = 0.25; eta > 1e-12; eta *= 0.5) {
        std::vector<double> cand(m);
        for (int i = 0; i < m; ++i) cand[i] = p[i] + eta * g[i] / gmax;
        cand = project_simplex(cand);
        const double fc = f(cand);
        if (fc > fp + 1e-14) {
          const double gain = fc - fp;
          p = cand;
          fp = fc;
          improved = true;
          if (gain < 1e-11 * (1.0 + std::abs(fp))) improved = false;  // converged
          break;
        }
      }
      if (!improved) break;
    }
    consider(p, fp);
  }

  // Exact polish on every two-point face; for |S'| <= 1 the endpoint face is
  // optimal and this lands the zero interior mass exactly.
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      auto face = [&](double p_low) {
        std::vector<double> ps(m, 0.0);
        ps[i] = p_low;
        ps[j] = 1.0 - p_low;
        return f(ps);
      };
      const Golden g = golden_max(face, 0.0, 1.0, 1e-7);
      std::vector<double> ps(m, 0.0);
      ps[i] = g.x;
      ps[j] = 1.0 - g.x;
      consider(ps, g.fx);
    }

  result.argmax = InputDistribution(xs, best_p);
  result.argmax_p_low = best_p[0];
  result.value = rate_objective(model, result.argmax, mode, dt);
  return result;
}

}  // namespace rxch

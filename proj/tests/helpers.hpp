#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "rxch/distribution.hpp"
#include "rxch/model.hpp"
#include "rxch/simulate.hpp"

namespace testutil {

// Small strongly connected model with randomized rates, sensitivity flags and
// extra edges. State labels 0..k-1, input range [0, 10]; the base cycle is
// insensitive so the graph stays irreducible for every input.
inline rxch::ReceptorModel random_model(rxch::CounterRng& rng, int max_k = 6) {
  const int k = 2 + static_cast<int>(rng.next_u64() % (max_k - 1));
  rxch::ReceptorModel m;
  m.x_min = 0.0;
  m.x_max = 10.0;
  for (int i = 0; i < k; ++i) m.states.push_back({i, "s"});
  auto rate = [&] { return 0.5 + 4.5 * rng.uniform(); };
  for (int i = 0; i < k; ++i)
    m.edges.push_back({i, (i + 1) % k, rate(), false});
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i == j || j == (i + 1) % k) continue;
      if (rng.uniform() < 0.3) m.edges.push_back({i, j, rate(), rng.uniform() < 0.5});
    }
  bool any_sensitive = false;
  for (const auto& e : m.edges) any_sensitive |= e.sensitive;
  if (!any_sensitive) m.edges[0].sensitive = true;
  m.normalize();
  return m;
}

// Random ascending alphabet in [lo, hi] with strictly positive spacing and a
// random positive probability vector.
inline rxch::InputDistribution random_dist(rxch::CounterRng& rng, int max_points = 5,
                                           double lo = 0.5, double hi = 4.0) {
  const int n = 2 + static_cast<int>(rng.next_u64() % (max_points - 1));
  std::vector<double> xs(n), ps(n);
  for (double& x : xs) x = lo + (hi - lo) * rng.uniform();
  std::sort(xs.begin(), xs.end());
  for (int i = 1; i < n; ++i)
    if (xs[i] - xs[i - 1] < 1e-3) xs[i] = xs[i - 1] + 1e-3;
  double sum = 0.0;
  for (double& p : ps) {
    p = 0.05 - std::log(1.0 - rng.uniform());
    sum += p;
  }
  for (double& p : ps) p /= sum;
  return rxch::InputDistribution(xs, ps);
}

// Two-state bind/unbind receptor: binding is input-sensitive.
inline rxch::ReceptorModel bind_model() {
  rxch::ReceptorModel m;
  m.states = {{1, "U"}, {2, "B"}};
  m.edges = {{1, 2, 2.0, true}, {2, 1, 1.0, false}};
  m.x_min = 0.0;
  m.x_max = 5.0;
  m.lump = {{1, "U"}, {2, "B"}};
  return m;
}

inline bool same_model(const rxch::ReceptorModel& a, const rxch::ReceptorModel& b) {
  if (a.states.size() != b.states.size() || a.edges.size() != b.edges.size())
    return false;
  for (std::size_t i = 0; i < a.states.size(); ++i)
    if (a.states[i].id != b.states[i].id || a.states[i].property != b.states[i].property)
      return false;
  for (std::size_t i = 0; i < a.edges.size(); ++i) {
    const auto& x = a.edges[i];
    const auto& y = b.edges[i];
    if (x.from != y.from || x.to != y.to || x.base_rate != y.base_rate ||
        x.sensitive != y.sensitive)
      return false;
  }
  return a.x_min == b.x_min && a.x_max == b.x_max && a.lump == b.lump;
}

inline double rel_diff(double a, double b) {
  const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) / scale;
}

}  // namespace testutil

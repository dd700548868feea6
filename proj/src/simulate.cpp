#include "rxch/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>

#include "rxch/kinetics.hpp"

namespace rxch {

namespace {

constexpr long long kBurnIn = 1000;

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double xlogx(double v) { return v <= 0.0 ? 0.0 : v * std::log(v); }

int pick(const std::vector<double>& cum, double u) {
  for (int i = 0; i < static_cast<int>(cum.size()); ++i)
    if (u < cum[i]) return i;
  return static_cast<int>(cum.size()) - 1;
}

int thread_budget(int n_tasks) {
  int t = static_cast<int>(std::thread::hardware_concurrency());
  if (const char* env = std::getenv("RXCH_THREADS")) t = std::max(1, std::atoi(env));
  if (t <= 0) t = 1;
  return std::min(t, n_tasks);
}

// Run fn(chain_index) for every chain, possibly in parallel; results are
// written per-index so the reduction order stays fixed.
void for_each_chain(int n_chains, const std::function<void(int)>& fn) {
  const int n_threads = thread_budget(n_chains);
  if (n_threads <= 1) {
    for (int c = 0; c < n_chains; ++c) fn(c);
    return;
  }
  std::vector<std::thread> pool;
  for (int t = 0; t < n_threads; ++t)
    pool.emplace_back([&, t] {
      for (int c = t; c < n_chains; c += n_threads) fn(c);
    });
  for (auto& th : pool) th.join();
}

struct ChannelTables {
  int k = 0;
  int m = 0;
  std::vector<Matrix> px;            // per alphabet point
  Matrix pbar;
  std::vector<std::vector<double>> cum_px;  // [x][y*k + j] cumulative rows
  std::vector<double> cum_dist;
  std::vector<double> cum_pi;
  std::vector<double> pi;
};

ChannelTables build_tables(const ReceptorModel& model, const InputDistribution& dist,
                           double dt) {
  if (!dt_valid(model, dt))
    throw std::domain_error("dt outside the admissible set T for this model");
  ChannelTables t;
  t.k = model.size();
  t.m = static_cast<int>(dist.size());
  for (int i = 0; i < t.m; ++i) t.px.push_back(transition(model, dist.xs()[i], dt));
  t.pbar = Matrix(t.k);
  for (int a = 0; a < t.k; ++a)
    for (int b = 0; b < t.k; ++b) {
      double s = 0.0;
      for (int i = 0; i < t.m; ++i) s += dist.ps()[i] * t.px[i](a, b);
      t.pbar(a, b) = s;
    }
  t.cum_px.resize(t.m);
  for (int i = 0; i < t.m; ++i) {
    t.cum_px[i].resize(static_cast<std::size_t>(t.k) * t.k);
    for (int y = 0; y < t.k; ++y) {
      double c = 0.0;
      for (int j = 0; j < t.k; ++j) {
        c += t.px[i](y, j);
        t.cum_px[i][static_cast<std::size_t>(y) * t.k + j] = c;
      }
    }
  }
  double c = 0.0;
  for (int i = 0; i < t.m; ++i) {
    c += dist.ps()[i];
    t.cum_dist.push_back(c);
  }
  t.pi = stationary(model, dist);
  c = 0.0;
  for (int y = 0; y < t.k; ++y) {
    c += t.pi[y];
    t.cum_pi.push_back(c);
  }
  return t;
}

}  // namespace

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : key_(splitmix64(seed) ^ splitmix64(stream * 0xD1B54A32D192ED03ULL + 1)) {}

std::uint64_t CounterRng::next_u64() {
  return splitmix64(key_ + counter_++ * 0x9E3779B97F4A7C15ULL);
}

double CounterRng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

Trajectory simulate(const ReceptorModel& model, const InputDistribution& dist,
                    double dt, long long n_steps, std::uint64_t seed) {
  const ChannelTables t = build_tables(model, dist, dt);
  CounterRng rng(seed);
  Trajectory traj;
  traj.dt = dt;
  traj.seed = seed;
  traj.inputs.reserve(n_steps);
  traj.states.reserve(n_steps);
  int y = pick(t.cum_pi, rng.uniform());
  for (long long i = 0; i < n_steps; ++i) {
    const int x = pick(t.cum_dist, rng.uniform());
    const double u = rng.uniform();
    int j = 0;
    const double* row = &t.cum_px[x][static_cast<std::size_t>(y) * t.k];
    while (j < t.k - 1 && u >= row[j]) ++j;
    y = j;
    traj.inputs.push_back(x);
    traj.states.push_back(y);
  }
  return traj;
}

MiEstimate estimate_mi_y(const ReceptorModel& model, const InputDistribution& dist,
                         double dt, long long n_steps, int n_chains,
                         std::uint64_t seed) {
  if (n_chains < 1) throw std::invalid_argument("n_chains must be >= 1");
  const ChannelTables t = build_tables(model, dist, dt);
  const long long per_chain = std::max<long long>(1, n_steps / n_chains);
  const int k = t.k, m = t.m;

  // Sensitive-origin states and their sensitive targets (dense indices).
  std::vector<std::vector<int>> sens_targets(k);
  for (const Edge& e : sensitive_edges(model))
    sens_targets[model.index_of(e.from)].push_back(model.index_of(e.to));

  std::vector<double> chain_rate(n_chains, 0.0);
  std::vector<char> chain_low(n_chains, 0);

  for_each_chain(n_chains, [&](int chain) {
    CounterRng rng(seed, static_cast<std::uint64_t>(chain));
    std::vector<long long> n_y(k, 0), n_x(m, 0);
    std::vector<long long> n_yx(static_cast<std::size_t>(k) * m, 0);
    std::vector<long long> n_yxy(static_cast<std::size_t>(k) * m * k, 0);

    int y = pick(t.cum_pi, rng.uniform());
    for (long long i = 0; i < per_chain + kBurnIn; ++i) {
      const int x = pick(t.cum_dist, rng.uniform());
      const double u = rng.uniform();
      const double* row = &t.cum_px[x][static_cast<std::size_t>(y) * k];
      int j = 0;
      while (j < k - 1 && u >= row[j]) ++j;
      if (i >= kBurnIn) {
        ++n_y[y];
        ++n_x[x];
        ++n_yx[static_cast<std::size_t>(y) * m + x];
        ++n_yxy[(static_cast<std::size_t>(y) * m + x) * k + j];
      }
      y = j;
    }

    const double steps = static_cast<double>(per_chain);
    bool low = false;
    double info = 0.0;
    for (int yy = 0; yy < k; ++yy) {
      if (sens_targets[yy].empty()) continue;
      std::vector<int> targets = sens_targets[yy];
      targets.push_back(yy);  // diagonal bookkeeping term
      const double pi_hat = n_y[yy] / steps;
      if (pi_hat == 0.0) {
        low = true;
        continue;
      }
      for (int target : targets) {
        double lhs = 0.0, mean = 0.0;
        for (int x = 0; x < m; ++x) {
          const double px_hat = n_x[x] / steps;
          const long long denom = n_yx[static_cast<std::size_t>(yy) * m + x];
          if (denom == 0) {
            if (dist.ps()[x] > 0.0) low = true;
            continue;
          }
          const double cond =
              static_cast<double>(n_yxy[(static_cast<std::size_t>(yy) * m + x) * k + target]) /
              denom;
          if (cond == 0.0 && t.px[x](yy, target) > 0.0) low = true;
          lhs += px_hat * xlogx(cond);
          mean += px_hat * cond;
        }
        info += pi_hat * (lhs - xlogx(mean));
      }
    }
    chain_rate[chain] = info / dt;
    chain_low[chain] = low ? 1 : 0;
  });

  MiEstimate est;
  est.target = MiTarget::Y;
  est.n_chains = n_chains;
  est.n_steps = per_chain * n_chains;
  double mean = 0.0;
  for (double r : chain_rate) mean += r;
  mean /= n_chains;
  double var = 0.0;
  for (double r : chain_rate) var += (r - mean) * (r - mean);
  var = n_chains > 1 ? var / (n_chains - 1) : 0.0;
  est.mean = mean;
  est.std_error = std::sqrt(var / n_chains);
  for (char l : chain_low) est.low_counts |= (l != 0);
  return est;
}

MiEstimate estimate_mi_z(const ReceptorModel& model, const InputDistribution& dist,
                         double dt, long long n_steps, int n_chains,
                         std::uint64_t seed) {
  if (n_chains < 1) throw std::invalid_argument("n_chains must be >= 1");
  if (!model.has_lump())
    throw std::invalid_argument("estimate_mi_z requires a model with a lump map");
  const ChannelTables t = build_tables(model, dist, dt);
  const long long per_chain = std::max<long long>(1, n_steps / n_chains);
  const int k = t.k;

  // Dense state -> lumped output index.
  std::vector<std::string> tags;
  std::vector<int> zmap(k);
  for (int i = 0; i < k; ++i) {
    const std::string& tag = model.lump.at(model.label_of(i));
    auto it = std::find(tags.begin(), tags.end(), tag);
    if (it == tags.end()) {
      tags.push_back(tag);
      zmap[i] = static_cast<int>(tags.size()) - 1;
    } else {
      zmap[i] = static_cast<int>(it - tags.begin());
    }
  }

  std::vector<double> chain_rate(n_chains, 0.0);
  std::vector<char> chain_low(n_chains, 0);

  for_each_chain(n_chains, [&](int chain) {
    CounterRng rng(seed, static_cast<std::uint64_t>(chain));
    // Forward filters for the hidden state: alpha_z conditions on the z
    // history only (x marginalized), alpha_zx conditions on z and x history.
    std::vector<double> alpha_z = t.pi, alpha_zx = t.pi, tmp(k);
    double logloss_z = 0.0, logloss_zx = 0.0;
    long long used = 0;
    bool low = false;

    int y = pick(t.cum_pi, rng.uniform());
    for (long long i = 0; i < per_chain + kBurnIn; ++i) {
      const int x = pick(t.cum_dist, rng.uniform());
      const double u = rng.uniform();
      const double* row = &t.cum_px[x][static_cast<std::size_t>(y) * k];
      int j = 0;
      while (j < k - 1 && u >= row[j]) ++j;
      const int z = zmap[j];

      auto advance = [&](std::vector<double>& alpha, const Matrix& p) {
        double pred = 0.0;
        for (int b = 0; b < k; ++b) {
          double s = 0.0;
          for (int a = 0; a < k; ++a) s += alpha[a] * p(a, b);
          tmp[b] = (zmap[b] == z) ? s : 0.0;
          pred += tmp[b];
        }
        if (pred <= 0.0) {
          alpha = t.pi;  // observation impossible under the filter state
          low = true;
          return -1.0;
        }
        for (int b = 0; b < k; ++b) alpha[b] = tmp[b] / pred;
        return pred;
      };

      const double pred_z = advance(alpha_z, t.pbar);
      const double pred_zx = advance(alpha_zx, t.px[x]);
      if (i >= kBurnIn && pred_z > 0.0 && pred_zx > 0.0) {
        logloss_z -= std::log(pred_z);
        logloss_zx -= std::log(pred_zx);
        ++used;
      }
      y = j;
    }
    chain_rate[chain] = used > 0 ? (logloss_z - logloss_zx) / used / dt : 0.0;
    chain_low[chain] = low ? 1 : 0;
  });

  MiEstimate est;
  est.target = MiTarget::Z;
  est.n_chains = n_chains;
  est.n_steps = per_chain * n_chains;
  double mean = 0.0;
  for (double r : chain_rate) mean += r;
  mean /= n_chains;
  double var = 0.0;
  for (double r : chain_rate) var += (r - mean) * (r - mean);
  var = n_chains > 1 ? var / (n_chains - 1) : 0.0;
  est.mean = mean;
  est.std_error = std::sqrt(var / n_chains);
  for (char l : chain_low) est.low_counts |= (l != 0);
  return est;
}

}  // namespace rxch

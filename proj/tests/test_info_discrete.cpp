#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "rxch/info_discrete.hpp"
#include "rxch/kinetics.hpp"

using namespace rxch;

namespace {

// Two-outcome form of the ChR2 rate: the C1 row has a single sensitive exit,
// so the Theorem-style sum collapses to a mix of binary entropies.
double chr2_closed_form(double p_low, double dt) {
  const ReceptorModel m = builtin("chr2");
  const auto d = InputDistribution::binary(0.0, 1.0, p_low);
  const double xb = d.mean();
  const auto pi = stationary(m, d);
  const double q12 = 5000.0;
  return pi[0] * (binary_entropy(dt * q12 * xb) - p_low * binary_entropy(0.0) -
                  (1.0 - p_low) * binary_entropy(dt * q12 * 1.0));
}

}  // namespace

TEST_CASE("partial entropy") {
  CHECK(phi(0.0) == 0.0);
  CHECK(phi(1.0) == 0.0);
  CHECK(phi(0.5) == doctest::Approx(-0.34657359027997264).epsilon(1e-15));
  CHECK_THROWS_AS(phi(-0.1), std::domain_error);
  CHECK_THROWS_AS(phi(1.1), std::domain_error);
}

TEST_CASE("binary entropy") {
  CHECK(binary_entropy(0.5) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(binary_entropy(0.0) == 0.0);
  CHECK(binary_entropy(1.0) == 0.0);
  CHECK(binary_entropy(0.1) == doctest::Approx(0.3250829733914482).epsilon(1e-12));
  CHECK_THROWS_AS(binary_entropy(2.0), std::domain_error);
}

TEST_CASE("chr2 rate matches the explicit two-outcome form") {
  const ReceptorModel m = builtin("chr2");
  for (double dt : {1e-5, 5e-5, 1e-4}) {
    for (int i = 1; i < 100; ++i) {
      const double p_low = i / 100.0;
      const auto r = mi_rate_discrete(m, InputDistribution::binary(0.0, 1.0, p_low), dt);
      const double ref = chr2_closed_form(p_low, dt);
      CHECK(testutil::rel_diff(r.rate_per_use, ref) <= 1e-12);
      CHECK(r.rate_per_second == doctest::Approx(r.rate_per_use / dt).epsilon(1e-15));
    }
  }
}

TEST_CASE("point-mass input carries no information") {
  for (const char* name : {"chr2", "ach", "cam"}) {
    const ReceptorModel m = builtin(name);
    const auto r = mi_rate_discrete(m, InputDistribution::point_mass(m.x_max), 1e-7);
    CHECK(r.rate_per_use == 0.0);
    CHECK(r.rate_per_second == 0.0);
  }
}

TEST_CASE("insensitive models carry no information") {
  ReceptorModel m = builtin("chr2");
  for (Edge& e : m.edges) e.sensitive = false;
  const auto r = mi_rate_discrete(m, InputDistribution::binary(0.0, 1.0, 0.5), 1e-5);
  CHECK(r.rate_per_use == 0.0);
  CHECK(r.per_edge.empty());
}

TEST_CASE("per-edge table covers the sensitive edge and its diagonal") {
  const auto r = mi_rate_discrete(builtin("chr2"),
                                  InputDistribution::binary(0.0, 1.0, 0.9), 1e-5);
  REQUIRE(r.per_edge.size() == 2);
  CHECK(r.per_edge[0].first == EdgeKey{1, 1});
  CHECK(r.per_edge[1].first == EdgeKey{1, 2});
  double sum = 0.0;
  for (const auto& [key, v] : r.per_edge) sum += v;
  CHECK(sum == doctest::Approx(r.rate_per_use).epsilon(1e-13));
}

TEST_CASE("rate is non-negative on random models") {
  CounterRng rng(11);
  for (int t = 0; t < 30; ++t) {
    const ReceptorModel m = testutil::random_model(rng);
    const auto d = testutil::random_dist(rng);
    const double dt = dt_max(m) * (0.05 + 0.9 * rng.uniform());
    CHECK(mi_rate_discrete(m, d, dt).rate_per_use >= 0.0);
  }
}

TEST_CASE("insensitive rates enter only through the stationary weights") {
  // Doubling q23 changes pi but the closed form tracks it exactly, so the
  // insensitive edge contributes nothing of its own.
  ReceptorModel m = builtin("chr2");
  m.edges[1].base_rate = 100.0;
  const auto d = InputDistribution::binary(0.0, 1.0, 0.8);
  const auto r = mi_rate_discrete(m, d, 1e-5);
  const auto pi = stationary(m, d);
  const double ref =
      pi[0] * (binary_entropy(1e-5 * 5000.0 * d.mean()) -
               0.2 * binary_entropy(1e-5 * 5000.0));
  CHECK(testutil::rel_diff(r.rate_per_use, ref) <= 1e-12);
  REQUIRE(r.per_edge.size() == 2);  // still no insensitive entries
}

TEST_CASE("zero-probability alphabet points are inert") {
  const ReceptorModel m = builtin("chr2");
  const auto a = InputDistribution::binary(0.0, 1.0, 0.75);
  const auto b = InputDistribution({0.0, 0.5, 1.0}, {0.75, 0.0, 0.25});
  const double ra = mi_rate_discrete(m, a, 2e-5).rate_per_use;
  const double rb = mi_rate_discrete(m, b, 2e-5).rate_per_use;
  CHECK(std::abs(ra - rb) <= 1e-14);
}

TEST_CASE("oversize step is rejected") {
  CHECK_THROWS_AS(
      mi_rate_discrete(builtin("chr2"), InputDistribution::binary(0.0, 1.0, 0.5), 1e-2),
      std::domain_error);
}

TEST_CASE("brute force at n = 1 equals the analytic per-step rate") {
  const ReceptorModel m = builtin("chr2");
  const auto d = InputDistribution::binary(0.0, 1.0, 0.99);
  const double dt = 1e-5;
  const double b1 = mi_bruteforce(m, d, dt, 1);
  const double rate = mi_rate_discrete(m, d, dt).rate_per_use;
  CHECK(std::abs(b1 - rate) <= 1e-12);
}

TEST_CASE("telescoped brute force reproduces the analytic rate") {
  const ReceptorModel m = builtin("chr2");
  const auto d = InputDistribution::binary(0.0, 1.0, 0.9);
  const double dt = 2e-5;
  const double rate = mi_rate_discrete(m, d, dt).rate_per_use;
  double prev = mi_bruteforce(m, d, dt, 1);
  for (int n = 2; n <= 4; ++n) {
    const double cur = mi_bruteforce(m, d, dt, n);
    CHECK(std::abs(n * cur - (n - 1) * prev - rate) <= 1e-10);
    prev = cur;
  }
}

TEST_CASE("brute force degenerate and guard cases") {
  const ReceptorModel m = builtin("chr2");
  CHECK(mi_bruteforce(m, InputDistribution::point_mass(1.0), 1e-5, 4) == 0.0);
  CHECK_THROWS(mi_bruteforce(m, InputDistribution::binary(0.0, 1.0, 0.5), 1e-5, 0));
  CHECK_THROWS(mi_bruteforce(m, InputDistribution::binary(0.0, 1.0, 0.5), 1e-5, 9));
}

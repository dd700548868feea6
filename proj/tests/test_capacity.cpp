#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "rxch/capacity.hpp"
#include "rxch/info_limit.hpp"

using namespace rxch;

TEST_CASE("chr2 binary limit capacity") {
  const ReceptorModel m = builtin("chr2");
  const auto r = capacity_binary(m, 0.0, 1.0, RateMode::limit);
  const double bits = r.value / std::log(2.0);
  CHECK(bits > 64.5);
  CHECK(bits < 67.5);
  CHECK(r.argmax_p_low > 0.98);
  CHECK(r.argmax_p_low < 1.0);
  CHECK(r.theorem3_applies);
  // Reported value must equal a fresh evaluation at the argmax.
  CHECK(testutil::rel_diff(r.value, limit_rate(m, r.argmax).rate) <= 1e-10);
}

TEST_CASE("one-point alphabet yields zero") {
  const auto r = capacity_binary(builtin("chr2"), 0.3, 0.3, RateMode::limit);
  CHECK(r.value == 0.0);
  CHECK(r.argmax_p_low == 0.5);
}

TEST_CASE("discrete mode validates the step") {
  CHECK_THROWS_AS(capacity_binary(builtin("chr2"), 0.0, 1.0, RateMode::discrete, 1.0),
                  std::domain_error);
  const auto r = capacity_binary(builtin("chr2"), 0.0, 1.0, RateMode::discrete, 1e-5);
  // The discrete objective dominates the limit for this receptor.
  const auto lim = capacity_binary(builtin("chr2"), 0.0, 1.0, RateMode::limit);
  CHECK(r.value >= lim.value);
}

TEST_CASE("capacity search is deterministic") {
  const ReceptorModel m = builtin("chr2");
  const auto a = capacity_general(m, {0.0, 0.5, 1.0}, RateMode::limit);
  const auto b = capacity_general(m, {0.0, 0.5, 1.0}, RateMode::limit);
  CHECK(a.value == b.value);
  CHECK(a.argmax_p_low == b.argmax_p_low);
  REQUIRE(a.trace.size() == b.trace.size());
  for (std::size_t i = 0; i < a.trace.size(); ++i)
    CHECK(a.trace[i].second == b.trace[i].second);
}

TEST_CASE("single sensitive edge pushes mass to the endpoints") {
  const ReceptorModel m = builtin("chr2");
  const auto general = capacity_general(m, {0.0, 0.5, 1.0}, RateMode::limit);
  REQUIRE(general.argmax.size() == 3);
  CHECK(general.argmax.ps()[1] < 1e-6);
  const auto binary = capacity_binary(m, 0.0, 1.0, RateMode::limit);
  CHECK(testutil::rel_diff(general.value, binary.value) <= 1e-6);
}

TEST_CASE("bind toy model over a three-point alphabet") {
  const ReceptorModel m = testutil::bind_model();
  const auto r = capacity_general(m, {0.0, 2.0, 5.0}, RateMode::limit);
  CHECK(r.theorem3_applies);
  CHECK(r.argmax.ps()[1] < 1e-6);
  const auto binary = capacity_binary(m, 0.0, 5.0, RateMode::limit);
  CHECK(testutil::rel_diff(r.value, binary.value) <= 1e-6);
}

TEST_CASE("insensitive model has zero capacity") {
  ReceptorModel m = builtin("chr2");
  for (Edge& e : m.edges) e.sensitive = false;
  const auto r = capacity_general(m, {0.0, 0.5, 1.0}, RateMode::limit);
  CHECK(r.value == 0.0);
  CHECK(r.theorem3_applies);
}

TEST_CASE("larger alphabets never lose capacity") {
  const ReceptorModel m = builtin("ach");
  const auto small = capacity_general(m, {1e-7, 1e-5}, RateMode::limit);
  const auto large = capacity_general(m, {1e-7, 5e-6, 1e-5}, RateMode::limit);
  CHECK(large.value >= small.value - 1e-9 * std::abs(small.value));
  CHECK_FALSE(small.theorem3_applies);  // three sensitive transitions
}

TEST_CASE("alphabet preconditions") {
  CHECK_THROWS(capacity_general(builtin("chr2"), {}, RateMode::limit));
  CHECK_THROWS(capacity_general(builtin("chr2"), {0.2, 0.2}, RateMode::limit));
  const auto one = capacity_general(builtin("chr2"), {0.4}, RateMode::limit);
  CHECK(one.value == 0.0);
}

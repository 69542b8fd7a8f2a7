#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracle_values.hpp"
#include "polyzeta/series.hpp"

using namespace polyzeta;
namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("partial sums at small radii") {
  CHECK(partial_sum({2, 2}, 0).value == 1.0);
  // k=1 paired term at n=1: -(2/(1-4)) = 2/3, so 1 + 2/3
  CHECK(partial_sum({1, 2}, 1).value == doctest::Approx(5.0 / 3.0).epsilon(1e-15));
  const double s = partial_sum({2, 2}, 1000).value;
  CHECK(s == doctest::Approx(2.4669).epsilon(1e-4));
  CHECK(s < kPi * kPi / 4.0);  // brackets the limit from below
}

TEST_CASE("evaluate_series hits the frozen references") {
  for (const auto& ref : oracle::kSeriesTable) {
    EvalResult r = evaluate_series({ref.k, ref.a}, 1e-10);
    CAPTURE(ref.k);
    CAPTURE(ref.a);
    CHECK(std::fabs(r.value - ref.value) <= 1e-10);
    CHECK(std::fabs(r.value - ref.value) <= r.error_estimate);
    CHECK(r.work >= 1);
  }
}

TEST_CASE("known closed forms") {
  CHECK(std::fabs(evaluate_series({1, 2}, 1e-10).value - kPi / 2) <= 1e-10);
  CHECK(std::fabs(evaluate_series({2, 2}, 1e-10).value - kPi * kPi / 4) <= 1e-10);
  CHECK(std::fabs(evaluate_series({3, 2}, 1e-10).value - std::pow(kPi, 3) / 16) <= 1e-10);
}

TEST_CASE("zeta(2) reconstruction from the even/odd split") {
  CHECK(std::fabs(zeta2_reconstruction(1e-10) - kPi * kPi / 6) <= 1e-10);
  CHECK(std::fabs(zeta2_reconstruction(1e-6) - 1.644934) <= 2e-6);
  // the one-sided odd-denominator sum is the pi^2/8 intermediate
  CHECK(std::fabs(one_sided_series({2, 2}, 1e-10) - kPi * kPi / 8) <= 1e-9);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(evaluate_series({0, 2}, 1e-8), invalid_parameter);
  CHECK_THROWS_AS(evaluate_series({2, 1}, 1e-8), invalid_parameter);
  CHECK_THROWS_AS(evaluate_series({2, 2}, 1e-14), invalid_parameter);
  CHECK_THROWS_AS(partial_sum({2, 2}, -1), invalid_parameter);
}

TEST_CASE("even k: partial sums are nondecreasing and bounded by the limit") {
  for (int a : {2, 3, 4}) {
    EvalResult lim = evaluate_series({2, a}, 1e-11);
    double prev = 0.0;
    for (long long N : {0LL, 1LL, 2LL, 5LL, 10LL, 100LL, 1000LL}) {
      const double v = partial_sum({2, a}, N).value;
      CHECK(v >= prev);
      CHECK(v <= lim.value + lim.error_estimate);
      prev = v;
    }
  }
}

TEST_CASE("odd k: consecutive paired partial sums bracket the limit") {
  for (int a : {2, 3}) {
    const double lim = evaluate_series({1, a}, 1e-11).value;
    for (long long N = 1; N <= 64; N *= 2) {
      const double lo = partial_sum({1, a}, N).value;
      const double hi = partial_sum({1, a}, N + 1).value;
      CHECK(((lo <= lim && lim <= hi) || (hi <= lim && lim <= lo)));
    }
  }
}

TEST_CASE("tolerance refinement is consistent") {
  for (const auto& ref : oracle::kSeriesTable) {
    const double tol = 1e-8;
    const double v1 = evaluate_series({ref.k, ref.a}, tol).value;
    const double v2 = evaluate_series({ref.k, ref.a}, tol / 10).value;
    CHECK(std::fabs(v1 - v2) <= tol);
  }
}

TEST_CASE("a=2 symmetry: two-sided sum is twice the one-sided sum") {
  for (int k = 1; k <= 5; ++k) {
    const double two = evaluate_series({k, 2}, 1e-10).value;
    const double one = one_sided_series({k, 2}, 1e-10);
    CHECK(std::fabs(two - 2.0 * one) <= 5e-10);
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "oracle_values.hpp"
#include "polyzeta/monte_carlo.hpp"
#include "polyzeta/quadrature.hpp"
#include "polyzeta/special_functions.hpp"

using namespace polyzeta;
namespace {
constexpr double kPi = std::numbers::pi;
const double kInf = std::numeric_limits<double>::infinity();
const QuadConfig kTight{1e-10, 1e-10, 2000};
const QuadConfig kNested{1e-7, 1e-7, 2000};
}  // namespace

TEST_CASE("integrate_1d basics") {
  auto one = integrate_1d([](double) { return 1.0; }, 0.0, 1.0, kTight);
  CHECK(one.value == 1.0);
  CHECK(one.converged);

  auto atan_tail = integrate_1d([](double x) { return 1.0 / (1.0 + x * x); },
                                0.0, kInf, kTight);
  CHECK(std::fabs(atan_tail.value - kPi / 2) <= 1e-10);

  auto dens = integrate_1d([](double t) { return density(Dist::xi, 3, t); },
                           0.0, kInf, kTight);
  CHECK(std::fabs(dens.value - 1.0) <= 1e-10);

  CHECK(integrate_1d([](double) { return 1.0; }, 2.0, 2.0, kTight).value == 0.0);
  CHECK_THROWS_AS(integrate_1d([](double) { return 1.0; }, 1.0, 0.0, kTight),
                  invalid_parameter);
}

TEST_CASE("integrate_1d reports nonconvergence with its best estimate") {
  QuadConfig starved{1e-12, 1e-12, 1};
  auto r = integrate_1d([](double x) { return std::sqrt(x); }, 0.0, 1.0, starved);
  CHECK_FALSE(r.converged);
  CHECK(std::fabs(r.value - 2.0 / 3.0) <= 1e-2);
}

TEST_CASE("J at k=2, a=2 has the closed form 1/8") {
  AdmissibleTuple t{2, {1}, {1}};
  CHECK(std::fabs(j_integral({2, 2}, t, kTight) - 0.125) <= 1e-9);
  CHECK(std::fabs(k_integral({2, 2}, t, kTight) - 0.125) <= 1e-9);
}

TEST_CASE("at a=2 the Theta and Xi contributions coincide") {
  for (int k : {2, 3, 4}) {
    for (int n = 1; n <= k / 2; ++n) {
      for (const auto& t : enumerate_admissible_tuples(k, n)) {
        const double j = j_integral({k, 2}, t, kNested);
        const double kk = k_integral({k, 2}, t, kNested);
        CHECK(std::fabs(j - kk) <= 1e-6);
      }
    }
  }
}

TEST_CASE("tuple contributions are probabilities") {
  for (int a : {2, 3, 4}) {
    for (const auto& t : enumerate_admissible_tuples(4, 2)) {
      const double j = j_integral({4, a}, t, kNested);
      const double kk = k_integral({4, a}, t, kNested);
      CHECK(j >= 0.0);
      CHECK(j <= 1.0);
      CHECK(kk >= 0.0);
      CHECK(kk <= 1.0);
    }
  }
}

TEST_CASE("cyclic relabeling leaves J unchanged") {
  // (1,3) -> shift by 1 -> (2,4) within k=4; and the k=5 singles
  AdmissibleTuple t13{4, {1, 3}, compute_alphas(4, {1, 3})};
  AdmissibleTuple t24{4, {2, 4}, compute_alphas(4, {2, 4})};
  CHECK(std::fabs(j_integral({4, 3}, t13, kNested) -
                  j_integral({4, 3}, t24, kNested)) <= 1e-7);
  AdmissibleTuple s1{2, {1}, {1}};
  AdmissibleTuple s2{2, {2}, {1}};
  CHECK(std::fabs(j_integral({2, 3}, s1, kTight) -
                  j_integral({2, 3}, s2, kTight)) <= 1e-9);
}

TEST_CASE("k=2 completeness: the two events partition the space") {
  for (int a : {2, 3, 4, 6}) {
    const double psi1 = cdf(Dist::xi, a, 1.0);
    const double phi1 = cdf(Dist::theta, a, 1.0);
    double total = psi1 * psi1 + phi1 * phi1;
    for (const auto& t : enumerate_admissible_tuples(2, 1)) {
      total += j_integral({2, a}, t, kTight) + k_integral({2, a}, t, kTight);
    }
    CHECK(std::fabs(total - 1.0) <= 1e-8);
  }
}

TEST_CASE("J for k=4, a=2 tuple (1,3) matches a Monte Carlo event estimate") {
  AdmissibleTuple t{4, {1, 3}, {2, 0}};
  const double j = j_integral({4, 2}, t, kNested);
  // P(Xi1 >= Xi3 >= 1, Xi2 < 1/Xi1, Xi4 < 1/Xi1)
  const long long n = 200000;
  long long hits = 0;
  for (long long i = 0; i < n; ++i) {
    double v[4];
    for (int c = 0; c < 4; ++c) {
      v[c] = sample_xi(2, counter_uniform(1234, 77, static_cast<std::uint64_t>(i) * 4 + c));
    }
    if (v[0] >= v[2] && v[2] >= 1.0 && v[1] < 1.0 / v[0] && v[3] < 1.0 / v[0]) ++hits;
  }
  const double p = static_cast<double>(hits) / n;
  const double se = std::sqrt(p * (1.0 - p) / n);
  CHECK(std::fabs(j - p) <= 4.0 * se);
}

TEST_CASE("direct cube quadrature") {
  auto r1 = direct_I({1, 2}, kTight);
  CHECK(std::fabs(r1.value - kPi / 2) <= 1e-9);

  auto r2 = direct_I({2, 2}, QuadConfig{1e-8, 1e-8, 2000});
  CHECK(std::fabs(r2.value - kPi * kPi / 4) <= 1e-6);

  auto r3 = direct_I({3, 3}, QuadConfig{1e-8, 1e-8, 2000});
  CHECK(std::fabs(r3.value - oracle::series_value(3, 3)) <= 1e-6);

  CHECK_THROWS_AS(direct_I({4, 2}, kTight), invalid_parameter);
}

TEST_CASE("assembled formula at hand-checked cases") {
  {
    auto b = assemble_formula({1, 5}, kTight);
    CHECK(b.contributions.empty());
    CHECK(std::fabs(b.total_probability - 1.0) <= 1e-14);
    CHECK(std::fabs(b.assembled_S - (kPi / 5) / std::sin(kPi / 5)) <= 1e-13);
  }
  {
    auto b = assemble_formula({2, 2}, kTight);
    CHECK(std::fabs(b.easy_xi - 0.25) <= 1e-14);
    CHECK(std::fabs(b.easy_theta - 0.25) <= 1e-14);
    REQUIRE(b.contributions.size() == 2);
    for (const auto& c : b.contributions) {
      CHECK(std::fabs(c.j - 0.125) <= 1e-9);
      CHECK(std::fabs(c.k - 0.125) <= 1e-9);
    }
    CHECK(std::fabs(b.total_probability - 1.0) <= 1e-8);
    CHECK(std::fabs(b.assembled_S - kPi * kPi / 4) <= 1e-8);
  }
  {
    auto b = assemble_formula({4, 4}, kNested);
    CHECK(std::fabs(b.assembled_S - oracle::series_value(4, 4)) <= 1e-7);
    CHECK(b.total_probability > 0.0);
    CHECK(b.total_probability <= 2.0);
  }
  CHECK_THROWS_AS(assemble_formula({7, 2}, kNested), invalid_parameter);
}

TEST_CASE("the uncorrected per-variable constant breaks the assembly") {
  auto b = assemble_formula({2, 2}, kTight, ConstantsMode::printed);
  CHECK(std::fabs(b.assembled_S - 4.2777346449) <= 1e-8);
  CHECK(std::fabs(b.assembled_S - oracle::series_value(2, 2)) > 0.5);
}

TEST_CASE("formula agrees with the series across the matrix") {
  for (int k = 1; k <= 4; ++k) {
    for (int a : {2, 3, 4}) {
      const QuadConfig cfg = (k >= 2) ? kNested : kTight;
      auto b = assemble_formula({k, a}, cfg);
      CAPTURE(k);
      CAPTURE(a);
      const double tol = (k == 4) ? 1e-5 : 1e-6;
      CHECK(std::fabs(b.assembled_S - oracle::series_value(k, a)) <= tol);
    }
  }
}

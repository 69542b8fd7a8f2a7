#include "polyzeta/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "polyzeta/quadrature.hpp"

namespace polyzeta {

namespace {
constexpr double kPi = std::numbers::pi;

double pow_int(double x, int e) {
  double r = 1.0, b = x;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}
}  // namespace

double density(Dist d, int a, double t) {
  if (a < 2) throw invalid_parameter("density: a must be >= 2");
  if (t < 0) throw invalid_parameter("density: t must be >= 0");
  const double c = normalization_constant(a);
  const double denom = 1.0 + pow_int(t, a);
  if (d == Dist::xi) return c / denom;
  return c * pow_int(t, a - 2) / denom;  // t^0 == 1 at a == 2
}

double antiderivative_G(int a, double x) {
  if (a < 2) throw invalid_parameter("antiderivative_G: a must be >= 2");
  if (x < 0) throw invalid_parameter("antiderivative_G: x must be >= 0");
  // 1/(1+x^a) decomposes over the roots of x^a = -1: the real root -1 when a
  // is odd, plus conjugate pairs exp(+-i(2j+1)pi/a). Each pair integrates to
  // (2/a)(-P_j cos(th) + Q_j sin(th)); the log-growth coefficients cancel.
  double raw = (a % 2 == 1) ? std::log1p(x) / a : 0.0;
  double limit = 0.0;  // value of raw at x -> inf
  const int pairs = (a % 2 == 0) ? a / 2 : (a - 1) / 2;
  for (int j = 0; j < pairs; ++j) {
    const double th = (2 * j + 1) * kPi / a;
    const double ct = std::cos(th), st = std::sin(th);
    const double P = 0.5 * std::log(x * x - 2.0 * x * ct + 1.0);
    const double Q = std::atan((x - ct) / st);
    raw += (2.0 / a) * (-P * ct + Q * st);
    limit += (kPi / a) * st;  // Q -> pi/2, P log-parts cancel against each other
  }
  return raw - limit;
}

double cdf(Dist d, int a, double t) {
  if (a < 2) throw invalid_parameter("cdf: a must be >= 2");
  if (t < 0) throw invalid_parameter("cdf: t must be >= 0");
  if (d == Dist::xi) {
    if (t == 0.0) return 0.0;
    // c_a * (pi/a)csc(pi/a) = 1, so the constant of integration is exactly 1
    const double u = 1.0 + normalization_constant(a) * antiderivative_G(a, t);
    return std::clamp(u, 0.0, 1.0);
  }
  if (t == 0.0) return 0.0;
  return std::clamp(1.0 - cdf(Dist::xi, a, 1.0 / t), 0.0, 1.0);
}

double inverse_cdf_xi(int a, double u) {
  if (a < 2) throw invalid_parameter("inverse_cdf_xi: a must be >= 2");
  if (!(u > 0.0 && u < 1.0)) {
    throw invalid_parameter("inverse_cdf_xi: u must lie in (0,1)");
  }
  double lo = 0.0, hi = 1.0;
  int expansions = 0;
  while (cdf(Dist::xi, a, hi) < u) {
    lo = hi;
    hi *= 2.0;
    if (++expansions > 1100) {
      throw nonconvergence("inverse_cdf_xi: bracket expansion failed", hi, 1.0);
    }
  }
  double t = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    const double f = cdf(Dist::xi, a, t) - u;
    if (std::fabs(f) <= 1e-12) return t;
    if (f > 0) hi = t; else lo = t;
    const double deriv = density(Dist::xi, a, t);
    double next = t - f / deriv;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    t = next;
  }
  throw nonconvergence("inverse_cdf_xi: no convergence in 200 iterations", t, 1e-12);
}

double verify_cdf_numeric(int a, std::span<const double> grid,
                          const QuadConfig& cfg) {
  double worst = 0.0;
  for (double t : grid) {
    if (t < 0) throw invalid_parameter("verify_cdf_numeric: grid points must be >= 0");
    if (t == 0.0) continue;  // both sides vanish
    for (Dist d : {Dist::xi, Dist::theta}) {
      auto f = [&](double x) { return density(d, a, x); };
      IntegrationResult q = integrate_1d(f, 0.0, t, cfg);
      if (!q.converged) {
        throw nonconvergence("verify_cdf_numeric: quadrature failed", q.value, q.error);
      }
      worst = std::max(worst, std::fabs(cdf(d, a, t) - q.value));
    }
  }
  return worst;
}

}  // namespace polyzeta

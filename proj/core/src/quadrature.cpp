#include "polyzeta/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <string>

#include "polyzeta/special_functions.hpp"

namespace polyzeta {

namespace {

constexpr double kPi = std::numbers::pi;

// 15-point Kronrod extension of 7-point Gauss (QUADPACK constants).
constexpr double kXgk[8] = {
    0.9914553711208126392068547, 0.9491079123427585245261897,
    0.8648644233597690727897128, 0.7415311855993944398638648,
    0.5860872354676911302941448, 0.4058451513773971669066064,
    0.2077849550078984676006894, 0.0};
constexpr double kWgk[8] = {
    0.0229353220105292249637320, 0.0630920926299785532907007,
    0.1047900103222501838398763, 0.1406532597155259187451896,
    0.1690047266392679028265834, 0.1903505780647854099132564,
    0.2044329400752988924141620, 0.2094821410847278280129992};
constexpr double kWg[4] = {
    0.1294849661688696932706114, 0.2797053914892766679014678,
    0.3818300505051189449503698, 0.4179591836734693877551020};

struct Segment {
  double a, b;
  double value, error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double fv[15];
  for (int i = 0; i < 7; ++i) {
    fv[i] = f(c - h * kXgk[i]);
    fv[14 - i] = f(c + h * kXgk[i]);
  }
  fv[7] = f(c);
  double resk = kWgk[7] * fv[7];
  double resg = kWg[3] * fv[7];
  for (int i = 0; i < 7; ++i) resk += kWgk[i] * (fv[i] + fv[14 - i]);
  for (int i = 0; i < 3; ++i) resg += kWg[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);
  resk *= h;
  resg *= h;
  // QUADPACK-style rescaled error indicator
  const double mean = resk / (b - a);
  double resasc = kWgk[7] * std::fabs(fv[7] - mean);
  for (int i = 0; i < 7; ++i) {
    resasc += kWgk[i] * (std::fabs(fv[i] - mean) + std::fabs(fv[14 - i] - mean));
  }
  resasc *= std::fabs(h);
  double err = std::fabs(resk - resg);
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  return {a, b, resk, err};
}

IntegrationResult adapt(const std::function<double(double)>& f, double lo,
                        double hi, const QuadConfig& cfg) {
  std::priority_queue<Segment> heap;
  heap.push(gk15(f, lo, hi));
  long long evals = 15;
  int splits = 0;
  double value = heap.top().value;
  double error = heap.top().error;
  while (error > std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(value)) &&
         splits < cfg.max_subdivisions) {
    Segment worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    Segment left = gk15(f, worst.a, mid);
    Segment right = gk15(f, mid, worst.b);
    evals += 30;
    ++splits;
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    if (error < 0) error = 0;
  }
  // re-sum from segments to undo drift in the incremental updates
  value = 0.0;
  error = 0.0;
  while (!heap.empty()) {
    value += heap.top().value;
    error += heap.top().error;
    heap.pop();
  }
  const bool ok = error <= std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(value));
  return {value, error, evals, ok};
}

}  // namespace

IntegrationResult integrate_1d(const std::function<double(double)>& f,
                               double lo, double hi, const QuadConfig& cfg) {
  if (!(cfg.abs_tol > 0) || !(cfg.rel_tol > 0)) {
    throw invalid_parameter("integrate_1d: tolerances must be positive");
  }
  if (std::isinf(hi)) {
    auto g = [&f, lo](double s) {
      const double om = 1.0 - s;
      return f(lo + s / om) / (om * om);
    };
    return adapt(g, 0.0, 1.0, cfg);
  }
  if (!(lo < hi)) {
    if (lo == hi) return {0.0, 0.0, 0, true};
    throw invalid_parameter("integrate_1d: lo must be <= hi");
  }
  return adapt(f, lo, hi, cfg);
}

namespace {

double pow_int(double x, int e) {
  double r = 1.0, b = x;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

QuadConfig inner_cfg(const QuadConfig& cfg, int depth) {
  QuadConfig c = cfg;
  for (int i = 0; i < depth; ++i) {
    c.abs_tol /= 20.0;
    c.rel_tol /= 5.0;
  }
  c.abs_tol = std::max(c.abs_tol, 1e-13);
  c.rel_tol = std::max(c.rel_tol, 1e-13);
  return c;
}

struct NestedResult {
  double value;
  double error;
  long long evals;
  bool converged;
};

// Integral over the ordered region 1 <= xi_n <= ... <= xi_1 of
// prod_j weight(alpha_j, xi_j), innermost variables integrated first.
NestedResult ordered_region(const SeriesSpec& spec, const AdmissibleTuple& t,
                            Dist kind, const QuadConfig& cfg) {
  const int n = t.n();
  const int a = spec.a;
  auto weight = [&](int level, double xi) {
    const double cdf_pow = pow_int(cdf(kind, a, 1.0 / xi), t.alphas[level]);
    if (kind == Dist::theta) {
      // xi^(a-2)/(1+xi^a) written as 1/(xi^(2-a) + xi^2) so that neither
      // factor overflows on the semi-infinite tail (xi >= 1 here)
      return cdf_pow / (1.0 / pow_int(xi, a - 2) + xi * xi);
    }
    return cdf_pow / (1.0 + pow_int(xi, a));
  };
  long long evals = 0;
  bool inner_ok = true;
  auto rec = [&](auto&& self, int level, double upper) -> IntegrationResult {
    auto f = [&](double xi) {
      double w = weight(level, xi);
      if (level + 1 < n) w *= self(self, level + 1, xi).value;
      return w;
    };
    const double hi = std::isinf(upper) ? std::numeric_limits<double>::infinity() : upper;
    IntegrationResult r = integrate_1d(f, 1.0, hi, inner_cfg(cfg, level));
    evals += r.evaluations;
    if (level > 0 && !r.converged) inner_ok = false;
    return r;
  };
  IntegrationResult outer = rec(rec, 0, std::numeric_limits<double>::infinity());
  // inner quadrature bias is not visible to the outer error indicator; fold
  // the inner tolerances in explicitly
  double err = outer.error;
  for (int level = 1; level < n; ++level) err += inner_cfg(cfg, level).abs_tol;
  return {outer.value, err, evals, outer.converged && inner_ok};
}

NestedResult tuple_contribution(const SeriesSpec& spec, const AdmissibleTuple& t,
                                Dist kind, const QuadConfig& cfg,
                                ConstantsMode mode) {
  validate_spec(spec);
  if (t.k != spec.k || t.n() < 1 || !cyclically_nonconsecutive(spec.k, t.r)) {
    throw invalid_parameter("tuple does not match the series spec");
  }
  const double c = (mode == ConstantsMode::density)
                       ? normalization_constant(spec.a)
                       : (kPi / spec.a) * std::sin(kPi / spec.a);
  const double easy = pow_int(cdf(kind, spec.a, 1.0), t.easy_exponent());
  NestedResult r = ordered_region(spec, t, kind, cfg);
  const double scale = easy * pow_int(c, t.n());
  return {scale * r.value, scale * r.error, r.evals, r.converged};
}

std::string tuple_str(const AdmissibleTuple& t) {
  std::string s = "(";
  for (size_t i = 0; i < t.r.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t.r[i]);
  }
  return s + ")";
}

}  // namespace

double j_integral(const SeriesSpec& spec, const AdmissibleTuple& t,
                  const QuadConfig& cfg, ConstantsMode mode) {
  NestedResult r = tuple_contribution(spec, t, Dist::xi, cfg, mode);
  if (!r.converged) {
    throw nonconvergence("j_integral: quadrature failed for tuple " + tuple_str(t),
                         r.value, r.error);
  }
  return r.value;
}

double k_integral(const SeriesSpec& spec, const AdmissibleTuple& t,
                  const QuadConfig& cfg, ConstantsMode mode) {
  NestedResult r = tuple_contribution(spec, t, Dist::theta, cfg, mode);
  if (!r.converged) {
    throw nonconvergence("k_integral: quadrature failed for tuple " + tuple_str(t),
                         r.value, r.error);
  }
  return r.value;
}

EvalResult direct_I(const SeriesSpec& spec, const QuadConfig& cfg) {
  validate_spec(spec);
  if (spec.k > 3) {
    throw invalid_parameter("direct_I: only k <= 3 is supported");
  }
  const int k = spec.k;
  const int a = spec.a;
  const double sign = (k % 2 == 0) ? 1.0 : -1.0;
  long long evals = 0;
  bool inner_ok = true;
  // integrand after x_i = u_i^a: (1 + prod u^(a-2)) / (1 - (-1)^k prod u^a)
  auto rec = [&](auto&& self, int level, double partial) -> IntegrationResult {
    auto f = [&](double u) -> double {
      const double p = partial * u;
      if (level + 1 < k) return self(self, level + 1, p).value;
      ++evals;
      return (1.0 + pow_int(p, a - 2)) / (1.0 - sign * pow_int(p, a));
    };
    IntegrationResult r = integrate_1d(f, 0.0, 1.0, inner_cfg(cfg, level));
    if (level > 0 && !r.converged) inner_ok = false;
    return r;
  };
  IntegrationResult outer = rec(rec, 0, 1.0);
  double err = outer.error;
  for (int level = 1; level < k; ++level) err += inner_cfg(cfg, level).abs_tol;
  if (!outer.converged) {
    throw nonconvergence("direct_I: outer quadrature did not converge",
                         outer.value, err);
  }
  return {outer.value, err, Method::direct_quad, std::max(evals, 1LL)};
}

ProbabilityBreakdown assemble_formula(const SeriesSpec& spec,
                                      const QuadConfig& cfg,
                                      ConstantsMode mode) {
  validate_spec(spec);
  if (spec.k > 6) {
    throw invalid_parameter("assemble_formula: only k <= 6 is supported");
  }
  const int k = spec.k;
  const int a = spec.a;
  ProbabilityBreakdown b;
  b.easy_xi = pow_int(cdf(Dist::xi, a, 1.0), k);
  b.easy_theta = pow_int(cdf(Dist::theta, a, 1.0), k);
  double total = b.easy_xi + b.easy_theta;
  double err = 8e-16 * k;
  for (int n = 1; n <= k / 2; ++n) {
    for (const AdmissibleTuple& t : enumerate_admissible_tuples(k, n)) {
      NestedResult j = tuple_contribution(spec, t, Dist::xi, cfg, mode);
      NestedResult kk = tuple_contribution(spec, t, Dist::theta, cfg, mode);
      if (!j.converged || !kk.converged) {
        throw nonconvergence("assemble_formula: tuple " + tuple_str(t) +
                                 " did not converge",
                             j.value + kk.value, j.error + kk.error);
      }
      b.contributions.push_back({t, j.value, kk.value});
      total += j.value + kk.value;
      err += j.error + kk.error;
    }
  }
  b.total_probability = total;
  const double scale = pow_int((kPi / a) / std::sin(kPi / a), k);
  b.assembled_S = scale * total;
  b.error_estimate = scale * err;
  return b;
}

}  // namespace polyzeta

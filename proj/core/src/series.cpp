#include "polyzeta/series.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>

namespace polyzeta {

namespace {

// Compensated (Kahan) accumulator; sums may run to 1e7 terms.
struct KahanSum {
  double s = 0.0, c = 0.0;
  void add(double x) {
    double y = x - c;
    double t = s + y;
    c = (t - s) - y;
    s = t;
  }
  double value() const { return s; }
};

double ipow(double x, int k) {
  double r = 1.0, b = x;
  int e = k;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

// Paired term for odd k, n >= 1: (-1)^n [ (an+1)^-k + (1-an)^-k ].
// For k = 1 this is (-1)^n * 2/(1 - a^2 n^2).
double paired_term_odd(const SeriesSpec& spec, long long n) {
  const double an = static_cast<double>(spec.a) * static_cast<double>(n);
  double mag;
  if (spec.k == 1) {
    mag = 2.0 / (1.0 - an * an);  // negative for n >= 1
  } else {
    mag = 1.0 / ipow(an + 1.0, spec.k) - 1.0 / ipow(an - 1.0, spec.k);
  }
  return (n % 2 != 0) ? -mag : mag;
}

double paired_term_bound_odd(const SeriesSpec& spec, long long n) {
  const double an = static_cast<double>(spec.a) * static_cast<double>(n);
  if (spec.k == 1) return 2.0 / (an * an - 1.0);
  // mean value theorem on t^-k over [an-1, an+1]
  return 2.0 * spec.k / ipow(an - 1.0, spec.k + 1);
}

// Midpoint-rule tail correction for even k: the two one-sided tails
// sum_{n>N} (an+1)^-k and sum_{n>N} (an-1)^-k, each approximated by the
// integral from N+1/2 with a rigorous second-derivative error bound.
struct TailCorrection {
  double value;
  double bound;
};

TailCorrection even_tail(const SeriesSpec& spec, long long N) {
  const double a = spec.a;
  const int k = spec.k;
  const double M = static_cast<double>(N) + 0.5;
  const double plus = 1.0 / (a * (k - 1) * ipow(a * M + 1.0, k - 1));
  const double minus = 1.0 / (a * (k - 1) * ipow(a * M - 1.0, k - 1));
  // midpoint-rule error over the tail cells, bounded by integrating the
  // second derivative from N-1/2; factor 2 on top for slack
  const double aN = a * (static_cast<double>(N) - 0.5);
  const double bound = 2.0 * (k * a / 24.0) *
                       (1.0 / ipow(aN + 1.0, k + 1) + 1.0 / ipow(aN - 1.0, k + 1));
  return {plus + minus, bound};
}

}  // namespace

PartialSum partial_sum(const SeriesSpec& spec, long long N) {
  validate_spec(spec);
  if (N < 0) throw invalid_parameter("partial_sum: N must be >= 0");
  KahanSum acc;
  if (spec.k == 1) {
    for (long long n = N; n >= 1; --n) acc.add(paired_term_odd(spec, n));
  } else if (spec.k % 2 == 0) {
    for (long long n = N; n >= 1; --n) {
      const double an = static_cast<double>(spec.a) * static_cast<double>(n);
      acc.add(1.0 / ipow(an + 1.0, spec.k) + 1.0 / ipow(an - 1.0, spec.k));
    }
  } else {
    for (long long n = N; n >= 1; --n) acc.add(paired_term_odd(spec, n));
  }
  acc.add(1.0);  // n = 0
  return {N, acc.value()};
}

EvalResult evaluate_series(const SeriesSpec& spec, double tol) {
  validate_spec(spec);
  if (!(tol >= 1e-13)) {
    throw invalid_parameter("evaluate_series: tol must be >= 1e-13");
  }
  constexpr long long kMaxRadius = 1000000000LL;

  long long N = 8;
  if (spec.k % 2 == 1) {
    // alternating paired series: tail <= first omitted paired term
    while (paired_term_bound_odd(spec, N + 1) > tol / 2) {
      N *= 2;
      if (N > kMaxRadius) {
        PartialSum best = partial_sum(spec, kMaxRadius / 1024);
        throw nonconvergence("evaluate_series: required radius exceeds 1e9",
                             best.value, tol);
      }
    }
    PartialSum ps = partial_sum(spec, N);
    const double bound = paired_term_bound_odd(spec, N + 1);
    const double fp = 4e-16 * (std::fabs(ps.value) + 1.0);
    return {ps.value, bound + fp, Method::series, 2 * N + 1};
  }

  // even k: modest radius plus midpoint tail correction
  while (even_tail(spec, N).bound > tol / 2) {
    N *= 2;
    if (N > kMaxRadius) {
      PartialSum best = partial_sum(spec, kMaxRadius / 1024);
      throw nonconvergence("evaluate_series: required radius exceeds 1e9",
                           best.value, tol);
    }
  }
  PartialSum ps = partial_sum(spec, N);
  TailCorrection tail = even_tail(spec, N);
  const double value = ps.value + tail.value;
  const double fp = 4e-16 * (std::fabs(value) + 1.0);
  return {value, tail.bound + fp, Method::series, 2 * N + 1};
}

double one_sided_series(const SeriesSpec& spec, double tol) {
  validate_spec(spec);
  if (!(tol >= 1e-13)) {
    throw invalid_parameter("one_sided_series: tol must be >= 1e-13");
  }
  const double a = spec.a;
  const int k = spec.k;
  if (k % 2 == 1) {
    long long N = 8;
    while (1.0 / ipow(a * (N + 1) + 1.0, k) > tol / 2) N *= 2;
    KahanSum acc;
    for (long long n = N; n >= 1; --n) {
      double t = 1.0 / ipow(a * n + 1.0, k);
      acc.add((n % 2 != 0) ? -t : t);
    }
    acc.add(1.0);
    return acc.value();
  }
  long long N = 8;
  auto bound = [&](long long n) {
    return (k * a / 24.0) / ipow(a * static_cast<double>(n) + 1.0, k + 1);
  };
  while (bound(N) > tol / 2) N *= 2;
  KahanSum acc;
  for (long long n = N; n >= 1; --n) acc.add(1.0 / ipow(a * n + 1.0, k));
  acc.add(1.0);
  const double M = static_cast<double>(N) + 0.5;
  return acc.value() + 1.0 / (a * (k - 1) * ipow(a * M + 1.0, k - 1));
}

double zeta2_reconstruction(double tol) {
  if (!(tol >= 1e-12)) {
    throw invalid_parameter("zeta2_reconstruction: tol must be >= 1e-12");
  }
  // zeta(2) = (4/3) * sum_{n>=0} 1/(2n+1)^2, and the odd-denominator sum is
  // half the two-sided S(2,2).
  EvalResult s22 = evaluate_series({2, 2}, tol / 2);
  return (4.0 / 3.0) * (s22.value / 2.0);
}

}  // namespace polyzeta

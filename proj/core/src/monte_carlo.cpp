#include "polyzeta/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>

#include "polyzeta/change_of_variables.hpp"

namespace polyzeta {

namespace {

inline std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 33;
  z *= 0xff51afd7ed558ccdULL;
  z ^= z >> 33;
  z *= 0xc4ceb9fe1a85ec53ULL;
  z ^= z >> 33;
  return z;
}

constexpr std::uint64_t kXiSalt = 0;
constexpr std::uint64_t kThetaSalt = 1;

struct StreamRange {
  long long first, count;
};

StreamRange stream_range(long long samples, int streams, int s) {
  const long long q = samples / streams, r = samples % streams;
  const long long first = s * q + std::min<long long>(s, r);
  return {first, q + (s < r ? 1 : 0)};
}

McEstimate bernoulli_estimate(long long successes, long long n,
                              std::uint64_t seed) {
  const double m = static_cast<double>(successes) / n;
  double se = 0.0;
  if (n > 1) {
    const double var = m * (1.0 - m) * n / (n - 1.0);
    se = std::sqrt(var / n);
  }
  return {m, se, n, seed};
}

}  // namespace

double counter_uniform(std::uint64_t seed, std::uint64_t stream,
                       std::uint64_t counter) {
  std::uint64_t h = mix64(seed ^ 0x9e3779b97f4a7c15ULL);
  h = mix64(h ^ (stream * 0xbf58476d1ce4e5b9ULL));
  h = mix64(h ^ (counter * 0x94d049bb133111ebULL));
  return (static_cast<double>(h >> 11) + 0.5) * 0x1.0p-53;
}

double sample_xi(int a, double u) { return inverse_cdf_xi(a, u); }

double sample_theta(int a, double u) {
  if (!(u > 0.0 && u < 1.0)) {
    throw invalid_parameter("sample_theta: u must lie in (0,1)");
  }
  double v = 1.0 - u;
  if (v >= 1.0) v = 1.0 - 0x1.0p-53;  // u below one ulp of 0
  return 1.0 / sample_xi(a, v);
}

McEstimate estimate_cyclic_probability(Dist kind, int k, int a,
                                       const McConfig& cfg) {
  if (k < 1) throw invalid_parameter("estimate_cyclic_probability: k must be >= 1");
  if (a < 2) throw invalid_parameter("estimate_cyclic_probability: a must be >= 2");
  if (cfg.samples < 1) throw invalid_parameter("McConfig: samples must be >= 1");
  if (cfg.streams < 1) throw invalid_parameter("McConfig: streams must be >= 1");
  const std::uint64_t salt = (kind == Dist::xi) ? kXiSalt : kThetaSalt;

  // Draws are a pure function of (seed, salt, global trial index), so the
  // stream/thread split is free to change without changing the estimate.
  auto run_trials = [&](long long first, long long count) -> long long {
    long long successes = 0;
    std::vector<double> v(k);
    for (long long t = first; t < first + count; ++t) {
      for (int i = 0; i < k; ++i) {
        const double u = counter_uniform(
            cfg.seed, salt, static_cast<std::uint64_t>(t) * k + i);
        v[i] = (kind == Dist::xi) ? sample_xi(a, u) : sample_theta(a, u);
      }
      bool ok = true;
      for (int i = 0; i < k; ++i) {
        if (!(v[i] * v[(i + 1) % k] < 1.0)) { ok = false; break; }
      }
      if (ok) ++successes;
    }
    return successes;
  };

  long long successes = 0;
  if (cfg.threads <= 1 || cfg.streams <= 1) {
    for (int s = 0; s < cfg.streams; ++s) {
      StreamRange r = stream_range(cfg.samples, cfg.streams, s);
      successes += run_trials(r.first, r.count);
    }
  } else {
    std::vector<std::future<long long>> futs;
    futs.reserve(cfg.streams);
    for (int s = 0; s < cfg.streams; ++s) {
      StreamRange r = stream_range(cfg.samples, cfg.streams, s);
      futs.push_back(std::async(std::launch::async, run_trials, r.first, r.count));
    }
    for (auto& f : futs) successes += f.get();  // ordered reduction
  }
  return bernoulli_estimate(successes, cfg.samples, cfg.seed);
}

McEstimate estimate_S(const SeriesSpec& spec, const McConfig& cfg) {
  validate_spec(spec);
  const McEstimate pxi = estimate_cyclic_probability(Dist::xi, spec.k, spec.a, cfg);
  const McEstimate pth = estimate_cyclic_probability(Dist::theta, spec.k, spec.a, cfg);
  const double pi = std::numbers::pi;
  double scale = 1.0;
  for (int i = 0; i < spec.k; ++i) scale *= (pi / spec.a) / std::sin(pi / spec.a);
  const double se = scale * std::hypot(pxi.std_error, pth.std_error);
  return {scale * (pxi.mean + pth.mean), se, cfg.samples, cfg.seed};
}

std::vector<double> random_polytope_point(int k, int a, std::uint64_t seed,
                                          std::uint64_t index) {
  if (k < 1) throw invalid_parameter("random_polytope_point: k must be >= 1");
  std::vector<double> xi(k);
  const std::uint64_t salt = 0x706f6c7974ULL ^ mix64(index);
  for (std::uint64_t attempt = 0; attempt < 1000000; ++attempt) {
    for (int i = 0; i < k; ++i) {
      xi[i] = sample_xi(a, counter_uniform(seed, salt, attempt * k + i));
    }
    if (in_polytope(xi)) return xi;
  }
  throw nonconvergence("random_polytope_point: rejection cap hit", 0.0, 0.0);
}

}  // namespace polyzeta

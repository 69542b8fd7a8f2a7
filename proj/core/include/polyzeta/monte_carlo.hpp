#ifndef POLYZETA_MONTE_CARLO_HPP
#define POLYZETA_MONTE_CARLO_HPP

#include <cstdint>
#include <vector>

#include "polyzeta/special_functions.hpp"
#include "polyzeta/types.hpp"

namespace polyzeta {

struct McConfig {
  std::uint64_t seed = 0;
  long long samples = 1000000;
  int streams = 1;  // independent substreams; partitions the sample range
  int threads = 1;  // evaluation parallelism; never affects the result
};

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  long long samples = 0;
  std::uint64_t seed = 0;
};

// Counter-based uniform in (0,1): a pure function of (seed, stream, counter),
// so any parallel schedule reproduces the same draws.
double counter_uniform(std::uint64_t seed, std::uint64_t stream,
                       std::uint64_t counter);

// Inverse-CDF draws. sample_theta(u) = 1/sample_xi(1-u), matching
// phi(t) = 1 - psi(1/t).
double sample_xi(int a, double u);
double sample_theta(int a, double u);

// Estimates P(all k cyclically adjacent products < 1) for i.i.d. Xi (or
// Theta) variates. Deterministic for fixed seed/samples/streams.
McEstimate estimate_cyclic_probability(Dist kind, int k, int a,
                                       const McConfig& cfg);

// S(k,a) ~ ((pi/a)csc(pi/a))^k * (P_xi + P_theta), with propagated
// standard error.
McEstimate estimate_S(const SeriesSpec& spec, const McConfig& cfg);

// Rejection-samples a uniform-by-density point of the polytope H^k: each
// coordinate drawn from Xi, resampled until the cyclic constraints hold.
std::vector<double> random_polytope_point(int k, int a, std::uint64_t seed,
                                          std::uint64_t index);

}  // namespace polyzeta

#endif

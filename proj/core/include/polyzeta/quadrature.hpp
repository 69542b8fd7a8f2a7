#ifndef POLYZETA_QUADRATURE_HPP
#define POLYZETA_QUADRATURE_HPP

#include <functional>
#include <vector>

#include "polyzeta/cyclic.hpp"
#include "polyzeta/types.hpp"

namespace polyzeta {

struct IntegrationResult {
  double value = 0.0;
  double error = 0.0;
  long long evaluations = 0;
  bool converged = false;
};

// Globally adaptive Gauss-Kronrod 7-15 over (lo, hi). hi may be +infinity,
// in which case the map t = lo + s/(1-s) folds the tail onto (0,1).
// Never evaluates f at the interval endpoints.
IntegrationResult integrate_1d(const std::function<double(double)>& f,
                               double lo, double hi, const QuadConfig& cfg);

// Which constant multiplies each ordered-region integral: the density
// normalization (a/pi)sin(pi/a) per variable, or the reciprocal scale
// (pi/a)sin(pi/a) as printed in some sources. The latter exists only as a
// diagnostic; it does not reproduce the series.
enum class ConstantsMode { density, printed };

// Probability that the Xi variables indexed by the tuple are the ones >= 1,
// in the tuple's order: integral over 1 <= xi_{r_n} <= ... <= xi_{r_1} of
// prod_j psi(1/xi_{r_j})^alpha_j / (1+xi_{r_j}^a), times const^n and
// psi(1)^(k - n - sum alpha).
double j_integral(const SeriesSpec& spec, const AdmissibleTuple& t,
                  const QuadConfig& cfg,
                  ConstantsMode mode = ConstantsMode::density);

// Theta counterpart: phi in place of psi and an extra theta^(a-2) per factor.
double k_integral(const SeriesSpec& spec, const AdmissibleTuple& t,
                  const QuadConfig& cfg,
                  ConstantsMode mode = ConstantsMode::density);

// Direct cube quadrature of the k-dimensional integral equal to S(k,a),
// after the substitution x_i = u_i^a: integrand
// (1 + prod u_i^(a-2)) / (1 - (-1)^k prod u_i^a) on (0,1)^k. k <= 3.
EvalResult direct_I(const SeriesSpec& spec, const QuadConfig& cfg);

struct TupleContribution {
  AdmissibleTuple tuple;
  double j = 0.0;
  double k = 0.0;
};

struct ProbabilityBreakdown {
  double easy_xi = 0.0;     // psi(1)^k
  double easy_theta = 0.0;  // phi(1)^k
  std::vector<TupleContribution> contributions;
  double total_probability = 0.0;
  double assembled_S = 0.0;
  double error_estimate = 0.0;
};

// Assembles S(k,a) = ((pi/a)csc(pi/a))^k * (easy terms + sum of J+K over all
// admissible tuples, n = 1..floor(k/2)). k <= 6.
ProbabilityBreakdown assemble_formula(const SeriesSpec& spec,
                                      const QuadConfig& cfg,
                                      ConstantsMode mode = ConstantsMode::density);

}  // namespace polyzeta

#endif

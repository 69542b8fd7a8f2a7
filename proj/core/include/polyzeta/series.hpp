#ifndef POLYZETA_SERIES_HPP
#define POLYZETA_SERIES_HPP

#include "polyzeta/types.hpp"

namespace polyzeta {

struct PartialSum {
  long long N = 0;  // symmetric truncation radius
  double value = 0.0;
};

// Symmetric partial sum over n in [-N, N]. For k = 1 the n and -n terms
// (n >= 1) are added as the analytically paired term (-1)^n * 2/(1 - a^2 n^2),
// which is what makes the conditionally convergent case well defined.
PartialSum partial_sum(const SeriesSpec& spec, long long N);

// Ground truth for S(k,a). |value - S(k,a)| <= tol; error_estimate is a
// rigorous bound. Throws nonconvergence if the required radius exceeds 1e9.
EvalResult evaluate_series(const SeriesSpec& spec, double tol);

// One-sided sum over n >= 0, i.e. S(k,a)/2 when the two halves coincide
// (a = 2). Exposed because the even/odd zeta(2) split goes through it.
double one_sided_series(const SeriesSpec& spec, double tol);

// (4/3) * sum_{n>=0} 1/(2n+1)^2, recovered from the series machinery;
// converges to pi^2/6.
double zeta2_reconstruction(double tol);

}  // namespace polyzeta

#endif

#ifndef POLYZETA_TYPES_HPP
#define POLYZETA_TYPES_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace polyzeta {

// Parameters of the target series: sum over n in Z of (-1)^(nk) / (an+1)^k.
struct SeriesSpec {
  int k = 1;  // exponent, k >= 1
  int a = 2;  // progression modulus, a >= 2
};

enum class Method { series, direct_quad, polytope_formula, monte_carlo };

const char* method_name(Method m);

struct EvalResult {
  double value = 0.0;
  double error_estimate = 0.0;  // >= 0
  Method method = Method::series;
  long long work = 1;  // terms summed / integrand evaluations / samples
};

struct QuadConfig {
  double abs_tol = 1e-9;
  double rel_tol = 1e-9;
  int max_subdivisions = 2000;
};

class invalid_parameter : public std::invalid_argument {
 public:
  explicit invalid_parameter(const std::string& what)
      : std::invalid_argument(what) {}
};

class nonconvergence : public std::runtime_error {
 public:
  nonconvergence(const std::string& what, double best, double err)
      : std::runtime_error(what), best_estimate(best), error_estimate(err) {}
  double best_estimate;
  double error_estimate;
};

// c_a = (a/pi) sin(pi/a), the common normalization of both densities.
double normalization_constant(int a);

// Accepts iff k >= 1 and a >= 2; throws invalid_parameter naming the field.
void validate_spec(const SeriesSpec& spec);

}  // namespace polyzeta

#endif

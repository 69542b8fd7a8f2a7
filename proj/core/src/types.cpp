#include "polyzeta/types.hpp"

#include <cmath>
#include <numbers>

namespace polyzeta {

const char* method_name(Method m) {
  switch (m) {
    case Method::series: return "series";
    case Method::direct_quad: return "direct_quad";
    case Method::polytope_formula: return "polytope_formula";
    case Method::monte_carlo: return "monte_carlo";
  }
  return "unknown";
}

double normalization_constant(int a) {
  if (a < 2) {
    throw invalid_parameter("normalization_constant: a must be >= 2, got " +
                            std::to_string(a));
  }
  const double pi = std::numbers::pi;
  return (a / pi) * std::sin(pi / a);
}

void validate_spec(const SeriesSpec& spec) {
  if (spec.k < 1) {
    throw invalid_parameter("SeriesSpec: k must be >= 1, got " +
                            std::to_string(spec.k));
  }
  if (spec.a < 2) {
    throw invalid_parameter("SeriesSpec: a must be >= 2, got " +
                            std::to_string(spec.a));
  }
}

}  // namespace polyzeta

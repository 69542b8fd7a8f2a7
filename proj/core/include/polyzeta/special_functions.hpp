#ifndef POLYZETA_SPECIAL_FUNCTIONS_HPP
#define POLYZETA_SPECIAL_FUNCTIONS_HPP

#include <span>

#include "polyzeta/types.hpp"

namespace polyzeta {

// Xi has density c_a/(1+t^a) on [0, inf); Theta has density
// c_a t^(a-2)/(1+t^a) and equals 1/Xi in distribution.
enum class Dist { xi, theta };

double density(Dist d, int a, double t);

// Continuous antiderivative of 1/(1+x^a) on [0, inf), normalized so that
// G_a(0) = -(pi/a)csc(pi/a) and G_a(x) -> 0 as x -> inf. Built from the
// log/arctan closed form over the complex root pairs of 1 + x^a.
double antiderivative_G(int a, double x);

// psi(t) = cdf(Dist::xi, ...) = 1 + c_a * G_a(t);
// phi(t) = cdf(Dist::theta, ...) = 1 - psi(1/t) for t > 0, phi(0) = 0.
double cdf(Dist d, int a, double t);

// t with |psi(t) - u| <= 1e-12, by safeguarded Newton inside an expanding
// bracket. u must lie in (0,1).
double inverse_cdf_xi(int a, double u);

// Max over the grid, over both kinds, of |cdf - quadrature of the density
// from 0 to t|. The quadrature side is the independent check.
double verify_cdf_numeric(int a, std::span<const double> grid,
                          const QuadConfig& cfg);

}  // namespace polyzeta

#endif

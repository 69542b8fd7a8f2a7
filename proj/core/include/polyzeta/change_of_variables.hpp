#ifndef POLYZETA_CHANGE_OF_VARIABLES_HPP
#define POLYZETA_CHANGE_OF_VARIABLES_HPP

#include <span>
#include <vector>

#include "polyzeta/types.hpp"

namespace polyzeta {

// Membership in the hyperbolic polytope H^k: all coordinates positive and
// every cyclically adjacent product xi_i * xi_{i+1} < 1.
bool in_polytope(std::span<const double> xi);

// x_i = xi_i^a (1 + xi_{i+1}^a) / (1 + xi_i^a), indices cyclic mod k.
// Maps H^k into (0,1)^k.
std::vector<double> forward_map(int a, std::span<const double> xi);

// a * xi_1^(a-1) for k = 1; otherwise
// a^k (xi_1...xi_k)^(a-1) (1 - (-1)^k (xi_1...xi_k)^a) / prod (1 + xi_i^a).
double jacobian_det_closed(int a, std::span<const double> xi);

// Determinant of the central-difference approximation of the forward-map
// derivative, using a relative step h*xi_j per coordinate; agrees with the
// closed form to O(h^2). All perturbed points must stay inside H^k.
double jacobian_det_numeric(int a, std::span<const double> xi, double h);

}  // namespace polyzeta

#endif

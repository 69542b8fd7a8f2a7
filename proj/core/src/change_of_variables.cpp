#include "polyzeta/change_of_variables.hpp"

#include <cmath>

namespace polyzeta {

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

void require_member(int a, std::span<const double> xi) {
  if (a < 2) throw invalid_parameter("a must be >= 2");
  if (xi.empty()) throw invalid_parameter("point must have k >= 1 coordinates");
  if (!in_polytope(xi)) throw invalid_parameter("point is outside H^k");
}

// determinant by partial-pivot elimination; k never exceeds a handful here
double det_inplace(std::vector<std::vector<double>>& m) {
  const size_t k = m.size();
  double det = 1.0;
  for (size_t col = 0; col < k; ++col) {
    size_t piv = col;
    for (size_t r = col + 1; r < k; ++r) {
      if (std::fabs(m[r][col]) > std::fabs(m[piv][col])) piv = r;
    }
    if (m[piv][col] == 0.0) return 0.0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (size_t r = col + 1; r < k; ++r) {
      const double factor = m[r][col] / m[col][col];
      for (size_t c = col; c < k; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  return det;
}

}  // namespace

bool in_polytope(std::span<const double> xi) {
  const size_t k = xi.size();
  if (k == 0) return false;
  for (size_t i = 0; i < k; ++i) {
    if (!(xi[i] > 0.0)) return false;
  }
  for (size_t i = 0; i < k; ++i) {
    if (!(xi[i] * xi[(i + 1) % k] < 1.0)) return false;
  }
  return true;
}

std::vector<double> forward_map(int a, std::span<const double> xi) {
  require_member(a, xi);
  const size_t k = xi.size();
  std::vector<double> x(k);
  for (size_t i = 0; i < k; ++i) {
    const double xa = pow_int(xi[i], a);
    const double next = pow_int(xi[(i + 1) % k], a);
    x[i] = xa * (1.0 + next) / (1.0 + xa);
  }
  return x;
}

double jacobian_det_closed(int a, std::span<const double> xi) {
  require_member(a, xi);
  const size_t k = xi.size();
  if (k == 1) return a * pow_int(xi[0], a - 1);
  double prod = 1.0, denom = 1.0;
  for (double v : xi) {
    prod *= v;
    denom *= 1.0 + pow_int(v, a);
  }
  const double sign = (k % 2 == 0) ? 1.0 : -1.0;
  return pow_int(static_cast<double>(a), static_cast<int>(k)) *
         pow_int(prod, a - 1) * (1.0 - sign * pow_int(prod, a)) / denom;
}

double jacobian_det_numeric(int a, std::span<const double> xi, double h) {
  require_member(a, xi);
  if (!(h > 0)) throw invalid_parameter("jacobian_det_numeric: h must be > 0");
  const size_t k = xi.size();
  std::vector<double> p(xi.begin(), xi.end());
  std::vector<std::vector<double>> jac(k, std::vector<double>(k));
  for (size_t j = 0; j < k; ++j) {
    // relative step: xi_j^a would lose (h/xi_j)^2 digits under an absolute one
    volatile double stepped = xi[j] * (1.0 + h);
    const double hj = stepped - xi[j];
    p[j] = xi[j] + hj;
    if (!in_polytope(p)) {
      throw invalid_parameter("jacobian_det_numeric: step leaves H^k");
    }
    std::vector<double> xp = forward_map(a, p);
    p[j] = xi[j] - hj;
    if (!in_polytope(p)) {
      throw invalid_parameter("jacobian_det_numeric: step leaves H^k");
    }
    std::vector<double> xm = forward_map(a, p);
    p[j] = xi[j];
    for (size_t i = 0; i < k; ++i) jac[i][j] = (xp[i] - xm[i]) / (2.0 * hj);
  }
  return det_inplace(jac);
}

}  // namespace polyzeta

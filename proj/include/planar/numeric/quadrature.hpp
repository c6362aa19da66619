#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "planar/weight_family.hpp"

namespace planar::numeric {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// n-point Gauss-Legendre rule on [lo, hi].
QuadratureRule gauss_legendre(int n, double lo, double hi);
// n-point rule on [0, 1] for the weight (1 - s)^a, a > -1.
QuadratureRule gauss_jacobi01(int n, double a);

// Deterministic pairwise summation.
double pairwise_sum(std::span<const double> v);

// Nodes z = x + iy with weights w that already include omega(z), the Jacobian and 1/pi,
// so that sum_i w_i f(z_i) approximates the integral of f omega dA.
struct QuadratureGrid {
  std::string scheme;
  int radial_nodes = 0;
  int angular_nodes = 0;
  double extent = 0;  // truncation radius in the scheme's radial variable
  std::vector<double> x, y, w;
  std::size_t size() const { return w.size(); }
};

// Grid for densities whose polynomial part has degree <= max_degree in z and zb each,
// integrated against monomials of total degree <= p_max. refine >= 1 scales node counts.
// Requires rational tau in [0, 1); laguerre nu >= 0; gegenbauer a >= 0.
QuadratureGrid weighted_grid(const WeightFamily& f, int max_degree, int p_max, int refine = 1);

// Grid over the support of the non-Hermitian Marchenko-Pastur law, weights including its density.
QuadratureGrid mp_law_grid(double tau, double alpha, int refine = 1);

}  // namespace planar::numeric

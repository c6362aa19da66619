#pragma once

#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "planar/moments.hpp"
#include "planar/numeric/kernels.hpp"
#include "planar/numeric/quadrature.hpp"

namespace planar::numeric {

using cplx = std::complex<double>;

// Two grid refinements disagreed beyond tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double coarse, double fine)
      : std::runtime_error(what), coarse(coarse), fine(fine) {}
  double coarse;
  double fine;
};

// value = mantissa * exp(log_scale)
struct LogComplex {
  cplx mantissa;
  double log_scale = 0;
  double log_abs() const { return std::log(std::abs(mantissa)) + log_scale; }
  cplx value() const { return mantissa * std::exp(log_scale); }
};

// Monic p_k by the forward recurrence, rescaled whenever |p_k| exceeds 1e100.
LogComplex eval_planar_poly_log(const WeightFamily& f, int k, cplx z);
cplx eval_planar_poly(const WeightFamily& f, int k, cplx z);

// Absolute squared norm h_k (dA = d^2 z / pi).
double absolute_norm(const WeightFamily& f, int k);
double weight(const WeightFamily& f, cplx z);

// Highest polynomial degree in the density of N points.
int density_degree(int N, Component c);

class DensityEval {
 public:
  DensityEval(const WeightFamily& f, int N, Component component);

  const WeightFamily& family() const { return family_; }
  int N() const { return N_; }
  Component component() const { return component_; }
  const KernelCoeffs& coeffs() const { return coeffs_; }
  double h(int k) const { return h_.at(static_cast<std::size_t>(k)); }
  // r_k (symplectic only)
  double r(int k) const { return r_.at(static_cast<std::size_t>(k)); }

  // Direct complex evaluation of omega * kernel; throws if the imaginary residue exceeds 1e-10 relative.
  double density(cplx z) const;
  // Kernel part (density / omega) on all grid nodes.
  std::vector<double> kernel_on(const QuadratureGrid& g) const;

 private:
  WeightFamily family_;
  int N_;
  Component component_;
  KernelCoeffs coeffs_;
  std::vector<double> h_, r_;
};

// sum_i w_i kernel_i z_i^p1 zb_i^p2; throws if |Im| >= 1e-9 max(1, |Re|).
double quadrature_moment(const DensityEval& d, int p1, int p2, const QuadratureGrid& g);
double quadrature_moment(const WeightFamily& f, int p1, int p2, int N, Component c, const QuadratureGrid& g);
// Moments for several (p1, p2) from one kernel evaluation.
std::vector<double> quadrature_moments(const DensityEval& d, const std::vector<std::pair<int, int>>& ps,
                                       const QuadratureGrid& g);
// Builds a grid and a refined grid; throws ConvergenceError unless they agree within rel_tol.
std::vector<double> quadrature_moments_checked(const WeightFamily& f, int N, Component c,
                                               const std::vector<std::pair<int, int>>& ps, double rel_tol);

// <p_j, p_k> on the grid.
double quadrature_orthogonality(const WeightFamily& f, int j, int k, const QuadratureGrid& g);
// <q_j, q_k>_s on the grid, with d supplying the skew polynomials (j, k < 2N).
double quadrature_skew_product(const DensityEval& d, int j, int k, const QuadratureGrid& g);

// Integral of z^p1 zb^p2 against the non-Hermitian Marchenko-Pastur law.
double mp_law_moment_quadrature(int p1, int p2, double tau, double alpha, const QuadratureGrid& g);
double mp_law_moment_quadrature(int p1, int p2, double tau, double alpha);

}  // namespace planar::numeric

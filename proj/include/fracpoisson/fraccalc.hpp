#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fracpoisson/params.hpp"

namespace fracpoisson {

using Complex = std::complex<long double>;
using LaplaceTransform = std::function<Complex(Complex)>;

enum class InversionMethod { talbot, gaver_stehfest };

/// Numerical inverse Laplace transform at t > 0. Fixed Talbot contour with
/// `nodes` points (default 48), or Gaver-Stehfest with `nodes` (even, default
/// 20) terms on the real axis. Throws InversionError when the sum is not finite.
double laplace_invert(const LaplaceTransform& transform, double t,
                      InversionMethod method = InversionMethod::talbot, int nodes = 0);

/// Values on a uniform grid t_n = n * step.
struct GridFunction {
  double step = 0.0;
  std::vector<double> values;
};

/// Values on a uniform product grid, row-major: values[i * cols + j] at (i*step1, j*step2).
struct GridFunction2 {
  double step1 = 0.0;
  double step2 = 0.0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> values;
  double at(std::size_t i, std::size_t j) const { return values[i * cols + j]; }
};

/// L1 approximation of the Caputo derivative of order alpha in (0, 1).
/// Entry 0 of the result is set to 0. alpha = 1 gives backward differences.
GridFunction caputo_l1(const GridFunction& u, Alpha alpha);

/// Tensor-product L1 approximation of the mixed Caputo derivative.
/// Row 0 and column 0 of the result are 0.
GridFunction2 caputo_mixed_l1(const GridFunction2& u, Alpha alpha1, Alpha alpha2);

struct ResidualReport {
  std::string equation;
  double max_residual = 0.0;
  double step = 0.0;
  double t_from = 0.0;
  double t_to = 0.0;
  int k_max = 0;
  /// Fitted constant C in max_residual = C * step^order.
  double fitted_constant = 0.0;
  double order = 0.0;
  /// Statistical criterion (FPRF only): max |residual| / combined standard error.
  double max_z = 0.0;
  bool pass = false;
};

/// Residual of D^alpha p_k + lambda (p_k - p_{k-1}) = 0 for the FPP pmf,
/// maximised over t_n in [t_from, t_to] and k <= k_max. alpha = 1 uses
/// central differences for the ordinary derivative.
ResidualReport fde_residual_fpp(Alpha alpha, double lambda, double step, double t_from,
                                double t_to, int k_max);

/// Residual of C1 D^a1 p_k + C2 D^a2 p_k + lambda (p_k - p_{k-1}) = 0 for the
/// MFPP pmf (Laplace inversion method).
ResidualReport fde_residual_mfpp(const MixedParams& params, double lambda, double step,
                                 double t_from, double t_to, int k_max);

/// Residual of the mixed fractional equations of the FPRF pmf on an
/// n x n grid of (t1, t2) in (0, t_max]^2 with Monte Carlo pmf values.
/// When both alphas are 1 the classical equations are checked with the exact
/// Poisson field pmf instead.
ResidualReport fde_residual_fprf(Alpha alpha1, Alpha alpha2, double lambda, double t_max,
                                 std::size_t n, int k_max, std::size_t n_mc,
                                 std::uint64_t seed, unsigned jobs = 1);

}  // namespace fracpoisson

#pragma once

#include <optional>

#include "fracpoisson/params.hpp"

namespace fracpoisson {

/// One-parameter Mittag-Leffler function E_alpha(z) for real z.
/// Throws DomainError for alpha <= 0, AccuracyError if no evaluation route
/// reaches the target accuracy.
double mittag_leffler(double alpha, double z);

/// Two-parameter Mittag-Leffler function E_{alpha,beta}(z).
double mittag_leffler2(double alpha, double beta, double z);

/// Three-parameter (Prabhakar) Mittag-Leffler function E^gamma_{alpha,beta}(z).
double mittag_leffler3(double alpha, double beta, double gamma, double z);

/// Wright function W_{gamma,beta}(z) = sum_k z^k / (k! Gamma(gamma k + beta)),
/// with 1/Gamma(-n) = 0.
double wright(double gamma, double beta, double z);

/// Density g_alpha of L_alpha(1), E exp(-s L_alpha(1)) = exp(-s^alpha).
double stable_density(Alpha alpha, double x);

/// Density of the inverse stable subordinator Y_alpha(t) at x.
double inverse_stable_density(Alpha alpha, double t, double x);

/// Density of the inverse mixed subordinator, by Laplace inversion in t.
double mixed_inverse_density(const MixedParams& params, double t, double x);

/// 1/Gamma(x), zero at the poles of Gamma.
long double rgamma(long double x);

namespace detail {

/// Certified value of one evaluation route, or nullopt when the route cannot
/// guarantee an absolute error of `tol` at this argument.
std::optional<double> ml_series(double alpha, double beta, double gamma, double z, double tol);
std::optional<double> ml_asymptotic(double alpha, double beta, double z, double tol);
std::optional<double> ml_integral(double alpha, double z, double tol);
std::optional<double> ml_laplace(double alpha, double beta, double gamma, double z, double tol);

}  // namespace detail

}  // namespace fracpoisson

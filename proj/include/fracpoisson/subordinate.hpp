#pragma once

#include <cstddef>
#include <vector>

#include "fracpoisson/params.hpp"
#include "fracpoisson/random.hpp"

namespace fracpoisson {

inline constexpr double kDefaultDelta = 5e-4;
inline constexpr std::size_t kDefaultMaxPathLength = 50'000'000;

/// L(t_n) at t_n = n * delta; values[0] = 0, strictly increasing.
struct SubordinatorPath {
  SubordinatorParams params;
  double delta = kDefaultDelta;
  std::vector<double> values;
};

/// Inverse of a grid-sampled subordinator. The jump times are s_n = L(t_n)
/// and the level at s_n is n * delta.
class InversePath {
 public:
  InversePath(double delta, std::vector<double> jump_times);

  double delta() const noexcept { return delta_; }
  const std::vector<double>& jump_times() const noexcept { return jump_times_; }
  /// Largest time at which the path is defined (the last jump time).
  double horizon() const noexcept { return jump_times_.back(); }
  std::size_t size() const noexcept { return jump_times_.size(); }

  /// Right-continuous step readout: n * delta on [s_n, s_{n+1}).
  double value(double s) const;
  /// Piecewise-linear interpolation through (s_n, n * delta).
  double interpolated(double s) const;
  /// Inverse of `interpolated`: the time at which the interpolated path
  /// reaches `level` (linear interpolation of the subordinator).
  double time_at_level(double level) const;

 private:
  std::size_t segment(double s) const;

  double delta_;
  std::vector<double> jump_times_;
};

/// Exact grid simulation; stops at the first n with L(t_n) > s_end.
/// Throws ResourceError when more than max_length grid points would be needed.
SubordinatorPath simulate_subordinator(const SubordinatorParams& params, double delta, double s_end,
                                       RandomSource& rng,
                                       std::size_t max_length = kDefaultMaxPathLength);

InversePath invert_path(const SubordinatorPath& path);

/// Renewal function U(t) = E Y(t).
double inverse_mean(const SubordinatorParams& params, double t);

/// Density of the renewal measure, dU(t)/dt.
double renewal_density(const SubordinatorParams& params, double t);

/// E Y(t)^2.
double inverse_second_moment(const SubordinatorParams& params, double t);

/// E Y_alpha(t)^nu = t^(alpha nu) Gamma(nu + 1) / Gamma(alpha nu + 1).
double inverse_moment(Alpha alpha, double t, double nu);

/// Cov(Y_alpha(t), Y_alpha(s)) by quadrature of the stable covariance integral.
double inverse_cov(Alpha alpha, double t, double s);

/// Cov(Y(t), Y(s)) for the mixed inverse subordinator, from the renewal function.
double mixed_inverse_cov(const MixedParams& params, double t, double s);

}  // namespace fracpoisson

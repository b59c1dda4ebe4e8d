#pragma once

#include <variant>

namespace fracpoisson {

/// Stability index of a stable subordinator. Values in (0, 1); the boundary
/// value 1 is admitted for the classical (deterministic clock) reductions.
class Alpha {
 public:
  explicit Alpha(double value);

  double value() const noexcept { return value_; }
  bool is_one() const noexcept { return value_ == 1.0; }

  friend bool operator==(const Alpha&, const Alpha&) = default;

 private:
  double value_;
};

/// Mixture exponent phi(s) = c1 s^alpha1 + c2 s^alpha2 with c1 + c2 = 1,
/// c1 >= 0, c2 > 0 and alpha1 < alpha2.
class MixedParams {
 public:
  MixedParams(Alpha alpha1, Alpha alpha2, double c1, double c2);

  Alpha alpha1() const noexcept { return alpha1_; }
  Alpha alpha2() const noexcept { return alpha2_; }
  double c1() const noexcept { return c1_; }
  double c2() const noexcept { return c2_; }

  double laplace_exponent(double s) const;

 private:
  Alpha alpha1_;
  Alpha alpha2_;
  double c1_;
  double c2_;
};

using SubordinatorParams = std::variant<Alpha, MixedParams>;

}  // namespace fracpoisson

#include "fracpoisson/params.hpp"

#include <cmath>
#include <sstream>

#include "fracpoisson/errors.hpp"

namespace fracpoisson {

Alpha::Alpha(double value) : value_(value) {
  if (!(value > 0.0 && value <= 1.0)) {
    std::ostringstream os;
    os << "alpha must lie in (0, 1] (got " << value << ")";
    throw DomainError(os.str());
  }
}

MixedParams::MixedParams(Alpha alpha1, Alpha alpha2, double c1, double c2)
    : alpha1_(alpha1), alpha2_(alpha2), c1_(c1), c2_(c2) {
  if (!(c1 >= 0.0)) throw DomainError("C1 must be >= 0");
  if (!(c2 > 0.0)) throw DomainError("C2 must be > 0 (C2 = 0 is the single stable case)");
  if (std::abs(c1 + c2 - 1.0) > 1e-12) throw DomainError("C1+C2 must equal 1");
  if (!(alpha1.value() < alpha2.value())) throw DomainError("alpha1 must be < alpha2");
  if (alpha2.is_one()) throw DomainError("mixed exponents must lie in (0, 1)");
}

double MixedParams::laplace_exponent(double s) const {
  return c1_ * std::pow(s, alpha1_.value()) + c2_ * std::pow(s, alpha2_.value());
}

}  // namespace fracpoisson

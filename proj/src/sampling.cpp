#include "fracpoisson/sampling.hpp"

#include <cmath>
#include <numbers>

#include "fracpoisson/errors.hpp"

namespace fracpoisson {

double sample_stable(Alpha alpha, double scale, RandomSource& rng) {
  if (!(scale > 0.0)) throw DomainError("sample_stable: scale must be > 0");
  if (alpha.is_one()) return scale;
  const double a = alpha.value();
  const double u = std::numbers::pi * rng.uniform();
  const double e = rng.exponential();
  const double part1 = std::sin(a * u) / std::pow(std::sin(u), 1.0 / a);
  const double part2 = std::pow(std::sin((1.0 - a) * u) / e, (1.0 - a) / a);
  return std::pow(scale, 1.0 / a) * part1 * part2;
}

double sample_mixed_increment(const MixedParams& params, double delta, RandomSource& rng) {
  double x = sample_stable(params.alpha2(), params.c2() * delta, rng);
  if (params.c1() > 0.0) x += sample_stable(params.alpha1(), params.c1() * delta, rng);
  return x;
}

double sample_ml_waiting_time(Alpha alpha, double lambda, RandomSource& rng) {
  if (!(lambda > 0.0)) throw DomainError("sample_ml_waiting_time: lambda must be > 0");
  const double e = rng.exponential() / lambda;
  if (alpha.is_one()) return e;
  return std::pow(e, 1.0 / alpha.value()) * sample_stable(alpha, 1.0, rng);
}

double sample_inverse_at(Alpha alpha, double t, RandomSource& rng) {
  if (!(t >= 0.0)) throw DomainError("sample_inverse_at: t must be >= 0");
  if (t == 0.0) return 0.0;
  if (alpha.is_one()) return t;
  const double a = alpha.value();
  return std::pow(t, a) * std::pow(sample_stable(alpha, 1.0, rng), -a);
}

}  // namespace fracpoisson

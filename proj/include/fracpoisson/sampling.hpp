#pragma once

#include "fracpoisson/params.hpp"
#include "fracpoisson/random.hpp"

namespace fracpoisson {

/// One-sided stable variate with E exp(-s X) = exp(-scale s^alpha), by
/// Kanter's representation. alpha = 1 returns scale.
double sample_stable(Alpha alpha, double scale, RandomSource& rng);

/// Increment of the mixed subordinator over a step of length delta:
/// E exp(-s X) = exp(-delta (c1 s^a1 + c2 s^a2)).
double sample_mixed_increment(const MixedParams& params, double delta, RandomSource& rng);

/// Waiting time with survival function E_alpha(-lambda t^alpha).
double sample_ml_waiting_time(Alpha alpha, double lambda, RandomSource& rng);

/// Exact draw of Y_alpha(t) = t^alpha S^(-alpha), S unit stable.
double sample_inverse_at(Alpha alpha, double t, RandomSource& rng);

}  // namespace fracpoisson

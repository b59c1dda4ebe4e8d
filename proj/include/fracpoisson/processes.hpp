#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fracpoisson/params.hpp"
#include "fracpoisson/random.hpp"
#include "fracpoisson/stats.hpp"
#include "fracpoisson/subordinate.hpp"

namespace fracpoisson {

inline constexpr std::size_t kMaxEvents = 10'000'000;

/// Event times of a counting process observed on [0, horizon].
struct EventTimes {
  std::vector<double> times;
  double horizon = 0.0;

  /// Number of events in [0, t].
  std::size_t count_at(double t) const;
};

/// Events together with the inverse path that drove them.
struct TimeChangedEvents {
  EventTimes events;
  InversePath path;
};

/// p_0 .. p_kmax with tail_mass = 1 - sum. std_errors is filled by Monte
/// Carlo estimators; fallback_k lists the k computed by Laplace inversion
/// because the series could not certify its accuracy.
struct Pmf {
  std::vector<double> probs;
  double tail_mass = 0.0;
  std::vector<double> std_errors;
  std::vector<int> fallback_k;

  int k_max() const { return static_cast<int>(probs.size()) - 1; }
  double mean() const;
  double variance() const;
};

EventTimes simulate_fpp_renewal(Alpha alpha, double lambda, double t_end, RandomSource& rng);

TimeChangedEvents simulate_fpp_timechange(Alpha alpha, double lambda, double t_end, RandomSource& rng,
                                          double delta = kDefaultDelta);

Pmf fpp_pmf(Alpha alpha, double lambda, double t, int k_max);

MomentReport fpp_moments(Alpha alpha, double lambda, double t, double s);

/// Hurst index of the FPP.
double fpp_hurst(Alpha alpha);

/// Monte Carlo Hurst estimate: half the log-log slope of Var N(t) over
/// `n_times` log-spaced times in [t_from, t_to], with N(t) drawn exactly as
/// Poisson(lambda Y(t)).
double fpp_hurst_mc(Alpha alpha, double lambda, double t_from, double t_to, int n_times,
                    std::size_t n_mc, std::uint64_t seed, unsigned jobs = 1);

TimeChangedEvents simulate_mfpp(const MixedParams& params, double lambda, double t_end, RandomSource& rng,
                                double delta = kDefaultDelta);

struct P0Value {
  double value = 0.0;
  /// True when the double series did not converge and Laplace inversion was used.
  bool fallback = false;
  int terms = 0;
};

/// Empty probability of the MFPP from its double Mittag-Leffler series.
P0Value mfpp_p0(const MixedParams& params, double lambda, double t);

enum class MfppMethod { laplace, convolution, montecarlo };

struct MfppPmfOptions {
  /// Grid intervals on [0, t] for the convolution recurrence.
  std::size_t grid_intervals = 1000;
  std::size_t n_mc = 20000;
  std::uint64_t seed = 0;
  double delta = 1e-3;
  unsigned jobs = 1;
};

Pmf mfpp_pmf(const MixedParams& params, double lambda, double t, int k_max, MfppMethod method,
             const MfppPmfOptions& options = {});

/// Convolution kernel g(z) of the MFPP pmf recurrence.
double mfpp_kernel(const MixedParams& params, double lambda, double z);

MomentReport mfpp_moments(const MixedParams& params, double lambda, double t, double s);

/// A nondecreasing right-continuous function with Lambda(0) = 0 and jumps of
/// size at most 1, stored as a table. Between knots it is linear or constant;
/// beyond the last knot it continues with `tail_slope`.
class ConsistentFunction {
 public:
  enum class Rule { linear, step };

  ConsistentFunction(std::vector<double> knots, std::vector<double> values, Rule rule,
                     double tail_slope = 0.0);
  static ConsistentFunction linear(double lambda);

  double operator()(double u) const;
  /// inf { u : Lambda(u) >= level }, or +infinity if never reached.
  double first_passage(double level) const;

 private:
  std::vector<double> knots_;
  std::vector<double> values_;
  Rule rule_;
  double tail_slope_;
};

/// N(Lambda(Y(t))) on [0, t_end] with a unit-rate Poisson process N.
EventTimes apply_consistent_time_change(const ConsistentFunction& inner, const InversePath& path,
                                        double t_end, RandomSource& rng);

}  // namespace fracpoisson

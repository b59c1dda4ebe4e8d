#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "fracpoisson/params.hpp"
#include "fracpoisson/processes.hpp"
#include "fracpoisson/random.hpp"
#include "fracpoisson/stats.hpp"
#include "fracpoisson/subordinate.hpp"

namespace fracpoisson {

inline constexpr std::uint64_t kRecordDrawCap = 100'000'000;

struct Point {
  double x = 0.0;
  double y = 0.0;
};

/// Points of a planar counting process in the window [0, S]^2.
struct PlanarPoints {
  std::vector<Point> points;
  double window = 0.0;

  /// Number of points in [0, x] x [0, y].
  std::size_t count_in(double x, double y) const;
  /// Number of points in (x0, x1] x (y0, y1].
  std::size_t count_in(double x0, double y0, double x1, double y1) const;
};

/// Homogeneous Poisson field of rate lambda on [0, window]^2.
PlanarPoints simulate_prf(double lambda, double window, RandomSource& rng);

enum class CellLaw { poisson, bernoulli };

struct FprfRealization {
  PlanarPoints field;
  InversePath path1;
  InversePath path2;
};

/// Grid simulation of the fractional Poisson random field: two independent
/// inverse paths, and in every grid cell a count with mean lambda delta^2
/// (Poisson, or Bernoulli when lambda delta^2 < 0.1) placed uniformly in the cell.
FprfRealization simulate_fprf(Alpha alpha1, Alpha alpha2, double lambda, double window, double delta,
                              CellLaw law, RandomSource& rng);

/// Monte Carlo pmf of N(Y1(t1), Y2(t2)) from the double sum over n_mc x n_mc
/// pairs of exact single-time draws, with per-k standard errors.
Pmf fprf_pmf_mc(Alpha alpha1, Alpha alpha2, double lambda, double t1, double t2, int k_max, std::size_t n_mc,
                RandomSource& rng);

/// Inputs of the covariance engine for N(Y1(t1), Y2(t2)) with a general
/// planar process N and independent nondecreasing time changes Y1, Y2.
struct CovInputs {
  double mean_n11 = 0.0;
  double var_n11 = 0.0;
  std::function<double(double)> u1;
  std::function<double(double)> u2;
  std::function<double(double)> m2_1;
  std::function<double(double)> m2_2;
  std::function<double(double, double)> cov1;
  std::function<double(double, double)> cov2;
};

using Coord = std::pair<double, double>;

/// Mean and variance at t and covariance between t and s.
MomentReport parameter_change_cov(const CovInputs& inputs, Coord t, Coord s);

/// CovInputs for the FPRF (Poisson field of rate lambda, stable inverse time changes).
CovInputs fprf_cov_inputs(Alpha alpha1, Alpha alpha2, double lambda);

/// FPRF moments through the covariance engine.
MomentReport fprf_moments(Alpha alpha1, Alpha alpha2, double lambda, Coord t, Coord s);

/// Variance constants (C1, C2) of the FPRF.
std::pair<double, double> fprf_variance_constants(Alpha alpha1, Alpha alpha2);

/// Closed-form FPRF variance lambda^2 C1 (t1^a1 t2^a2)^2 + lambda C2 t1^a1 t2^a2.
double fprf_variance(Alpha alpha1, Alpha alpha2, double lambda, Coord t);

/// Closed-form FPRF covariance.
double fprf_covariance(Alpha alpha1, Alpha alpha2, double lambda, Coord t, Coord s);

/// Hurst index of the FPRF, (alpha1 + alpha2) / 2.
double fprf_hurst(Alpha alpha1, Alpha alpha2);

/// Continuous coordinatewise nondecreasing path t -> (G1(t), G2(t)) from
/// (0, 0), stored as a table with linear interpolation on [0, t_max].
class IncreasingPath {
 public:
  IncreasingPath(std::vector<double> t, std::vector<double> g1, std::vector<double> g2);
  static IncreasingPath diagonal(double t_max);

  double t_max() const { return t_.back(); }
  Coord operator()(double t) const;
  /// Entry time of (x, y): inf { t : G1(t) >= x and G2(t) >= y }, or +infinity.
  double entry_time(double x, double y) const;

 private:
  static double passage(const std::vector<double>& t, const std::vector<double>& g, double level);

  std::vector<double> t_;
  std::vector<double> g1_;
  std::vector<double> g2_;
};

struct TraceSample {
  double t = 0.0;
  std::size_t count = 0;
};

/// Counts of the field in the rectangle [0, G(t)] at n_eval equally spaced
/// t in [0, t_max]. Throws HorizonError if the path leaves the window.
std::vector<TraceSample> trace_along_path(const FprfRealization& realization, const IncreasingPath& path,
                                          std::size_t n_eval);

/// Event times of the trace on the intensity scale
/// s = lambda Y1(G1(t)) Y2(G2(t)); a unit-rate Poisson process on [0, horizon].
/// Throws HorizonError if the horizon is below s_required.
EventTimes reparametrize_to_standard(const FprfRealization& realization, const IncreasingPath& path, double lambda,
                                     double s_required = 0.0);

/// Intensity lambda Y1(G1(t)) Y2(G2(t)) along the path (interpolated inverse paths).
double trace_intensity(const FprfRealization& realization, const IncreasingPath& path, double lambda, double t);

/// Record construction: Y_t = number of records of an i.i.d. uniform sequence
/// not exceeding 1 - exp(-m(t)), at each grid point. Throws ResourceError once
/// more than `cap` uniforms would be needed.
std::vector<std::uint64_t> gergely_yezhov_counts(const std::function<double(double)>& intensity,
                                                 const std::vector<double>& t_grid, RandomSource& rng,
                                                 std::uint64_t cap = kRecordDrawCap);

}  // namespace fracpoisson

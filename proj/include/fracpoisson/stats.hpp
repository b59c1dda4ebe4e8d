#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fracpoisson/parallel.hpp"
#include "fracpoisson/random.hpp"

namespace fracpoisson {

class InversePath;
struct EventTimes;

/// Mean and variance at time t and covariance between times t and s.
/// Standard errors are present exactly when the report is a Monte Carlo
/// estimate (n set).
struct MomentReport {
  double t = 0.0;
  double s = 0.0;
  double mean = 0.0;
  double variance = 0.0;
  double covariance = 0.0;
  std::optional<double> mean_se;
  std::optional<double> variance_se;
  std::optional<double> covariance_se;
  std::optional<std::size_t> n;
};

struct TestResult {
  std::string name;
  double statistic = 0.0;
  double p_value = 0.0;
  std::size_t n = 0;
  int dof = 0;
  double level = 0.01;
  bool pass = false;
};

/// Sample moments of x, and covariance of (x, y) when y is not empty.
/// Standard errors use the plug-in fourth-moment formulas.
MomentReport mc_moments(const std::vector<double>& x, const std::vector<double>& y = {});

/// Draws n pairs (X, Y) with sampler(rng_i) where rng_i = RandomSource(seed, base + i),
/// on `jobs` threads, and summarizes them with mc_moments.
MomentReport mc_moments(const std::function<std::pair<double, double>(RandomSource&)>& sampler,
                        std::size_t n, std::uint64_t seed, std::uint64_t base_stream = 0,
                        unsigned jobs = 1);

/// One-sample Kolmogorov-Smirnov test (asymptotic p-value with Stephens' correction).
TestResult ks_test(std::vector<double> samples, const std::function<double(double)>& cdf,
                   double level = 0.01);

/// Two-sample Kolmogorov-Smirnov test.
TestResult ks_test(std::vector<double> a, std::vector<double> b, double level = 0.01);

/// Chi-square goodness of fit of integer samples to a pmf. Bins are pooled
/// left to right until each expected count is at least 5; the upper tail
/// beyond the last pooled bin forms the final bin.
TestResult chi_square(const std::vector<std::uint64_t>& samples,
                      const std::function<double(std::uint64_t)>& pmf, double level = 0.01);

/// Two-sample chi-square test of homogeneity for integer samples.
TestResult chi_square(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b,
                      double level = 0.01);

/// Upper tail probability of the chi-square distribution.
double chi_square_sf(double statistic, int dof);

/// Asymptotic Kolmogorov distribution tail P(K > x).
double kolmogorov_sf(double x);

struct MartingaleDiagnostic {
  TestResult test;
  std::vector<double> bin_z;
  std::vector<std::size_t> bin_sizes;
};

/// Bins paths by quantiles of M(s) = X(s) - lambda Y(s) and tests that each
/// bin's mean increment M(t) - M(s) is zero. Passes when every bin has
/// |z| <= 4; the sum of z^2 is reported with its chi-square p-value on `bins`
/// degrees of freedom. The compensator uses the interpolated inverse path.
MartingaleDiagnostic martingale_diagnostic(const std::vector<EventTimes>& events,
                                           const std::vector<InversePath>& paths, double lambda,
                                           double s, double t, int bins, double level = 0.01);

}  // namespace fracpoisson

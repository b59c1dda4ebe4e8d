#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "fracpoisson/errors.hpp"
#include "fracpoisson/processes.hpp"
#include "fracpoisson/sampling.hpp"
#include "fracpoisson/specfun.hpp"
#include "fracpoisson/stats.hpp"

namespace fp = fracpoisson;

namespace {

double poisson_pmf(double mean, std::uint64_t k) {
  return std::exp(static_cast<double>(k) * std::log(mean) - mean - std::lgamma(static_cast<double>(k) + 1.0));
}

double exp_cdf(double x) { return x <= 0.0 ? 0.0 : -std::expm1(-x); }

}  // namespace

TEST(Moments, ConstantSampleHasZeroError) {
  const auto m = fp::mc_moments(std::vector<double>(100, 3.5));
  EXPECT_DOUBLE_EQ(m.mean, 3.5);
  EXPECT_DOUBLE_EQ(m.variance, 0.0);
  EXPECT_DOUBLE_EQ(*m.mean_se, 0.0);
  EXPECT_EQ(*m.n, 100u);
}

TEST(Moments, NormalSample) {
  const auto m = fp::mc_moments(
      [](fp::RandomSource& r) {
        const double z = r.normal();
        return std::pair{z, 2.0 * z};
      },
      20000, 21);
  EXPECT_NEAR(m.mean, 0.0, 4.0 * *m.mean_se);
  EXPECT_NEAR(m.variance, 1.0, 4.0 * *m.variance_se);
  EXPECT_NEAR(m.covariance, 2.0, 4.0 * *m.covariance_se);
}

TEST(Moments, ThreadCountDoesNotChangeResult) {
  auto sampler = [](fp::RandomSource& r) {
    const double u = r.uniform();
    return std::pair{u, u * u};
  };
  const auto a = fp::mc_moments(sampler, 5000, 22, 0, 1);
  const auto b = fp::mc_moments(sampler, 5000, 22, 0, 3);
  EXPECT_EQ(a.mean, b.mean);
  EXPECT_EQ(a.covariance, b.covariance);
}

TEST(Moments, FppSamplerMatchesClosedForm) {
  const fp::Alpha alpha(0.7);
  const double lambda = 2.0;
  const auto m = fp::mc_moments(
      [&](fp::RandomSource& r) {
        const auto ev = fp::simulate_fpp_renewal(alpha, lambda, 1.0, r);
        const double c = static_cast<double>(ev.count_at(1.0));
        return std::pair{c, c};
      },
      20000, 23);
  const auto exact = fp::fpp_moments(alpha, lambda, 1.0, 1.0);
  EXPECT_NEAR(m.mean, exact.mean, 4.0 * *m.mean_se);
  EXPECT_NEAR(m.variance, exact.variance, 4.0 * *m.variance_se);
}

TEST(Moments, InputChecks) {
  EXPECT_THROW(fp::mc_moments(std::vector<double>{1.0}), fp::DomainError);
  EXPECT_THROW(fp::mc_moments({1.0, 2.0}, {1.0}), fp::DomainError);
}

TEST(Ks, RejectionRateIsCalibrated) {
  int rejected = 0;
  const int reps = 400;
  for (int i = 0; i < reps; ++i) {
    fp::RandomSource rng(24, i);
    std::vector<double> x(200);
    for (auto& v : x) v = rng.uniform();
    rejected += fp::ks_test(x, [](double u) { return std::clamp(u, 0.0, 1.0); }, 0.05).pass ? 0 : 1;
  }
  // Binomial(400, 0.05) has mean 20 and sd 4.4.
  EXPECT_GE(rejected, 5);
  EXPECT_LE(rejected, 38);
}

TEST(Ks, DetectsWrongLaw) {
  fp::RandomSource rng(25, 0);
  std::vector<double> x(100000);
  for (auto& v : x) v = fp::sample_ml_waiting_time(fp::Alpha(0.7), 1.0, rng);
  EXPECT_FALSE(fp::ks_test(x, exp_cdf).pass);
  EXPECT_TRUE(fp::ks_test(x, [](double t) { return t <= 0.0 ? 0.0 : 1.0 - fp::mittag_leffler(0.7, -std::pow(t, 0.7)); })
                  .pass);
}

TEST(Ks, TwoSample) {
  fp::RandomSource rng(26, 0);
  std::vector<double> a(5000), b(5000), c(5000);
  for (auto& v : a) v = rng.exponential();
  for (auto& v : b) v = rng.exponential();
  for (auto& v : c) v = 1.3 * rng.exponential();
  EXPECT_TRUE(fp::ks_test(a, b).pass);
  EXPECT_FALSE(fp::ks_test(a, c).pass);
}

TEST(ChiSquare, PoissonSample) {
  fp::RandomSource rng(27, 0);
  std::vector<std::uint64_t> x(20000);
  for (auto& v : x) v = rng.poisson(5.0);
  const auto r = fp::chi_square(x, [](std::uint64_t k) { return poisson_pmf(5.0, k); });
  EXPECT_TRUE(r.pass);
  EXPECT_GT(r.dof, 5);
  EXPECT_FALSE(fp::chi_square(x, [](std::uint64_t k) { return poisson_pmf(5.3, k); }).pass);
}

TEST(ChiSquare, TailSf) {
  EXPECT_NEAR(fp::chi_square_sf(3.841458820694124, 1), 0.05, 1e-12);
  EXPECT_NEAR(fp::chi_square_sf(18.307038053275146, 10), 0.05, 1e-12);
  EXPECT_NEAR(fp::kolmogorov_sf(1.3580986393225505), 0.05, 1e-6);
}

TEST(ChiSquare, TwoSampleHomogeneity) {
  fp::RandomSource rng(28, 0);
  std::vector<std::uint64_t> a(10000), b(10000), c(10000);
  for (auto& v : a) v = rng.poisson(3.0);
  for (auto& v : b) v = rng.poisson(3.0);
  for (auto& v : c) v = rng.poisson(3.3);
  EXPECT_TRUE(fp::chi_square(a, b).pass);
  EXPECT_FALSE(fp::chi_square(a, c).pass);
}

namespace {

fp::MartingaleDiagnostic diagnose(double alpha, double lambda, double compensator_rate, std::uint64_t seed) {
  std::vector<fp::EventTimes> ev;
  std::vector<fp::InversePath> paths;
  for (std::size_t i = 0; i < 4000; ++i) {
    fp::RandomSource rng(seed, i);
    auto r = fp::simulate_fpp_timechange(fp::Alpha(alpha), lambda, 2.0, rng, 1e-3);
    ev.push_back(std::move(r.events));
    paths.push_back(std::move(r.path));
  }
  return fp::martingale_diagnostic(ev, paths, compensator_rate, 1.0, 2.0, 5);
}

}  // namespace

TEST(Martingale, CorrectCompensatorPasses) {
  const auto d = diagnose(0.75, 2.0, 2.0, 29);
  EXPECT_TRUE(d.test.pass);
  EXPECT_EQ(d.bin_z.size(), 5u);
}

TEST(Martingale, WrongRateFails) { EXPECT_FALSE(diagnose(0.75, 2.0, 3.0, 30).test.pass); }

TEST(Martingale, ClassicalCase) { EXPECT_TRUE(diagnose(1.0, 2.0, 2.0, 31).test.pass); }

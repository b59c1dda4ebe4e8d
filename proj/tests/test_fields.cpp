#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "fracpoisson/errors.hpp"
#include "fracpoisson/fields.hpp"
#include "fracpoisson/stats.hpp"
#include "fracpoisson/subordinate.hpp"

namespace fp = fracpoisson;

namespace {

double poisson_pmf(double mean, std::uint64_t k) {
  return std::exp(static_cast<double>(k) * std::log(mean) - mean - std::lgamma(static_cast<double>(k) + 1.0));
}

}  // namespace

TEST(PoissonField, MeanCount) {
  std::vector<double> c(10000);
  for (std::size_t i = 0; i < c.size(); ++i) {
    fp::RandomSource rng(1, i);
    c[i] = static_cast<double>(fp::simulate_prf(10.0, 2.0, rng).count_in(2.0, 2.0));
  }
  const auto m = fp::mc_moments(c);
  EXPECT_NEAR(m.mean, 40.0, 4.0 * *m.mean_se);
}

TEST(PoissonField, DisjointQuadrantsUncorrelated) {
  std::vector<double> a(10000), b(10000);
  for (std::size_t i = 0; i < a.size(); ++i) {
    fp::RandomSource rng(2, i);
    const auto f = fp::simulate_prf(5.0, 2.0, rng);
    a[i] = static_cast<double>(f.count_in(0.0, 0.0, 1.0, 1.0));
    b[i] = static_cast<double>(f.count_in(1.0, 1.0, 2.0, 2.0));
  }
  const auto m = fp::mc_moments(a, b);
  EXPECT_LT(std::abs(m.covariance), 4.0 * *m.covariance_se);
}

TEST(PoissonField, ZeroRateIsEmpty) {
  fp::RandomSource rng(3, 0);
  EXPECT_TRUE(fp::simulate_prf(0.0, 3.0, rng).points.empty());
}

TEST(Fprf, NearClassicalQuadrantCounts) {
  std::vector<std::uint64_t> c(5000);
  for (std::size_t i = 0; i < c.size(); ++i) {
    fp::RandomSource rng(4, i);
    const auto f = fp::simulate_fprf(fp::Alpha(0.999), fp::Alpha(0.999), 8.0, 1.0, 1e-3, fp::CellLaw::poisson, rng);
    c[i] = f.field.count_in(0.5, 0.5);
  }
  EXPECT_TRUE(fp::chi_square(c, [](std::uint64_t k) { return poisson_pmf(2.0, k); }).pass);
}

TEST(Fprf, MeanTotalCount) {
  const double a1 = 0.9, a2 = 0.75, lambda = 100.0;
  std::vector<double> c(2000);
  for (std::size_t i = 0; i < c.size(); ++i) {
    fp::RandomSource rng(5, i);
    c[i] = static_cast<double>(
        fp::simulate_fprf(fp::Alpha(a1), fp::Alpha(a2), lambda, 1.0, 1e-3, fp::CellLaw::bernoulli, rng).field.count_in(1.0, 1.0));
  }
  const auto m = fp::mc_moments(c);
  EXPECT_NEAR(m.mean, lambda / (std::tgamma(1.0 + a1) * std::tgamma(1.0 + a2)), 4.0 * *m.mean_se);
}

TEST(Fprf, CellLawsAgree) {
  std::vector<std::uint64_t> a(5000), b(5000);
  for (std::size_t i = 0; i < a.size(); ++i) {
    fp::RandomSource r1(6, i), r2(7, i);
    a[i] = fp::simulate_fprf(fp::Alpha(0.8), fp::Alpha(0.6), 100.0, 1.0, 1e-3, fp::CellLaw::poisson, r1).field.count_in(1.0, 1.0);
    b[i] = fp::simulate_fprf(fp::Alpha(0.8), fp::Alpha(0.6), 100.0, 1.0, 1e-3, fp::CellLaw::bernoulli, r2).field.count_in(1.0, 1.0);
  }
  EXPECT_TRUE(fp::chi_square(a, b).pass);
}

TEST(Fprf, ConditionalIndependenceOfDisjointRectangles) {
  std::vector<double> a(5000), b(5000);
  for (std::size_t i = 0; i < a.size(); ++i) {
    fp::RandomSource rng(8, i);
    const auto f = fp::simulate_fprf(fp::Alpha(0.7), fp::Alpha(0.8), 30.0, 1.0, 1e-3, fp::CellLaw::poisson, rng);
    const auto centred = [&](double x0, double y0, double x1, double y1) {
      const double mean = 30.0 * (f.path1.interpolated(x1) - f.path1.interpolated(x0)) *
                          (f.path2.interpolated(y1) - f.path2.interpolated(y0));
      return static_cast<double>(f.field.count_in(x0, y0, x1, y1)) - mean;
    };
    a[i] = centred(0.0, 0.0, 0.5, 0.5);
    b[i] = centred(0.5, 0.5, 1.0, 1.0);
  }
  const auto m = fp::mc_moments(a, b);
  EXPECT_LT(std::abs(m.covariance), 4.0 * *m.covariance_se);
}

TEST(Fprf, ParameterChecks) {
  fp::RandomSource rng(9, 0);
  EXPECT_THROW(fp::simulate_fprf(fp::Alpha(0.5), fp::Alpha(0.5), 2000.0, 1.0, 0.01, fp::CellLaw::bernoulli, rng),
               fp::DomainError);
  EXPECT_THROW(fp::simulate_fprf(fp::Alpha(0.5), fp::Alpha(0.5), 1.0, 1.0, 0.05, fp::CellLaw::poisson, rng),
               fp::DomainError);
}

TEST(FprfPmf, ClassicalDrawsGivePoisson) {
  fp::RandomSource rng(10, 0);
  const auto p = fp::fprf_pmf_mc(fp::Alpha(1.0), fp::Alpha(1.0), 2.0, 1.5, 2.0, 15, 50, rng);
  for (int k = 0; k <= 15; ++k) EXPECT_NEAR(p.probs[k], poisson_pmf(6.0, k), 1e-14);
}

TEST(FprfPmf, NormalizationAndMean) {
  fp::RandomSource rng(11, 0);
  const double lambda = 10.0, t = 5.0;
  const fp::Alpha a1(0.5), a2(0.75);
  const std::size_t n = 600;
  const auto p = fp::fprf_pmf_mc(a1, a2, lambda, t, t, 1000, n, rng);
  double total = 0.0, mean = 0.0;
  for (int k = 0; k <= p.k_max(); ++k) {
    total += p.probs[k];
    mean += k * p.probs[k];
  }
  EXPECT_NEAR(total + p.tail_mass, 1.0, 1e-12);
  EXPECT_LT(std::abs(p.tail_mass), 1e-3);
  const double m1 = fp::inverse_moment(a1, t, 1.0), m2 = fp::inverse_moment(a2, t, 1.0);
  const double v1 = fp::inverse_moment(a1, t, 2.0) - m1 * m1;
  const double v2 = fp::inverse_moment(a2, t, 2.0) - m2 * m2;
  const double se = lambda * std::sqrt((v1 * m2 * m2 + v2 * m1 * m1) / static_cast<double>(n));
  EXPECT_NEAR(mean, lambda * m1 * m2, 4.0 * se);
}

TEST(FprfMoments, ClosedForms) {
  const fp::Alpha a1(0.9), a2(0.75);
  const auto m = fp::fprf_moments(a1, a2, 100.0, {1.0, 1.0}, {1.0, 1.0});
  EXPECT_NEAR(m.mean, 100.0 / (std::tgamma(1.9) * std::tgamma(1.75)), 1e-10);
  EXPECT_NEAR(m.variance, fp::fprf_variance(a1, a2, 100.0, {1.0, 1.0}), 1e-10 * m.variance);
  EXPECT_NEAR(m.covariance, m.variance, 1e-10 * m.variance);
  const auto classical = fp::fprf_moments(fp::Alpha(1.0), fp::Alpha(1.0), 3.0, {2.0, 1.5}, {2.0, 1.5});
  EXPECT_NEAR(classical.variance, 9.0, 1e-10);
  EXPECT_DOUBLE_EQ(fp::fprf_hurst(a1, a2), 0.825);
}

TEST(FprfMoments, EngineMatchesStableFormulas) {
  const fp::Alpha a1(0.6), a2(0.85);
  const fp::Coord pts[] = {{0.3, 2.0}, {1.0, 1.0}, {4.0, 0.5}};
  for (const auto& t : pts) {
    for (const auto& s : pts) {
      const auto m = fp::fprf_moments(a1, a2, 7.0, t, s);
      EXPECT_NEAR(m.covariance, fp::fprf_covariance(a1, a2, 7.0, t, s), 1e-10 * std::max(1.0, m.covariance));
    }
    EXPECT_NEAR(fp::fprf_moments(a1, a2, 7.0, t, t).variance, fp::fprf_variance(a1, a2, 7.0, t), 1e-10 * 50.0);
  }
}

TEST(FprfMoments, DeterministicTimeChange) {
  fp::CovInputs in;
  in.mean_n11 = 2.0;
  in.var_n11 = 2.0;
  in.u1 = in.u2 = [](double x) { return x; };
  in.m2_1 = in.m2_2 = [](double x) { return x * x; };
  in.cov1 = in.cov2 = [](double, double) { return 0.0; };
  const auto r = fp::parameter_change_cov(in, {1.0, 3.0}, {2.0, 0.5});
  EXPECT_NEAR(r.covariance, 2.0 * 1.0 * 0.5, 1e-15);
}

TEST(FprfMoments, VarianceGrowthExponent) {
  const fp::Alpha a1(0.7), a2(0.4);
  const double v1 = fp::fprf_variance(a1, a2, 1.0, {100.0, 100.0});
  const double v2 = fp::fprf_variance(a1, a2, 1.0, {10000.0, 10000.0});
  EXPECT_NEAR(std::log(v2 / v1) / std::log(100.0), 2.0 * (0.7 + 0.4), 0.02);
}

TEST(IncreasingPath, EntryTimes) {
  const fp::IncreasingPath g({0.0, 1.0, 2.0}, {0.0, 1.0, 1.0}, {0.0, 0.5, 2.0});
  EXPECT_DOUBLE_EQ(g.entry_time(0.5, 0.1), 0.5);
  EXPECT_DOUBLE_EQ(g.entry_time(0.2, 1.25), 1.5);
  EXPECT_TRUE(std::isinf(g.entry_time(1.5, 0.0)));
  EXPECT_THROW(fp::IncreasingPath({0.0, 1.0}, {0.0, 1.0}, {0.0, -1.0}), fp::DomainError);
}

TEST(Trace, DiagonalOnPoissonFieldIsPoisson) {
  std::vector<std::uint64_t> c(5000);
  std::vector<double> t_samples;
  for (std::size_t i = 0; i < c.size(); ++i) {
    fp::RandomSource rng(12, i);
    auto f = fp::simulate_fprf(fp::Alpha(1.0), fp::Alpha(1.0), 4.0, 1.0, 1e-3, fp::CellLaw::poisson, rng);
    const auto tr = fp::trace_along_path(f, fp::IncreasingPath::diagonal(1.0), 5);
    c[i] = tr[3].count;
    for (std::size_t j = 1; j < tr.size(); ++j) ASSERT_GE(tr[j].count, tr[j - 1].count);
  }
  EXPECT_TRUE(fp::chi_square(c, [](std::uint64_t k) { return poisson_pmf(4.0 * 0.75 * 0.75, k); }).pass);
}

TEST(Trace, FrozenPathStopsCounting) {
  fp::RandomSource rng(13, 0);
  const auto f = fp::simulate_fprf(fp::Alpha(0.8), fp::Alpha(0.8), 50.0, 1.0, 1e-3, fp::CellLaw::poisson, rng);
  const fp::IncreasingPath g({0.0, 0.5, 1.0}, {0.0, 0.5, 0.5}, {0.0, 0.5, 0.5});
  const auto tr = fp::trace_along_path(f, g, 11);
  for (std::size_t j = 6; j < tr.size(); ++j) EXPECT_EQ(tr[j].count, tr[5].count);
}

TEST(Trace, PathOutsideWindow) {
  fp::RandomSource rng(14, 0);
  const auto f = fp::simulate_fprf(fp::Alpha(0.8), fp::Alpha(0.8), 5.0, 1.0, 1e-3, fp::CellLaw::poisson, rng);
  EXPECT_THROW(fp::trace_along_path(f, fp::IncreasingPath::diagonal(2.0), 5), fp::HorizonError);
}

TEST(Reparametrization, UnitRateGapsAndCounts) {
  std::vector<double> gaps;
  std::vector<std::uint64_t> at5;
  for (std::size_t i = 0; i < 600; ++i) {
    fp::RandomSource rng(15, i);
    const auto f = fp::simulate_fprf(fp::Alpha(0.85), fp::Alpha(0.7), 60.0, 1.0, 1e-3, fp::CellLaw::poisson, rng);
    const auto diag = fp::IncreasingPath::diagonal(1.0);
    if (fp::trace_intensity(f, diag, 60.0, 1.0) < 10.0) continue;
    const auto ev = fp::reparametrize_to_standard(f, diag, 60.0, 10.0);
    double prev = 0.0;
    for (std::size_t k = 0; k < 5 && k < ev.times.size(); ++k) {
      gaps.push_back(ev.times[k] - prev);
      prev = ev.times[k];
    }
    at5.push_back(ev.count_at(5.0));
  }
  EXPECT_TRUE(fp::ks_test(gaps, [](double x) { return x <= 0.0 ? 0.0 : -std::expm1(-x); }).pass);
  EXPECT_TRUE(fp::chi_square(at5, [](std::uint64_t k) { return poisson_pmf(5.0, k); }).pass);
}

TEST(Reparametrization, ClassicalDiagonalTimes) {
  fp::RandomSource rng(16, 0);
  const double lambda = 40.0;
  const auto f = fp::simulate_fprf(fp::Alpha(1.0), fp::Alpha(1.0), lambda, 1.0, 1e-3, fp::CellLaw::poisson, rng);
  const auto diag = fp::IncreasingPath::diagonal(1.0);
  const auto ev = fp::reparametrize_to_standard(f, diag, lambda);
  std::vector<double> entry;
  for (const auto& p : f.field.points) entry.push_back(std::max(p.x, p.y));
  std::sort(entry.begin(), entry.end());
  ASSERT_EQ(entry.size(), ev.times.size());
  for (std::size_t i = 0; i < entry.size(); ++i) EXPECT_NEAR(std::sqrt(ev.times[i] / lambda), entry[i], 1e-9);
}

TEST(Records, ZeroIntensity) {
  fp::RandomSource rng(17, 0);
  const auto c = fp::gergely_yezhov_counts([](double) { return 0.0; }, {0.0, 1.0, 2.0}, rng);
  for (auto v : c) EXPECT_EQ(v, 0u);
}

TEST(Records, LinearIntensityIsPoisson) {
  std::vector<std::uint64_t> c(10000);
  for (std::size_t i = 0; i < c.size(); ++i) {
    fp::RandomSource rng(18, i);
    const auto v = fp::gergely_yezhov_counts([](double t) { return t; }, {0.25, 0.5, 0.75, 1.0}, rng);
    for (std::size_t j = 1; j < v.size(); ++j) ASSERT_GE(v[j], v[j - 1]);
    c[i] = v.back();
  }
  EXPECT_TRUE(fp::chi_square(c, [](std::uint64_t k) { return poisson_pmf(1.0, k); }).pass);
}

TEST(Records, DrawCap) {
  fp::RandomSource rng(19, 0);
  EXPECT_THROW(fp::gergely_yezhov_counts([](double t) { return 30.0 * t; }, {1.0}, rng, 1000), fp::ResourceError);
}

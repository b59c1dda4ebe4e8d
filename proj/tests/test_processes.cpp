#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "fracpoisson/errors.hpp"
#include "fracpoisson/processes.hpp"
#include "fracpoisson/specfun.hpp"
#include "fracpoisson/stats.hpp"
#include "oracle_values.hpp"

namespace fp = fracpoisson;
namespace oracle = fracpoisson::oracle;

namespace {

double poisson_pmf(double mean, std::uint64_t k) {
  return std::exp(static_cast<double>(k) * std::log(mean) - mean - std::lgamma(static_cast<double>(k) + 1.0));
}

template <class Sim>
std::vector<std::uint64_t> counts(std::size_t n, std::uint64_t seed, double t, Sim&& sim) {
  std::vector<std::uint64_t> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    fp::RandomSource rng(seed, i);
    out[i] = sim(rng).count_at(t);
  }
  return out;
}

std::vector<double> as_double(const std::vector<std::uint64_t>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(FppRenewal, ClassicalCase) {
  const auto c = counts(10000, 1, 5.0, [](fp::RandomSource& r) { return fp::simulate_fpp_renewal(fp::Alpha(1.0), 2.0, 5.0, r); });
  const auto r = fp::chi_square(c, [](std::uint64_t k) { return poisson_pmf(10.0, k); });
  EXPECT_TRUE(r.pass) << "p=" << r.p_value;
}

TEST(FppRenewal, MeanAndEmptyProbability) {
  const auto c = counts(20000, 2, 1.0, [](fp::RandomSource& r) { return fp::simulate_fpp_renewal(fp::Alpha(0.5), 1.0, 1.0, r); });
  const auto m = fp::mc_moments(as_double(c));
  EXPECT_NEAR(m.mean, 1.0 / std::tgamma(1.5), 4.0 * *m.mean_se);
  std::vector<double> zero(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) zero[i] = c[i] == 0 ? 1.0 : 0.0;
  const auto z = fp::mc_moments(zero);
  EXPECT_NEAR(z.mean, oracle::kMlHalfNeg_1, 4.0 * *z.mean_se);
}

TEST(FppTimeChange, AgreesWithRenewal) {
  const auto a = counts(10000, 3, 1.0, [](fp::RandomSource& r) { return fp::simulate_fpp_renewal(fp::Alpha(0.6), 1.5, 1.0, r); });
  const auto b = counts(10000, 4, 1.0, [](fp::RandomSource& r) { return fp::simulate_fpp_timechange(fp::Alpha(0.6), 1.5, 1.0, r).events; });
  const auto r = fp::chi_square(a, b);
  EXPECT_TRUE(r.pass) << "p=" << r.p_value;
}

TEST(FppTimeChange, NearClassical) {
  const auto c = counts(10000, 5, 1.0, [](fp::RandomSource& r) { return fp::simulate_fpp_timechange(fp::Alpha(0.999), 3.0, 1.0, r).events; });
  EXPECT_TRUE(fp::chi_square(c, [](std::uint64_t k) { return poisson_pmf(3.0, k); }).pass);
}

TEST(FppTimeChange, EventsOrderedWithinHorizon) {
  fp::RandomSource rng(6, 0);
  for (int r = 0; r < 50; ++r) {
    const auto ev = fp::simulate_fpp_timechange(fp::Alpha(0.7), 4.0, 2.0, rng).events;
    for (std::size_t i = 0; i < ev.times.size(); ++i) {
      EXPECT_GE(ev.times[i], 0.0);
      EXPECT_LE(ev.times[i], 2.0);
      if (i > 0) EXPECT_GE(ev.times[i], ev.times[i - 1]);
    }
  }
}

TEST(FppPmf, PoissonReduction) {
  const auto p = fp::fpp_pmf(fp::Alpha(1.0), 2.0, 3.0, 25);
  for (int k = 0; k <= 25; ++k) EXPECT_NEAR(p.probs[k], poisson_pmf(6.0, k), 1e-14);
}

TEST(FppPmf, OracleValues) {
  const auto p1 = fp::fpp_pmf(fp::Alpha(0.5), 1.0, 1.0, 5);
  for (int k = 0; k <= 5; ++k) EXPECT_NEAR(p1.probs[k], oracle::kFppPmfHalfT1[k], 1e-12);
  const auto p25 = fp::fpp_pmf(fp::Alpha(0.5), 1.0, 25.0, 20);
  const int ks[] = {0, 1, 2, 3, 5, 10, 20};
  for (int i = 0; i < 7; ++i) EXPECT_NEAR(p25.probs[ks[i]], oracle::kFppPmfHalfT25[i], 1e-10);
}

TEST(FppPmf, MeanFromProbabilities) {
  const auto p = fp::fpp_pmf(fp::Alpha(0.5), 1.0, 1.0, 80);
  EXPECT_NEAR(p.mean(), 1.0 / std::tgamma(1.5), 1e-6);
  EXPECT_NEAR(p.tail_mass, 0.0, 1e-12);
}

TEST(FppMoments, ClosedForms) {
  EXPECT_NEAR(fp::fpp_moments(fp::Alpha(1.0), 2.0, 3.0, 3.0).variance, 6.0, 1e-12);
  const auto m = fp::fpp_moments(fp::Alpha(0.5), 1.0, 1.0, 1.0);
  EXPECT_NEAR(m.variance, 2.0 - 1.0 / std::pow(std::tgamma(1.5), 2) + 1.0 / std::tgamma(1.5), 1e-10);
  for (double t : {0.4, 1.7, 6.0}) {
    const auto r = fp::fpp_moments(fp::Alpha(0.65), 1.3, t, t);
    EXPECT_NEAR(r.covariance, r.variance, 1e-10 * r.variance);
  }
}

TEST(FppMoments, MonteCarloCounts) {
  const auto m = fp::mc_moments(
      [](fp::RandomSource& r) {
        const auto ev = fp::simulate_fpp_renewal(fp::Alpha(0.7), 2.0, 2.0, r);
        return std::pair{static_cast<double>(ev.count_at(1.0)), static_cast<double>(ev.count_at(2.0))};
      },
      10000, 7);
  const auto exact = fp::fpp_moments(fp::Alpha(0.7), 2.0, 1.0, 2.0);
  EXPECT_NEAR(m.mean, exact.mean, 4.0 * *m.mean_se);
  EXPECT_NEAR(m.variance, exact.variance, 4.0 * *m.variance_se);
  EXPECT_NEAR(m.covariance, exact.covariance, 4.0 * *m.covariance_se);
}

TEST(FppHurst, IndexEqualsAlpha) {
  EXPECT_DOUBLE_EQ(fp::fpp_hurst(fp::Alpha(0.5)), 0.5);
  EXPECT_DOUBLE_EQ(fp::fpp_hurst(fp::Alpha(0.9)), 0.9);
  EXPECT_THROW(fp::fpp_hurst(fp::Alpha(1.0)), fp::DomainError);
  const double h = fp::fpp_hurst_mc(fp::Alpha(0.6), 1.0, 100.0, 10000.0, 5, 20000, 3);
  EXPECT_NEAR(h, 0.6, 0.05);
}

TEST(Mfpp, DegenerateMixtureMatchesFpp) {
  const fp::MixedParams mp(fp::Alpha(0.4), fp::Alpha(0.8), 0.0, 1.0);
  const auto a = counts(10000, 8, 1.0, [&](fp::RandomSource& r) { return fp::simulate_mfpp(mp, 2.0, 1.0, r).events; });
  const auto b = counts(10000, 9, 1.0, [](fp::RandomSource& r) { return fp::simulate_fpp_renewal(fp::Alpha(0.8), 2.0, 1.0, r); });
  EXPECT_TRUE(fp::chi_square(a, b).pass);
}

TEST(Mfpp, MeanAndVariance) {
  const fp::MixedParams mp(fp::Alpha(0.5), fp::Alpha(0.9), 0.5, 0.5);
  const auto c = counts(10000, 10, 1.0, [&](fp::RandomSource& r) { return fp::simulate_mfpp(mp, 2.0, 1.0, r).events; });
  const auto m = fp::mc_moments(as_double(c));
  const auto exact = fp::mfpp_moments(mp, 2.0, 1.0, 1.0);
  EXPECT_NEAR(m.mean, 2.0 * oracle::kMixedU_1, 4.0 * *m.mean_se + 2.0 * 5e-4);
  EXPECT_NEAR(m.variance, exact.variance, 4.0 * *m.variance_se);
  EXPECT_GE(exact.variance, 0.0);
}

TEST(MfppP0, InitialValueAndReduction) {
  const fp::MixedParams mp(fp::Alpha(0.5), fp::Alpha(0.9), 0.5, 0.5);
  EXPECT_EQ(fp::mfpp_p0(mp, 1.0, 0.0).value, 1.0);
  const fp::MixedParams degenerate(fp::Alpha(0.5), fp::Alpha(0.8), 0.0, 1.0);
  EXPECT_NEAR(fp::mfpp_p0(degenerate, 1.5, 2.0).value, fp::mittag_leffler(0.8, -1.5 * std::pow(2.0, 0.8)), 1e-13);
}

TEST(MfppP0, InversionMatrix) {
  struct Case {
    double a1, a2, c1, t;
  };
  const Case cases[] = {{0.3, 0.8, 0.2, 0.5}, {0.5, 0.9, 0.5, 2.0}, {0.6, 0.7, 0.7, 1.5}, {0.5, 0.9, 0.5, 1.0}};
  for (int i = 0; i < 4; ++i) {
    const auto& c = cases[i];
    const fp::MixedParams mp(fp::Alpha(c.a1), fp::Alpha(c.a2), c.c1, 1.0 - c.c1);
    EXPECT_NEAR(fp::mfpp_p0(mp, 1.0, c.t).value, oracle::kMfppP0Matrix[i], 1e-6) << "case " << i;
  }
}

TEST(MfppPmf, LaplaceAndConvolution) {
  const fp::MixedParams mp(fp::Alpha(0.5), fp::Alpha(0.9), 0.5, 0.5);
  const auto lap = fp::mfpp_pmf(mp, 1.0, 1.0, 10, fp::MfppMethod::laplace);
  const auto conv = fp::mfpp_pmf(mp, 1.0, 1.0, 10, fp::MfppMethod::convolution);
  for (int k = 0; k <= 10; ++k) {
    EXPECT_NEAR(lap.probs[k], oracle::kMfppPmfT1[k], 1e-10);
    EXPECT_NEAR(conv.probs[k], oracle::kMfppPmfT1[k], 1e-5);
  }
  EXPECT_NEAR(lap.probs[0], fp::mfpp_p0(mp, 1.0, 1.0).value, 1e-8);
  double total = lap.tail_mass;
  for (double p : lap.probs) total += p;
  EXPECT_NEAR(total, 1.0, 1e-12);
}

TEST(MfppPmf, DegenerateMixture) {
  const fp::MixedParams mp(fp::Alpha(0.3), fp::Alpha(0.7), 0.0, 1.0);
  const auto a = fp::mfpp_pmf(mp, 1.2, 1.5, 8, fp::MfppMethod::laplace);
  const auto b = fp::fpp_pmf(fp::Alpha(0.7), 1.2, 1.5, 8);
  for (int k = 0; k <= 8; ++k) EXPECT_NEAR(a.probs[k], b.probs[k], 1e-6);
}

TEST(MfppPmf, MonteCarloIsReproducibleAcrossJobs) {
  const fp::MixedParams mp(fp::Alpha(0.5), fp::Alpha(0.9), 0.5, 0.5);
  fp::MfppPmfOptions o;
  o.n_mc = 500;
  o.seed = 4;
  const auto a = fp::mfpp_pmf(mp, 1.0, 1.0, 6, fp::MfppMethod::montecarlo, o);
  o.jobs = 3;
  const auto b = fp::mfpp_pmf(mp, 1.0, 1.0, 6, fp::MfppMethod::montecarlo, o);
  EXPECT_EQ(a.probs, b.probs);
  EXPECT_EQ(a.std_errors, b.std_errors);
}

TEST(ConsistentTimeChange, LinearRateReproducesMfpp) {
  const fp::MixedParams mp(fp::Alpha(0.5), fp::Alpha(0.9), 0.5, 0.5);
  const auto inner = fp::ConsistentFunction::linear(2.0);
  std::vector<std::uint64_t> a(8000), b(8000);
  for (std::size_t i = 0; i < a.size(); ++i) {
    fp::RandomSource r1(11, i), r2(12, i);
    const auto path = fp::invert_path(fp::simulate_subordinator(mp, 5e-4, 1.0, r1));
    a[i] = fp::apply_consistent_time_change(inner, path, 1.0, r1).count_at(1.0);
    b[i] = fp::simulate_mfpp(mp, 2.0, 1.0, r2).events.count_at(1.0);
  }
  EXPECT_TRUE(fp::chi_square(a, b).pass);
}

TEST(ConsistentTimeChange, ZeroFunctionGivesNoEvents) {
  const fp::ConsistentFunction zero({0.0, 1.0}, {0.0, 0.0}, fp::ConsistentFunction::Rule::linear);
  fp::RandomSource rng(13, 0);
  const auto path = fp::invert_path(fp::simulate_subordinator(fp::Alpha(0.6), 1e-3, 2.0, rng));
  EXPECT_TRUE(fp::apply_consistent_time_change(zero, path, 2.0, rng).times.empty());
}

TEST(ConsistentTimeChange, MeanCountMatchesCompensator) {
  const fp::ConsistentFunction lam({0.0, 0.5, 1.0}, {0.0, 0.2, 1.5}, fp::ConsistentFunction::Rule::linear, 3.0);
  const std::size_t n = 10000;
  std::vector<double> c(n), comp(n);
  for (std::size_t i = 0; i < n; ++i) {
    fp::RandomSource rng(14, i);
    const auto path = fp::invert_path(fp::simulate_subordinator(fp::Alpha(0.7), 5e-4, 1.5, rng));
    c[i] = static_cast<double>(fp::apply_consistent_time_change(lam, path, 1.5, rng).count_at(1.5));
    comp[i] = lam(path.interpolated(1.5));
  }
  const auto mc = fp::mc_moments(c);
  const auto mm = fp::mc_moments(comp);
  EXPECT_NEAR(mc.mean, mm.mean, 4.0 * std::hypot(*mc.mean_se, *mm.mean_se));
}

#include "fracpoisson/stats.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

#include <boost/math/special_functions/gamma.hpp>

#include "fracpoisson/errors.hpp"
#include "fracpoisson/processes.hpp"
#include "fracpoisson/subordinate.hpp"

namespace fracpoisson {

namespace {

constexpr std::size_t kMinSamples = 100;
constexpr double kMinExpected = 5.0;

void require_samples(std::size_t n, const char* who) {
  if (n < kMinSamples) {
    std::ostringstream os;
    os << who << ": insufficient data (" << n << " samples, need " << kMinSamples << ")";
    throw DomainError(os.str());
  }
}

TestResult make_result(std::string name, double statistic, double p, std::size_t n, int dof, double level) {
  TestResult r;
  r.name = std::move(name);
  r.statistic = statistic;
  r.p_value = std::clamp(p, 0.0, 1.0);
  r.n = n;
  r.dof = dof;
  r.level = level;
  r.pass = r.p_value > level;
  return r;
}

// Merges adjacent categories left to right until every merged category has
// expected count >= kMinExpected; a short remainder joins the last category.
std::vector<std::size_t> pool_bins(const std::vector<double>& expected) {
  std::vector<std::size_t> group(expected.size(), 0);
  std::size_t current = 0;
  double acc = 0.0;
  std::size_t last_closed = 0;
  bool any_closed = false;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    group[i] = current;
    acc += expected[i];
    if (acc >= kMinExpected) {
      last_closed = current;
      any_closed = true;
      ++current;
      acc = 0.0;
    }
  }
  if (any_closed && acc < kMinExpected) {
    for (std::size_t i = 0; i < expected.size(); ++i) group[i] = std::min(group[i], last_closed);
  }
  return group;
}

}  // namespace

double chi_square_sf(double statistic, int dof) {
  if (dof <= 0) return 1.0;
  if (!(statistic > 0.0)) return 1.0;
  return boost::math::gamma_q(0.5 * dof, 0.5 * statistic);
}

double kolmogorov_sf(double x) {
  if (x <= 0.0) return 1.0;
  if (x < 0.2) return 1.0;
  double sum = 0.0;
  for (int j = 1; j <= 100; ++j) {
    const double term = std::exp(-2.0 * j * j * x * x);
    sum += (j & 1) ? term : -term;
    if (term < 1e-18) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

MomentReport mc_moments(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  if (n < 2) throw DomainError("mc_moments: need at least 2 samples");
  if (!y.empty() && y.size() != n) throw DomainError("mc_moments: x and y must have equal length");
  const double nd = static_cast<double>(n);
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / nd;
  double m2 = 0.0, m4 = 0.0;
  for (double v : x) {
    const double d = v - mx;
    m2 += d * d;
    m4 += d * d * d * d;
  }
  m2 /= nd;
  m4 /= nd;
  MomentReport r;
  r.n = n;
  r.mean = mx;
  r.variance = m2 * nd / (nd - 1.0);
  r.mean_se = std::sqrt(r.variance / nd);
  r.variance_se = std::sqrt(std::max(0.0, m4 - m2 * m2) / nd);
  if (!y.empty()) {
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / nd;
    double c = 0.0;
    for (std::size_t i = 0; i < n; ++i) c += (x[i] - mx) * (y[i] - my);
    c /= nd;
    double c2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double d = (x[i] - mx) * (y[i] - my) - c;
      c2 += d * d;
    }
    r.covariance = c * nd / (nd - 1.0);
    r.covariance_se = std::sqrt(c2 / nd / nd);
  } else {
    r.covariance = r.variance;
    r.covariance_se = r.variance_se;
  }
  return r;
}

MomentReport mc_moments(const std::function<std::pair<double, double>(RandomSource&)>& sampler, std::size_t n,
                        std::uint64_t seed, std::uint64_t base_stream, unsigned jobs) {
  std::vector<double> x(n), y(n);
  parallel_for_index(n, jobs, [&](std::size_t i) {
    RandomSource rng(seed, base_stream + i);
    const auto [a, b] = sampler(rng);
    x[i] = a;
    y[i] = b;
  });
  return mc_moments(x, y);
}

TestResult ks_test(std::vector<double> samples, const std::function<double(double)>& cdf, double level) {
  require_samples(samples.size(), "ks_test");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  const double sn = std::sqrt(n);
  return make_result("ks", d, kolmogorov_sf((sn + 0.12 + 0.11 / sn) * d), samples.size(), 0, level);
}

TestResult ks_test(std::vector<double> a, std::vector<double> b, double level) {
  require_samples(a.size(), "ks_test");
  require_samples(b.size(), "ks_test");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double v = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= v) ++i;
    while (j < b.size() && b[j] <= v) ++j;
    d = std::max(d, std::fabs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  const double ne = std::sqrt(na * nb / (na + nb));
  return make_result("ks2", d, kolmogorov_sf((ne + 0.12 + 0.11 / ne) * d), a.size() + b.size(), 0, level);
}

TestResult chi_square(const std::vector<std::uint64_t>& samples, const std::function<double(std::uint64_t)>& pmf,
                      double level) {
  require_samples(samples.size(), "chi_square");
  const double n = static_cast<double>(samples.size());
  const std::uint64_t top = *std::max_element(samples.begin(), samples.end());
  // Categories 0..top, then the upper tail k > top.
  std::vector<double> expected;
  double cumulative = 0.0;
  for (std::uint64_t k = 0; k <= top; ++k) {
    const double p = pmf(k);
    expected.push_back(n * p);
    cumulative += p;
  }
  expected.push_back(n * std::max(0.0, 1.0 - cumulative));
  std::vector<double> observed(expected.size(), 0.0);
  for (auto k : samples) observed[k] += 1.0;
  const auto group = pool_bins(expected);
  const std::size_t groups = group.back() + 1;
  std::vector<double> e(groups, 0.0), o(groups, 0.0);
  for (std::size_t i = 0; i < expected.size(); ++i) {
    e[group[i]] += expected[i];
    o[group[i]] += observed[i];
  }
  double stat = 0.0;
  for (std::size_t g = 0; g < groups; ++g) {
    if (e[g] > 0.0) stat += (o[g] - e[g]) * (o[g] - e[g]) / e[g];
  }
  const int dof = static_cast<int>(groups) - 1;
  if (dof < 1) throw DomainError("chi_square: fewer than two categories after pooling");
  return make_result("chi2", stat, chi_square_sf(stat, dof), samples.size(), dof, level);
}

TestResult chi_square(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b, double level) {
  require_samples(a.size(), "chi_square");
  require_samples(b.size(), "chi_square");
  const std::uint64_t top = std::max(*std::max_element(a.begin(), a.end()), *std::max_element(b.begin(), b.end()));
  std::vector<double> ca(top + 1, 0.0), cb(top + 1, 0.0);
  for (auto k : a) ca[k] += 1.0;
  for (auto k : b) cb[k] += 1.0;
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  const double total = na + nb;
  // Pool on the smaller row's expected counts.
  std::vector<double> expected_min(top + 1);
  for (std::size_t k = 0; k <= top; ++k) expected_min[k] = (ca[k] + cb[k]) * std::min(na, nb) / total;
  const auto group = pool_bins(expected_min);
  const std::size_t groups = group.back() + 1;
  std::vector<double> ga(groups, 0.0), gb(groups, 0.0);
  for (std::size_t k = 0; k <= top; ++k) {
    ga[group[k]] += ca[k];
    gb[group[k]] += cb[k];
  }
  double stat = 0.0;
  for (std::size_t g = 0; g < groups; ++g) {
    const double col = ga[g] + gb[g];
    const double ea = col * na / total;
    const double eb = col * nb / total;
    if (ea > 0.0) stat += (ga[g] - ea) * (ga[g] - ea) / ea;
    if (eb > 0.0) stat += (gb[g] - eb) * (gb[g] - eb) / eb;
  }
  const int dof = static_cast<int>(groups) - 1;
  if (dof < 1) throw DomainError("chi_square: fewer than two categories after pooling");
  return make_result("chi2_two_sample", stat, chi_square_sf(stat, dof), a.size() + b.size(), dof, level);
}

MartingaleDiagnostic martingale_diagnostic(const std::vector<EventTimes>& events, const std::vector<InversePath>& paths,
                                           double lambda, double s, double t, int bins, double level) {
  if (!(s < t)) throw DomainError("martingale_diagnostic: need s < t");
  if (bins < 1) throw DomainError("martingale_diagnostic: bins must be >= 1");
  if (events.size() != paths.size()) throw DomainError("martingale_diagnostic: events and paths differ in length");
  const std::size_t n = events.size();
  const std::size_t per_bin = n / static_cast<std::size_t>(bins);
  if (per_bin < 30) throw DomainError("martingale_diagnostic: insufficient paths per bin (need 30)");
  std::vector<double> ms(n), inc(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double m_s = static_cast<double>(events[i].count_at(s)) - lambda * paths[i].interpolated(s);
    const double m_t = static_cast<double>(events[i].count_at(t)) - lambda * paths[i].interpolated(t);
    ms[i] = m_s;
    inc[i] = m_t - m_s;
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return ms[a] < ms[b]; });
  MartingaleDiagnostic out;
  double stat = 0.0;
  bool all_within = true;
  for (int b = 0; b < bins; ++b) {
    const std::size_t lo = static_cast<std::size_t>(b) * n / bins;
    const std::size_t hi = static_cast<std::size_t>(b + 1) * n / bins;
    std::vector<double> x;
    for (std::size_t i = lo; i < hi; ++i) x.push_back(inc[order[i]]);
    const auto m = mc_moments(x);
    const double z = *m.mean_se > 0.0 ? m.mean / *m.mean_se : 0.0;
    out.bin_z.push_back(z);
    out.bin_sizes.push_back(x.size());
    stat += z * z;
    all_within = all_within && std::fabs(z) <= 4.0;
  }
  out.test = make_result("martingale", stat, chi_square_sf(stat, bins), n, bins, level);
  out.test.pass = all_within;
  return out;
}

}  // namespace fracpoisson

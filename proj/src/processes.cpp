#include "fracpoisson/processes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>

#include "fracpoisson/errors.hpp"
#include "fracpoisson/fraccalc.hpp"
#include "fracpoisson/parallel.hpp"
#include "fracpoisson/sampling.hpp"
#include "fracpoisson/specfun.hpp"

namespace fracpoisson {

namespace {

constexpr long double kEpsL = std::numeric_limits<long double>::epsilon();
constexpr int kNeumannMaxTerms = 80;
constexpr double kNeumannRatio = 1e-14;

void check_event_cap(std::size_t n) {
  if (n >= kMaxEvents) {
    std::ostringstream os;
    os << "event count exceeds the cap of " << kMaxEvents;
    throw ResourceError(os.str());
  }
}

// Poisson arrivals of rate lambda on the internal clock, mapped back through
// the interpolated inverse path.
EventTimes time_changed_events(const InversePath& path, double lambda, double t_end, RandomSource& rng) {
  EventTimes ev{{}, t_end};
  const double top = path.interpolated(t_end);
  double u = rng.exponential() / lambda;
  while (u <= top) {
    check_event_cap(ev.times.size());
    ev.times.push_back(std::min(t_end, path.time_at_level(u)));
    u += rng.exponential() / lambda;
  }
  return ev;
}

// p_k = sum_j (-1)^j C(k+j, j) x^(k+j) / Gamma(alpha (k+j) + 1), certified to 1e-13.
std::optional<double> fpp_pk_series(double alpha, double x, int k) {
  const long double lx = std::log(static_cast<long double>(x));
  const long double lk = std::lgamma(static_cast<long double>(k) + 1.0L);
  long double sum = 0.0L;
  long double rounding = 0.0L;
  long double prev = std::numeric_limits<long double>::infinity();
  for (int j = 0; j < 4000; ++j) {
    const long double n = static_cast<long double>(k) + j;
    const long double lb = std::lgamma(n + 1.0L) - lk - std::lgamma(static_cast<long double>(j) + 1.0L);
    const long double lg = std::lgamma(static_cast<long double>(alpha) * n + 1.0L);
    const long double log_mag = lb + n * lx - lg;
    const long double mag = std::exp(log_mag);
    sum += (j & 1) ? -mag : mag;
    rounding += mag * (std::fabs(lb) + std::fabs(n * lx) + std::fabs(lg) + 4.0L) * kEpsL;
    if (j > 0 && mag <= prev && (mag == 0.0L || mag <= kEpsL * std::fabs(sum) * 1e-2L)) {
      if (rounding <= 1e-13L) return static_cast<double>(sum);
      return std::nullopt;
    }
    prev = mag;
  }
  return std::nullopt;
}

double fpp_pk_laplace(double alpha, double lambda, double t, int k) {
  const long double a = alpha;
  const long double lam = lambda;
  LaplaceTransform transform = [=](Complex s) {
    const Complex sa = std::pow(s, a);
    return std::pow(lam, static_cast<long double>(k)) * sa / s / std::pow(lam + sa, static_cast<long double>(k + 1));
  };
  return laplace_invert(transform, t);
}

void finish_pmf(Pmf& pmf) {
  double total = 0.0;
  for (double& p : pmf.probs) {
    p = std::clamp(p, 0.0, 1.0);
    total += p;
  }
  pmf.tail_mass = 1.0 - total;
}

// Sum_r (-a)^r z^(beta0 + rho r - 1) E^{r+1}_{alpha2, beta0 + rho r}(-b z^alpha2)
// with a = c1/c2, b = lambda/c2, rho = alpha2 - alpha1.
struct NeumannSum {
  double value = 0.0;
  bool converged = false;
  int terms = 0;
};

NeumannSum neumann_sum(const MixedParams& p, double lambda, double z, double beta0) {
  const double a = p.c1() / p.c2();
  const double b = lambda / p.c2();
  const double a2 = p.alpha2().value();
  const double rho = a2 - p.alpha1().value();
  const double arg = -b * std::pow(z, a2);
  NeumannSum out;
  double sum = 0.0;
  for (int r = 0; r < kNeumannMaxTerms; ++r) {
    const double beta = beta0 + rho * r;
    const double coef = std::pow(-a, r) * std::pow(z, beta - 1.0);
    double term = 0.0;
    if (coef != 0.0) term = coef * mittag_leffler3(a2, beta, r + 1.0, arg);
    sum += term;
    out.terms = r + 1;
    if (term == 0.0 || std::fabs(term) < kNeumannRatio * std::fabs(sum)) {
      out.converged = true;
      break;
    }
  }
  out.value = sum;
  return out;
}

double mfpp_pk_laplace(const MixedParams& p, double lambda, double t, int k) {
  const long double c1 = p.c1();
  const long double c2 = p.c2();
  const long double a1 = p.alpha1().value();
  const long double a2 = p.alpha2().value();
  const long double lam = lambda;
  LaplaceTransform transform = [=](Complex s) {
    const Complex phi = c1 * std::pow(s, a1) + c2 * std::pow(s, a2);
    return std::pow(lam, static_cast<long double>(k)) * phi / (s * std::pow(lam + phi, static_cast<long double>(k + 1)));
  };
  return laplace_invert(transform, t);
}

Pmf mfpp_pmf_convolution(const MixedParams& p, double lambda, double t, int k_max, std::size_t n) {
  if (n < 2) throw DomainError("mfpp_pmf: convolution needs at least 2 grid intervals");
  const double h = t / static_cast<double>(n);
  const double scale = lambda / p.c2();
  const double a2 = p.alpha2().value();
  // G(z) = int_0^z g and G2(z) = int_0^z G at the grid nodes.
  std::vector<double> big_g(n + 1, 0.0);
  std::vector<double> big_g2(n + 1, 0.0);
  for (std::size_t j = 1; j <= n; ++j) {
    const double z = h * static_cast<double>(j);
    const auto g1 = neumann_sum(p, lambda, z, a2 + 1.0);
    const auto g2 = neumann_sum(p, lambda, z, a2 + 2.0);
    if (!g1.converged || !g2.converged) {
      std::ostringstream os;
      os << "mfpp_pmf: kernel series did not converge at z=" << z;
      throw AccuracyError(os.str());
    }
    big_g[j] = scale * g1.value;
    big_g2[j] = scale * g2.value;
  }
  // First moment of g: int_0^z u g(u) du = z G(z) - G2(z).
  std::vector<double> moment(n + 1, 0.0);
  for (std::size_t j = 0; j <= n; ++j) moment[j] = h * static_cast<double>(j) * big_g[j] - big_g2[j];

  Pmf pmf;
  std::vector<double> prev(n + 1);
  for (std::size_t j = 0; j <= n; ++j) prev[j] = 1.0 - big_g[j];
  pmf.probs.push_back(prev[n]);
  std::vector<double> next(n + 1, 0.0);
  for (int k = 1; k <= k_max; ++k) {
    next[0] = 0.0;
    for (std::size_t i = 1; i <= n; ++i) {
      double acc = 0.0;
      for (std::size_t j = 0; j < i; ++j) {
        // tau in [t_j, t_{j+1}] maps to z = t_i - tau in [(i-j-1)h, (i-j)h].
        const std::size_t lo = i - j - 1;
        const std::size_t hi = i - j;
        const double mass = big_g[hi] - big_g[lo];
        const double first = moment[hi] - moment[lo];
        const double slope = (prev[j + 1] - prev[j]) / h;
        acc += prev[j] * mass + slope * (static_cast<double>(hi) * h * mass - first);
      }
      next[i] = acc;
    }
    pmf.probs.push_back(next[n]);
    std::swap(prev, next);
  }
  finish_pmf(pmf);
  return pmf;
}

Pmf mfpp_pmf_montecarlo(const MixedParams& p, double lambda, double t, int k_max, const MfppPmfOptions& o) {
  if (o.n_mc < 2) throw DomainError("mfpp_pmf: Monte Carlo needs n_mc >= 2");
  const std::size_t width = static_cast<std::size_t>(k_max) + 1;
  std::vector<double> samples(o.n_mc * width, 0.0);
  const SubordinatorParams sp = p;
  parallel_for_index(o.n_mc, o.jobs, [&](std::size_t i) {
    RandomSource rng(o.seed, i);
    const auto path = invert_path(simulate_subordinator(sp, o.delta, t, rng));
    const double mu = lambda * path.interpolated(t);
    double w = std::exp(-mu);
    for (std::size_t k = 0; k < width; ++k) {
      samples[i * width + k] = w;
      w *= mu / static_cast<double>(k + 1);
    }
  });
  Pmf pmf;
  pmf.probs.assign(width, 0.0);
  pmf.std_errors.assign(width, 0.0);
  const double n = static_cast<double>(o.n_mc);
  for (std::size_t k = 0; k < width; ++k) {
    double mean = 0.0;
    for (std::size_t i = 0; i < o.n_mc; ++i) mean += samples[i * width + k];
    mean /= n;
    double ss = 0.0;
    for (std::size_t i = 0; i < o.n_mc; ++i) ss += (samples[i * width + k] - mean) * (samples[i * width + k] - mean);
    pmf.probs[k] = mean;
    pmf.std_errors[k] = std::sqrt(ss / (n - 1.0) / n);
  }
  finish_pmf(pmf);
  return pmf;
}

}  // namespace

std::size_t EventTimes::count_at(double t) const {
  return static_cast<std::size_t>(std::upper_bound(times.begin(), times.end(), t) - times.begin());
}

double Pmf::mean() const {
  double m = 0.0;
  for (std::size_t k = 0; k < probs.size(); ++k) m += static_cast<double>(k) * probs[k];
  return m;
}

double Pmf::variance() const {
  const double m = mean();
  double v = 0.0;
  for (std::size_t k = 0; k < probs.size(); ++k) v += (static_cast<double>(k) - m) * (static_cast<double>(k) - m) * probs[k];
  return v;
}

EventTimes simulate_fpp_renewal(Alpha alpha, double lambda, double t_end, RandomSource& rng) {
  if (!(lambda > 0.0)) throw DomainError("simulate_fpp_renewal: lambda must be > 0");
  if (!(t_end > 0.0)) throw DomainError("simulate_fpp_renewal: t_end must be > 0");
  EventTimes ev{{}, t_end};
  double t = sample_ml_waiting_time(alpha, lambda, rng);
  while (t <= t_end) {
    check_event_cap(ev.times.size());
    ev.times.push_back(t);
    t += sample_ml_waiting_time(alpha, lambda, rng);
  }
  return ev;
}

TimeChangedEvents simulate_fpp_timechange(Alpha alpha, double lambda, double t_end, RandomSource& rng,
                                          double delta) {
  if (!(lambda > 0.0)) throw DomainError("simulate_fpp_timechange: lambda must be > 0");
  if (!(t_end > 0.0)) throw DomainError("simulate_fpp_timechange: t_end must be > 0");
  auto path = invert_path(simulate_subordinator(alpha, delta, t_end, rng));
  auto ev = time_changed_events(path, lambda, t_end, rng);
  return {std::move(ev), std::move(path)};
}

TimeChangedEvents simulate_mfpp(const MixedParams& params, double lambda, double t_end, RandomSource& rng,
                                double delta) {
  if (!(lambda > 0.0)) throw DomainError("simulate_mfpp: lambda must be > 0");
  if (!(t_end > 0.0)) throw DomainError("simulate_mfpp: t_end must be > 0");
  auto path = invert_path(simulate_subordinator(params, delta, t_end, rng));
  auto ev = time_changed_events(path, lambda, t_end, rng);
  return {std::move(ev), std::move(path)};
}

Pmf fpp_pmf(Alpha alpha, double lambda, double t, int k_max) {
  if (!(lambda > 0.0)) throw DomainError("fpp_pmf: lambda must be > 0");
  if (!(t >= 0.0)) throw DomainError("fpp_pmf: t must be >= 0");
  if (k_max < 0) throw DomainError("fpp_pmf: k_max must be >= 0");
  Pmf pmf;
  pmf.probs.assign(static_cast<std::size_t>(k_max) + 1, 0.0);
  if (t == 0.0) {
    pmf.probs[0] = 1.0;
    return pmf;
  }
  const double x = lambda * std::pow(t, alpha.value());
  for (int k = 0; k <= k_max; ++k) {
    if (auto v = fpp_pk_series(alpha.value(), x, k)) {
      pmf.probs[k] = *v;
    } else {
      pmf.probs[k] = fpp_pk_laplace(alpha.value(), lambda, t, k);
      pmf.fallback_k.push_back(k);
    }
  }
  finish_pmf(pmf);
  return pmf;
}

MomentReport fpp_moments(Alpha alpha, double lambda, double t, double s) {
  if (!(t >= 0.0 && s >= 0.0)) throw DomainError("fpp_moments: times must be >= 0");
  const double a = alpha.value();
  const double g1 = std::tgamma(1.0 + a);
  MomentReport r;
  r.t = t;
  r.s = s;
  r.mean = lambda * std::pow(t, a) / g1;
  const double bracket = 2.0 / std::tgamma(1.0 + 2.0 * a) - 1.0 / (g1 * g1);
  r.variance = lambda * lambda * std::pow(t, 2.0 * a) * bracket + r.mean;
  r.covariance = lambda * std::pow(std::min(t, s), a) / g1 + lambda * lambda * inverse_cov(alpha, t, s);
  return r;
}

double fpp_hurst(Alpha alpha) {
  if (alpha.is_one()) throw DomainError("fpp_hurst: alpha must lie in (0, 1)");
  return alpha.value();
}

double fpp_hurst_mc(Alpha alpha, double lambda, double t_from, double t_to, int n_times, std::size_t n_mc,
                    std::uint64_t seed, unsigned jobs) {
  if (!(t_from > 0.0 && t_to > t_from) || n_times < 2 || n_mc < 2) {
    throw DomainError("fpp_hurst_mc: need 0 < t_from < t_to, n_times >= 2, n_mc >= 2");
  }
  std::vector<double> lx;
  std::vector<double> ly;
  for (int i = 0; i < n_times; ++i) {
    const double t = t_from * std::pow(t_to / t_from, static_cast<double>(i) / (n_times - 1));
    std::vector<double> counts(n_mc);
    parallel_for_index(n_mc, jobs, [&](std::size_t j) {
      RandomSource rng(seed, static_cast<std::uint64_t>(i) * n_mc + j);
      counts[j] = static_cast<double>(rng.poisson(lambda * sample_inverse_at(alpha, t, rng)));
    });
    lx.push_back(std::log(t));
    ly.push_back(std::log(mc_moments(counts).variance));
  }
  double mx = 0.0, my = 0.0;
  for (int i = 0; i < n_times; ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= n_times;
  my /= n_times;
  double sxy = 0.0, sxx = 0.0;
  for (int i = 0; i < n_times; ++i) {
    sxy += (lx[i] - mx) * (ly[i] - my);
    sxx += (lx[i] - mx) * (lx[i] - mx);
  }
  return 0.5 * sxy / sxx;
}

P0Value mfpp_p0(const MixedParams& params, double lambda, double t) {
  if (!(lambda > 0.0)) throw DomainError("mfpp_p0: lambda must be > 0");
  if (!(t >= 0.0)) throw DomainError("mfpp_p0: t must be >= 0");
  if (t == 0.0) return {1.0, false, 0};
  const double rho = params.alpha2().value() - params.alpha1().value();
  try {
    const auto first = neumann_sum(params, lambda, t, 1.0);
    const auto second = neumann_sum(params, lambda, t, rho + 1.0);
    if (first.converged && second.converged) {
      const double v = first.value + params.c1() / params.c2() * second.value;
      return {std::clamp(v, 0.0, 1.0), false, std::max(first.terms, second.terms)};
    }
  } catch (const AccuracyError&) {
  }
  return {std::clamp(mfpp_pk_laplace(params, lambda, t, 0), 0.0, 1.0), true, 0};
}

double mfpp_kernel(const MixedParams& params, double lambda, double z) {
  if (!(z > 0.0)) throw DomainError("mfpp_kernel: z must be > 0");
  const auto s = neumann_sum(params, lambda, z, params.alpha2().value());
  if (!s.converged) throw AccuracyError("mfpp_kernel: series did not converge");
  return lambda / params.c2() * s.value;
}

Pmf mfpp_pmf(const MixedParams& params, double lambda, double t, int k_max, MfppMethod method,
             const MfppPmfOptions& options) {
  if (!(lambda > 0.0)) throw DomainError("mfpp_pmf: lambda must be > 0");
  if (!(t >= 0.0)) throw DomainError("mfpp_pmf: t must be >= 0");
  if (k_max < 0) throw DomainError("mfpp_pmf: k_max must be >= 0");
  if (t == 0.0) {
    Pmf pmf;
    pmf.probs.assign(static_cast<std::size_t>(k_max) + 1, 0.0);
    pmf.probs[0] = 1.0;
    return pmf;
  }
  switch (method) {
    case MfppMethod::laplace: {
      Pmf pmf;
      for (int k = 0; k <= k_max; ++k) pmf.probs.push_back(mfpp_pk_laplace(params, lambda, t, k));
      finish_pmf(pmf);
      return pmf;
    }
    case MfppMethod::convolution:
      return mfpp_pmf_convolution(params, lambda, t, k_max, options.grid_intervals);
    case MfppMethod::montecarlo:
      return mfpp_pmf_montecarlo(params, lambda, t, k_max, options);
  }
  throw DomainError("mfpp_pmf: unknown method");
}

MomentReport mfpp_moments(const MixedParams& params, double lambda, double t, double s) {
  if (!(t >= 0.0 && s >= 0.0)) throw DomainError("mfpp_moments: times must be >= 0");
  const SubordinatorParams sp = params;
  MomentReport r;
  r.t = t;
  r.s = s;
  r.mean = lambda * inverse_mean(sp, t);
  r.variance = r.mean + lambda * lambda * mixed_inverse_cov(params, t, t);
  r.covariance = lambda * inverse_mean(sp, std::min(t, s)) + lambda * lambda * mixed_inverse_cov(params, t, s);
  return r;
}

ConsistentFunction::ConsistentFunction(std::vector<double> knots, std::vector<double> values, Rule rule,
                                       double tail_slope)
    : knots_(std::move(knots)), values_(std::move(values)), rule_(rule), tail_slope_(tail_slope) {
  if (knots_.empty() || knots_.size() != values_.size()) {
    throw DomainError("ConsistentFunction: knots and values must be non-empty and of equal length");
  }
  if (knots_.front() != 0.0 || values_.front() != 0.0) throw DomainError("ConsistentFunction: Lambda(0) must be 0");
  if (!(tail_slope_ >= 0.0)) throw DomainError("ConsistentFunction: tail slope must be >= 0");
  for (std::size_t i = 1; i < knots_.size(); ++i) {
    if (!(knots_[i] > knots_[i - 1])) throw DomainError("ConsistentFunction: knots must increase");
    if (values_[i] < values_[i - 1]) throw DomainError("ConsistentFunction: values must be nondecreasing");
    if (rule_ == Rule::step && values_[i] - values_[i - 1] > 1.0) {
      throw DomainError("ConsistentFunction: jumps must not exceed 1");
    }
  }
}

ConsistentFunction ConsistentFunction::linear(double lambda) {
  if (!(lambda >= 0.0)) throw DomainError("ConsistentFunction: lambda must be >= 0");
  return ConsistentFunction({0.0}, {0.0}, Rule::linear, lambda);
}

double ConsistentFunction::operator()(double u) const {
  if (!(u >= 0.0)) throw DomainError("ConsistentFunction: argument must be >= 0");
  if (u >= knots_.back()) return values_.back() + tail_slope_ * (u - knots_.back());
  const auto it = std::upper_bound(knots_.begin(), knots_.end(), u);
  const std::size_t i = static_cast<std::size_t>(it - knots_.begin()) - 1;
  if (rule_ == Rule::step) return values_[i];
  return values_[i] + (values_[i + 1] - values_[i]) * (u - knots_[i]) / (knots_[i + 1] - knots_[i]);
}

double ConsistentFunction::first_passage(double level) const {
  if (level <= 0.0) return 0.0;
  const auto it = std::lower_bound(values_.begin(), values_.end(), level);
  if (it == values_.end()) {
    if (tail_slope_ <= 0.0) return std::numeric_limits<double>::infinity();
    return knots_.back() + (level - values_.back()) / tail_slope_;
  }
  const std::size_t i = static_cast<std::size_t>(it - values_.begin());
  if (rule_ == Rule::step || i == 0) return knots_[i];
  return knots_[i - 1] + (level - values_[i - 1]) / (values_[i] - values_[i - 1]) * (knots_[i] - knots_[i - 1]);
}

EventTimes apply_consistent_time_change(const ConsistentFunction& inner, const InversePath& path, double t_end,
                                        RandomSource& rng) {
  if (!(t_end > 0.0)) throw DomainError("apply_consistent_time_change: t_end must be > 0");
  EventTimes ev{{}, t_end};
  const double top_level = path.interpolated(t_end);
  const double top = inner(top_level);
  double v = rng.exponential();
  while (v <= top) {
    check_event_cap(ev.times.size());
    const double level = std::min(inner.first_passage(v), top_level);
    ev.times.push_back(std::min(t_end, path.time_at_level(level)));
    v += rng.exponential();
  }
  return ev;
}

}  // namespace fracpoisson

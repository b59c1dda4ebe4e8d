#include "fracpoisson/subordinate.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "fracpoisson/errors.hpp"
#include "fracpoisson/sampling.hpp"
#include "fracpoisson/specfun.hpp"

namespace fracpoisson {

namespace {

constexpr double kCovTolerance = 1e-8;

// Integral of (U(t - tau) + U(s - tau)) dU(tau) over [0, min(t, s)] where the
// renewal density is tau^(a-1) h(tau). With tau = v^(1/a) the weight becomes
// h(tau) / a on v in [0, min^a].
template <class Renewal, class Smooth>
double renewal_cov_integral(Renewal&& u, Smooth&& h, double a, double t, double s) {
  const double m = std::min(t, s);
  auto f = [&](double v) {
    const double tau = std::pow(v, 1.0 / a);
    return (u(std::max(0.0, t - tau)) + u(std::max(0.0, s - tau))) * h(tau) / a;
  };
  static thread_local boost::math::quadrature::tanh_sinh<double> integrator;
  double error = 0.0;
  double l1 = 0.0;
  const double value = integrator.integrate(f, 0.0, std::pow(m, a), 1e-13, &error, &l1);
  if (!(error <= kCovTolerance * std::max(1.0, std::fabs(value)))) {
    std::ostringstream os;
    os << "covariance quadrature did not reach " << kCovTolerance << " (estimate " << error << ")";
    throw AccuracyError(os.str());
  }
  return value;
}

double mixed_argument(const MixedParams& p, double t) {
  return -(p.c1() / p.c2()) * std::pow(t, p.alpha2().value() - p.alpha1().value());
}

}  // namespace

InversePath::InversePath(double delta, std::vector<double> jump_times)
    : delta_(delta), jump_times_(std::move(jump_times)) {
  if (!(delta > 0.0)) throw DomainError("InversePath: delta must be > 0");
  if (jump_times_.empty() || jump_times_.front() != 0.0) {
    throw DomainError("InversePath: jump times must start at 0");
  }
}

std::size_t InversePath::segment(double s) const {
  if (!(s >= 0.0)) throw DomainError("InversePath: time must be >= 0");
  if (s > horizon()) {
    std::ostringstream os;
    os << "InversePath: time " << s << " beyond simulated horizon " << horizon();
    throw HorizonError(os.str());
  }
  const auto it = std::upper_bound(jump_times_.begin(), jump_times_.end(), s);
  return static_cast<std::size_t>(it - jump_times_.begin()) - 1;
}

double InversePath::value(double s) const { return static_cast<double>(segment(s)) * delta_; }

double InversePath::interpolated(double s) const {
  const std::size_t n = segment(s);
  const double base = static_cast<double>(n) * delta_;
  if (n + 1 >= jump_times_.size()) return base;
  return base + delta_ * (s - jump_times_[n]) / (jump_times_[n + 1] - jump_times_[n]);
}

double InversePath::time_at_level(double level) const {
  if (!(level >= 0.0)) throw DomainError("InversePath: level must be >= 0");
  const double x = level / delta_;
  const double last = static_cast<double>(jump_times_.size() - 1);
  if (x > last) {
    std::ostringstream os;
    os << "InversePath: level " << level << " beyond simulated level " << last * delta_;
    throw HorizonError(os.str());
  }
  const auto n = static_cast<std::size_t>(std::floor(x));
  if (n + 1 >= jump_times_.size()) return jump_times_.back();
  const double frac = x - static_cast<double>(n);
  return jump_times_[n] + frac * (jump_times_[n + 1] - jump_times_[n]);
}

SubordinatorPath simulate_subordinator(const SubordinatorParams& params, double delta, double s_end,
                                       RandomSource& rng, std::size_t max_length) {
  if (!(delta > 0.0)) throw DomainError("simulate_subordinator: delta must be > 0");
  if (!(s_end > 0.0)) throw DomainError("simulate_subordinator: s_end must be > 0");
  SubordinatorPath path{params, delta, {0.0}};
  double level = 0.0;
  while (level <= s_end) {
    if (path.values.size() >= max_length) {
      std::ostringstream os;
      os << "simulate_subordinator: path exceeds " << max_length << " grid points";
      throw ResourceError(os.str());
    }
    if (const auto* a = std::get_if<Alpha>(&params)) {
      level += sample_stable(*a, delta, rng);
    } else {
      level += sample_mixed_increment(std::get<MixedParams>(params), delta, rng);
    }
    path.values.push_back(level);
  }
  return path;
}

InversePath invert_path(const SubordinatorPath& path) { return InversePath(path.delta, path.values); }

double inverse_moment(Alpha alpha, double t, double nu) {
  if (!(t >= 0.0)) throw DomainError("inverse_moment: t must be >= 0");
  const double a = alpha.value();
  return std::pow(t, a * nu) * std::tgamma(nu + 1.0) / std::tgamma(a * nu + 1.0);
}

double inverse_mean(const SubordinatorParams& params, double t) {
  if (!(t >= 0.0)) throw DomainError("inverse_mean: t must be >= 0");
  if (t == 0.0) return 0.0;
  if (const auto* a = std::get_if<Alpha>(&params)) return std::pow(t, a->value()) / std::tgamma(1.0 + a->value());
  const auto& p = std::get<MixedParams>(params);
  const double a1 = p.alpha1().value();
  const double a2 = p.alpha2().value();
  return std::pow(t, a2) * mittag_leffler2(a2 - a1, a2 + 1.0, mixed_argument(p, t)) / p.c2();
}

double renewal_density(const SubordinatorParams& params, double t) {
  if (!(t > 0.0)) throw DomainError("renewal_density: t must be > 0");
  if (const auto* a = std::get_if<Alpha>(&params)) {
    return std::pow(t, a->value() - 1.0) / std::tgamma(a->value());
  }
  const auto& p = std::get<MixedParams>(params);
  const double a1 = p.alpha1().value();
  const double a2 = p.alpha2().value();
  return std::pow(t, a2 - 1.0) * mittag_leffler2(a2 - a1, a2, mixed_argument(p, t)) / p.c2();
}

double inverse_second_moment(const SubordinatorParams& params, double t) {
  if (!(t >= 0.0)) throw DomainError("inverse_second_moment: t must be >= 0");
  if (t == 0.0) return 0.0;
  if (const auto* a = std::get_if<Alpha>(&params)) return inverse_moment(*a, t, 2.0);
  const auto& p = std::get<MixedParams>(params);
  const double a1 = p.alpha1().value();
  const double a2 = p.alpha2().value();
  return 2.0 * std::pow(t, 2.0 * a2) / (p.c2() * p.c2()) *
         mittag_leffler3(a2 - a1, 2.0 * a2 + 1.0, 2.0, mixed_argument(p, t));
}

double inverse_cov(Alpha alpha, double t, double s) {
  if (!(t >= 0.0 && s >= 0.0)) throw DomainError("inverse_cov: times must be >= 0");
  if (t == 0.0 || s == 0.0 || alpha.is_one()) return 0.0;
  const double a = alpha.value();
  const double g1 = std::tgamma(1.0 + a);
  const double ga = std::tgamma(a);
  auto u = [&](double x) { return std::pow(x, a) / g1; };
  auto h = [&](double) { return 1.0 / ga; };
  return renewal_cov_integral(u, h, a, t, s) - u(t) * u(s);
}

double mixed_inverse_cov(const MixedParams& params, double t, double s) {
  if (!(t >= 0.0 && s >= 0.0)) throw DomainError("mixed_inverse_cov: times must be >= 0");
  if (t == 0.0 || s == 0.0) return 0.0;
  const SubordinatorParams sp = params;
  const double a1 = params.alpha1().value();
  const double a2 = params.alpha2().value();
  auto u = [&](double x) { return x > 0.0 ? inverse_mean(sp, x) : 0.0; };
  auto h = [&](double tau) {
    return mittag_leffler2(a2 - a1, a2, mixed_argument(params, tau)) / params.c2();
  };
  return renewal_cov_integral(u, h, a2, t, s) - u(t) * u(s);
}

}  // namespace fracpoisson

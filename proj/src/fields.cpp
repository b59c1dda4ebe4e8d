#include "fracpoisson/fields.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "fracpoisson/errors.hpp"
#include "fracpoisson/sampling.hpp"

namespace fracpoisson {

namespace {

void check_point_cap(std::size_t n) {
  if (n >= kMaxEvents) {
    std::ostringstream os;
    os << "point count exceeds the cap of " << kMaxEvents;
    throw ResourceError(os.str());
  }
}

// Poisson(mu) probabilities 0..k_max, built outward from the mode.
void poisson_pmf_into(double mu, std::size_t k_max, double* out) {
  std::fill(out, out + k_max + 1, 0.0);
  if (mu <= 0.0) {
    out[0] = 1.0;
    return;
  }
  const std::size_t mode = std::min<std::size_t>(static_cast<std::size_t>(std::floor(mu)), k_max);
  const double md = static_cast<double>(mode);
  out[mode] = std::exp(md * std::log(mu) - mu - std::lgamma(md + 1.0));
  for (std::size_t k = mode + 1; k <= k_max; ++k) out[k] = out[k - 1] * mu / static_cast<double>(k);
  for (std::size_t k = mode; k-- > 0;) out[k] = out[k + 1] * static_cast<double>(k + 1) / mu;
}

}  // namespace

std::size_t PlanarPoints::count_in(double x, double y) const {
  return static_cast<std::size_t>(
      std::count_if(points.begin(), points.end(), [&](const Point& p) { return p.x <= x && p.y <= y; }));
}

std::size_t PlanarPoints::count_in(double x0, double y0, double x1, double y1) const {
  return static_cast<std::size_t>(std::count_if(points.begin(), points.end(), [&](const Point& p) {
    return p.x > x0 && p.x <= x1 && p.y > y0 && p.y <= y1;
  }));
}

PlanarPoints simulate_prf(double lambda, double window, RandomSource& rng) {
  if (!(lambda >= 0.0)) throw DomainError("simulate_prf: lambda must be >= 0");
  if (!(window > 0.0)) throw DomainError("simulate_prf: window must be > 0");
  PlanarPoints out{{}, window};
  const std::uint64_t n = rng.poisson(lambda * window * window);
  check_point_cap(n);
  out.points.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    const double x = window * rng.uniform();
    const double y = window * rng.uniform();
    out.points.push_back({x, y});
  }
  return out;
}

FprfRealization simulate_fprf(Alpha alpha1, Alpha alpha2, double lambda, double window, double delta, CellLaw law,
                              RandomSource& rng) {
  if (!(lambda > 0.0)) throw DomainError("simulate_fprf: lambda must be > 0");
  if (!(window > 0.0)) throw DomainError("simulate_fprf: window must be > 0");
  if (!(delta > 0.0 && delta <= 0.01)) throw DomainError("simulate_fprf: delta must lie in (0, 0.01]");
  const double cell_mean = lambda * delta * delta;
  if (law == CellLaw::bernoulli && cell_mean >= 0.1) {
    throw DomainError("simulate_fprf: Bernoulli cells need lambda*delta^2 < 0.1");
  }
  auto path1 = invert_path(simulate_subordinator(alpha1, delta, window, rng));
  auto path2 = invert_path(simulate_subordinator(alpha2, delta, window, rng));
  const double top1 = path1.interpolated(window);
  const double top2 = path2.interpolated(window);
  PlanarPoints field{{}, window};
  auto place = [&](double u, double v) {
    check_point_cap(field.points.size());
    field.points.push_back({std::min(window, path1.time_at_level(u)), std::min(window, path2.time_at_level(v))});
  };
  if (law == CellLaw::poisson) {
    // Rate-lambda scatter over the internal rectangle; per-cell counts are
    // independent Poisson(lambda delta^2) and uniform within each cell.
    const std::uint64_t n = rng.poisson(lambda * top1 * top2);
    check_point_cap(n);
    for (std::uint64_t i = 0; i < n; ++i) {
      const double u = top1 * rng.uniform();
      const double v = top2 * rng.uniform();
      place(u, v);
    }
  } else {
    const auto n1 = static_cast<std::uint64_t>(std::ceil(top1 / delta));
    const auto n2 = static_cast<std::uint64_t>(std::ceil(top2 / delta));
    const std::uint64_t cells = n1 * n2;
    const double log_miss = std::log1p(-cell_mean);
    std::uint64_t idx = 0;
    bool first = true;
    for (;;) {
      const double skip = std::floor(std::log(rng.uniform()) / log_miss);
      if (skip >= static_cast<double>(cells)) break;
      idx = first ? static_cast<std::uint64_t>(skip) : idx + 1 + static_cast<std::uint64_t>(skip);
      first = false;
      if (idx >= cells) break;
      const double u = (static_cast<double>(idx / n2) + rng.uniform()) * delta;
      const double v = (static_cast<double>(idx % n2) + rng.uniform()) * delta;
      if (u <= top1 && v <= top2) place(u, v);
    }
  }
  return {std::move(field), std::move(path1), std::move(path2)};
}

Pmf fprf_pmf_mc(Alpha alpha1, Alpha alpha2, double lambda, double t1, double t2, int k_max, std::size_t n_mc,
                RandomSource& rng) {
  if (n_mc < 1) throw DomainError("fprf_pmf_mc: n_mc must be >= 1");
  if (k_max < 0) throw DomainError("fprf_pmf_mc: k_max must be >= 0");
  if (!(lambda > 0.0 && t1 >= 0.0 && t2 >= 0.0)) throw DomainError("fprf_pmf_mc: need lambda > 0 and t >= 0");
  const std::size_t width = static_cast<std::size_t>(k_max) + 1;
  std::vector<double> x1(n_mc), x2(n_mc);
  for (auto& x : x1) x = sample_inverse_at(alpha1, t1, rng);
  for (auto& x : x2) x = sample_inverse_at(alpha2, t2, rng);
  std::vector<double> row(n_mc * width, 0.0), col(n_mc * width, 0.0), w(width);
  for (std::size_t i = 0; i < n_mc; ++i) {
    for (std::size_t j = 0; j < n_mc; ++j) {
      poisson_pmf_into(lambda * x1[i] * x2[j], width - 1, w.data());
      for (std::size_t k = 0; k < width; ++k) {
        row[i * width + k] += w[k];
        col[j * width + k] += w[k];
      }
    }
  }
  const double n = static_cast<double>(n_mc);
  Pmf pmf;
  pmf.probs.assign(width, 0.0);
  pmf.std_errors.assign(width, 0.0);
  double total = 0.0;
  for (std::size_t k = 0; k < width; ++k) {
    double mean = 0.0;
    for (std::size_t i = 0; i < n_mc; ++i) mean += row[i * width + k];
    mean /= n * n;
    double vr = 0.0, vc = 0.0;
    for (std::size_t i = 0; i < n_mc; ++i) {
      const double r = row[i * width + k] / n - mean;
      const double c = col[i * width + k] / n - mean;
      vr += r * r;
      vc += c * c;
    }
    if (n_mc > 1) {
      vr /= n - 1.0;
      vc /= n - 1.0;
    }
    pmf.probs[k] = mean;
    pmf.std_errors[k] = std::sqrt(vr / n + vc / n);
    total += mean;
  }
  pmf.tail_mass = 1.0 - total;
  return pmf;
}

MomentReport parameter_change_cov(const CovInputs& in, Coord t, Coord s) {
  const auto [t1, t2] = t;
  const auto [s1, s2] = s;
  if (!(t1 >= 0.0 && t2 >= 0.0 && s1 >= 0.0 && s2 >= 0.0)) {
    throw DomainError("parameter_change_cov: coordinates must be >= 0");
  }
  const double u1t = in.u1(t1), u2t = in.u2(t2);
  const double u1s = in.u1(s1), u2s = in.u2(s2);
  const double en2 = in.mean_n11 * in.mean_n11;
  MomentReport r;
  r.t = t1 * t2;
  r.s = s1 * s2;
  r.mean = in.mean_n11 * u1t * u2t;
  r.variance = in.var_n11 * u1t * u2t + en2 * (in.m2_1(t1) * in.m2_2(t2) - u1t * u1t * u2t * u2t);
  const double c1 = in.cov1(t1, s1);
  const double c2 = in.cov2(t2, s2);
  r.covariance = en2 * (c1 * c2 + u2t * u2s * c1 + u1t * u1s * c2) +
                 in.var_n11 * in.u1(std::min(t1, s1)) * in.u2(std::min(t2, s2));
  return r;
}

CovInputs fprf_cov_inputs(Alpha alpha1, Alpha alpha2, double lambda) {
  if (!(lambda > 0.0)) throw DomainError("fprf_cov_inputs: lambda must be > 0");
  CovInputs in;
  in.mean_n11 = lambda;
  in.var_n11 = lambda;
  in.u1 = [alpha1](double x) { return inverse_mean(alpha1, x); };
  in.u2 = [alpha2](double x) { return inverse_mean(alpha2, x); };
  in.m2_1 = [alpha1](double x) { return inverse_second_moment(alpha1, x); };
  in.m2_2 = [alpha2](double x) { return inverse_second_moment(alpha2, x); };
  in.cov1 = [alpha1](double a, double b) { return inverse_cov(alpha1, a, b); };
  in.cov2 = [alpha2](double a, double b) { return inverse_cov(alpha2, a, b); };
  return in;
}

MomentReport fprf_moments(Alpha alpha1, Alpha alpha2, double lambda, Coord t, Coord s) {
  return parameter_change_cov(fprf_cov_inputs(alpha1, alpha2, lambda), t, s);
}

std::pair<double, double> fprf_variance_constants(Alpha alpha1, Alpha alpha2) {
  const double a1 = alpha1.value();
  const double a2 = alpha2.value();
  const double g1 = std::tgamma(a1);
  const double g2 = std::tgamma(a2);
  const double c1 = 1.0 / (a1 * a2 * std::tgamma(2.0 * a1) * std::tgamma(2.0 * a2)) -
                    1.0 / ((a1 * a2) * (a1 * a2) * g1 * g1 * g2 * g2);
  const double c2 = 1.0 / (std::tgamma(1.0 + a1) * std::tgamma(1.0 + a2));
  return {c1, c2};
}

double fprf_variance(Alpha alpha1, Alpha alpha2, double lambda, Coord t) {
  const auto [c1, c2] = fprf_variance_constants(alpha1, alpha2);
  const double p = std::pow(t.first, alpha1.value()) * std::pow(t.second, alpha2.value());
  return lambda * lambda * c1 * p * p + lambda * c2 * p;
}

double fprf_covariance(Alpha alpha1, Alpha alpha2, double lambda, Coord t, Coord s) {
  const double a1 = alpha1.value();
  const double a2 = alpha2.value();
  const double g1 = std::tgamma(1.0 + a1);
  const double g2 = std::tgamma(1.0 + a2);
  const double c1 = inverse_cov(alpha1, t.first, s.first);
  const double c2 = inverse_cov(alpha2, t.second, s.second);
  const double bracket = c1 * c2 + std::pow(t.second * s.second, a2) / (g2 * g2) * c1 +
                         std::pow(t.first * s.first, a1) / (g1 * g1) * c2;
  return lambda * lambda * bracket +
         lambda * std::pow(std::min(t.first, s.first), a1) * std::pow(std::min(t.second, s.second), a2) / (g1 * g2);
}

double fprf_hurst(Alpha alpha1, Alpha alpha2) { return 0.5 * (alpha1.value() + alpha2.value()); }

IncreasingPath::IncreasingPath(std::vector<double> t, std::vector<double> g1, std::vector<double> g2)
    : t_(std::move(t)), g1_(std::move(g1)), g2_(std::move(g2)) {
  if (t_.size() < 2 || g1_.size() != t_.size() || g2_.size() != t_.size()) {
    throw DomainError("IncreasingPath: need at least two knots and equal table lengths");
  }
  if (t_.front() != 0.0 || g1_.front() != 0.0 || g2_.front() != 0.0) {
    throw DomainError("IncreasingPath: path must start at (0, 0) at t = 0");
  }
  for (std::size_t i = 1; i < t_.size(); ++i) {
    if (!(t_[i] > t_[i - 1])) throw DomainError("IncreasingPath: times must increase");
    if (g1_[i] < g1_[i - 1] || g2_[i] < g2_[i - 1]) throw DomainError("IncreasingPath: coordinates must be nondecreasing");
  }
}

IncreasingPath IncreasingPath::diagonal(double t_max) {
  if (!(t_max > 0.0)) throw DomainError("IncreasingPath: t_max must be > 0");
  return IncreasingPath({0.0, t_max}, {0.0, t_max}, {0.0, t_max});
}

Coord IncreasingPath::operator()(double t) const {
  if (!(t >= 0.0 && t <= t_max())) throw DomainError("IncreasingPath: t outside [0, t_max]");
  const auto it = std::upper_bound(t_.begin(), t_.end(), t);
  const std::size_t i = std::min(static_cast<std::size_t>(it - t_.begin()), t_.size() - 1);
  const double w = (t - t_[i - 1]) / (t_[i] - t_[i - 1]);
  return {g1_[i - 1] + w * (g1_[i] - g1_[i - 1]), g2_[i - 1] + w * (g2_[i] - g2_[i - 1])};
}

double IncreasingPath::passage(const std::vector<double>& t, const std::vector<double>& g, double level) {
  if (level <= 0.0) return 0.0;
  const auto it = std::lower_bound(g.begin(), g.end(), level);
  if (it == g.end()) return std::numeric_limits<double>::infinity();
  const std::size_t i = static_cast<std::size_t>(it - g.begin());
  return t[i - 1] + (level - g[i - 1]) / (g[i] - g[i - 1]) * (t[i] - t[i - 1]);
}

double IncreasingPath::entry_time(double x, double y) const {
  return std::max(passage(t_, g1_, x), passage(t_, g2_, y));
}

namespace {

void check_path_in_window(const FprfRealization& r, const IncreasingPath& path) {
  const auto [g1, g2] = path(path.t_max());
  if (g1 > r.field.window || g2 > r.field.window) {
    std::ostringstream os;
    os << "increasing path leaves the simulated window " << r.field.window;
    throw HorizonError(os.str());
  }
}

}  // namespace

std::vector<TraceSample> trace_along_path(const FprfRealization& realization, const IncreasingPath& path,
                                          std::size_t n_eval) {
  if (n_eval < 2) throw DomainError("trace_along_path: n_eval must be >= 2");
  check_path_in_window(realization, path);
  std::vector<double> entry;
  entry.reserve(realization.field.points.size());
  for (const auto& p : realization.field.points) entry.push_back(path.entry_time(p.x, p.y));
  std::sort(entry.begin(), entry.end());
  std::vector<TraceSample> out;
  for (std::size_t i = 0; i < n_eval; ++i) {
    const double t = path.t_max() * static_cast<double>(i) / static_cast<double>(n_eval - 1);
    const auto c = static_cast<std::size_t>(std::upper_bound(entry.begin(), entry.end(), t) - entry.begin());
    out.push_back({t, c});
  }
  return out;
}

double trace_intensity(const FprfRealization& realization, const IncreasingPath& path, double lambda, double t) {
  const auto [g1, g2] = path(t);
  return lambda * realization.path1.interpolated(g1) * realization.path2.interpolated(g2);
}

EventTimes reparametrize_to_standard(const FprfRealization& realization, const IncreasingPath& path, double lambda,
                                     double s_required) {
  check_path_in_window(realization, path);
  const double horizon = trace_intensity(realization, path, lambda, path.t_max());
  if (horizon < s_required) {
    std::ostringstream os;
    os << "reparametrize_to_standard: intensity reaches only " << horizon << " < " << s_required;
    throw HorizonError(os.str());
  }
  EventTimes ev{{}, horizon};
  for (const auto& p : realization.field.points) {
    const double tau = path.entry_time(p.x, p.y);
    if (tau <= path.t_max()) ev.times.push_back(std::min(horizon, trace_intensity(realization, path, lambda, tau)));
  }
  std::sort(ev.times.begin(), ev.times.end());
  return ev;
}

std::vector<std::uint64_t> gergely_yezhov_counts(const std::function<double(double)>& intensity,
                                                 const std::vector<double>& t_grid, RandomSource& rng,
                                                 std::uint64_t cap) {
  std::vector<double> levels;
  levels.reserve(t_grid.size());
  double top = 0.0;
  double prev_m = 0.0;
  for (double t : t_grid) {
    const double m = intensity(t);
    if (!(m >= 0.0)) throw DomainError("gergely_yezhov_counts: intensity must be >= 0");
    if (m < prev_m) throw DomainError("gergely_yezhov_counts: intensity must be nondecreasing");
    prev_m = m;
    levels.push_back(-std::expm1(-m));
    top = std::max(top, levels.back());
  }
  std::vector<double> records;
  double current = 0.0;
  std::uint64_t draws = 0;
  while (current <= top) {
    if (draws >= cap) {
      std::ostringstream os;
      os << "gergely_yezhov_counts: record search exceeded " << cap << " draws with " << records.size()
         << " records found";
      throw ResourceError(os.str());
    }
    const double v = rng.uniform();
    ++draws;
    if (v > current) {
      current = v;
      records.push_back(v);
    }
  }
  std::vector<std::uint64_t> counts;
  counts.reserve(levels.size());
  for (double level : levels) {
    counts.push_back(static_cast<std::uint64_t>(std::upper_bound(records.begin(), records.end(), level) - records.begin()));
  }
  return counts;
}

}  // namespace fracpoisson

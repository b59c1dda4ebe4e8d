#include "fracpoisson/fraccalc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "fracpoisson/errors.hpp"
#include "fracpoisson/parallel.hpp"
#include "fracpoisson/processes.hpp"
#include "fracpoisson/random.hpp"
#include "fracpoisson/sampling.hpp"

namespace fracpoisson {

namespace {

constexpr long double kPiL = std::numbers::pi_v<long double>;

long double factorial(int n) {
  long double f = 1.0L;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

std::vector<long double> stehfest_weights(int n) {
  const int half = n / 2;
  std::vector<long double> v(n + 1, 0.0L);
  for (int k = 1; k <= n; ++k) {
    long double s = 0.0L;
    for (int j = (k + 1) / 2; j <= std::min(k, half); ++j) {
      s += std::pow(static_cast<long double>(j), half) * factorial(2 * j) /
           (factorial(half - j) * factorial(j) * factorial(j - 1) * factorial(k - j) * factorial(2 * j - k));
    }
    v[k] = ((k + half) % 2 == 0 ? 1.0L : -1.0L) * s;
  }
  return v;
}

double talbot(const LaplaceTransform& transform, long double t, int m) {
  const long double r = 2.0L * m / (5.0L * t);
  long double acc = 0.5L * std::exp(r * t) * transform(Complex(r, 0.0L)).real();
  for (int k = 1; k < m; ++k) {
    const long double theta = k * kPiL / m;
    const long double cot = std::cos(theta) / std::sin(theta);
    const Complex s(r * theta * cot, r * theta);
    const long double sigma = theta + (theta * cot - 1.0L) * cot;
    acc += (std::exp(t * s) * transform(s) * Complex(1.0L, sigma)).real();
  }
  return static_cast<double>(r / m * acc);
}

double gaver_stehfest(const LaplaceTransform& transform, long double t, int n) {
  const auto v = stehfest_weights(n);
  const long double ln2t = std::numbers::ln2_v<long double> / t;
  long double acc = 0.0L;
  for (int k = 1; k <= n; ++k) acc += v[k] * transform(Complex(k * ln2t, 0.0L)).real();
  return static_cast<double>(ln2t * acc);
}

}  // namespace

double laplace_invert(const LaplaceTransform& transform, double t, InversionMethod method, int nodes) {
  if (!(t > 0.0)) throw DomainError("laplace_invert: t must be > 0");
  double value = 0.0;
  if (nodes == 0) nodes = method == InversionMethod::talbot ? 48 : 20;
  if (method == InversionMethod::talbot) {
    if (nodes < 2) throw DomainError("laplace_invert: Talbot needs at least 2 nodes");
    value = talbot(transform, t, nodes);
  } else {
    if (nodes < 2 || nodes % 2 != 0) throw DomainError("laplace_invert: Gaver-Stehfest needs an even node count");
    value = gaver_stehfest(transform, t, nodes);
  }
  if (!std::isfinite(value)) {
    std::ostringstream os;
    os << "laplace_invert: non-finite result at t=" << t;
    throw InversionError(os.str());
  }
  return value;
}

GridFunction caputo_l1(const GridFunction& u, Alpha alpha) {
  const std::size_t n = u.values.size();
  GridFunction out{u.step, std::vector<double>(n, 0.0)};
  if (n < 2) return out;
  const double a = alpha.value();
  if (alpha.is_one()) {
    for (std::size_t i = 1; i < n; ++i) out.values[i] = (u.values[i] - u.values[i - 1]) / u.step;
    return out;
  }
  const double scale = std::pow(u.step, -a) / std::tgamma(2.0 - a);
  std::vector<double> b(n);
  for (std::size_t m = 1; m < n; ++m) {
    b[m] = scale * (std::pow(static_cast<double>(m), 1.0 - a) - std::pow(static_cast<double>(m - 1), 1.0 - a));
  }
  std::vector<double> du(n);
  for (std::size_t j = 1; j < n; ++j) du[j] = u.values[j] - u.values[j - 1];
  for (std::size_t i = 1; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t j = 1; j <= i; ++j) acc += b[i - j + 1] * du[j];
    out.values[i] = acc;
  }
  return out;
}

GridFunction2 caputo_mixed_l1(const GridFunction2& u, Alpha alpha1, Alpha alpha2) {
  GridFunction2 out = u;
  std::fill(out.values.begin(), out.values.end(), 0.0);
  if (u.rows < 2 || u.cols < 2) return out;
  auto weights = [](std::size_t n, double step, Alpha alpha) {
    std::vector<double> b(n, 0.0);
    const double a = alpha.value();
    if (alpha.is_one()) {
      if (n > 1) b[1] = 1.0 / step;
      return b;
    }
    const double scale = std::pow(step, -a) / std::tgamma(2.0 - a);
    for (std::size_t m = 1; m < n; ++m) {
      b[m] = scale * (std::pow(static_cast<double>(m), 1.0 - a) - std::pow(static_cast<double>(m - 1), 1.0 - a));
    }
    return b;
  };
  const auto b1 = weights(u.rows, u.step1, alpha1);
  const auto b2 = weights(u.cols, u.step2, alpha2);
  // Mixed second differences on each cell.
  std::vector<double> d(u.rows * u.cols, 0.0);
  for (std::size_t i = 1; i < u.rows; ++i) {
    for (std::size_t j = 1; j < u.cols; ++j) {
      d[i * u.cols + j] = u.at(i, j) - u.at(i - 1, j) - u.at(i, j - 1) + u.at(i - 1, j - 1);
    }
  }
  // Contract along the second coordinate, then the first.
  std::vector<double> partial(u.rows * u.cols, 0.0);
  for (std::size_t i = 1; i < u.rows; ++i) {
    for (std::size_t j = 1; j < u.cols; ++j) {
      double acc = 0.0;
      for (std::size_t q = 1; q <= j; ++q) acc += b2[j - q + 1] * d[i * u.cols + q];
      partial[i * u.cols + j] = acc;
    }
  }
  for (std::size_t i = 1; i < u.rows; ++i) {
    for (std::size_t j = 1; j < u.cols; ++j) {
      double acc = 0.0;
      for (std::size_t p = 1; p <= i; ++p) acc += b1[i - p + 1] * partial[p * u.cols + j];
      out.values[i * u.cols + j] = acc;
    }
  }
  return out;
}

namespace {

void check_residual_grid(double step, double t_from, double t_to, int k_max) {
  if (!(step > 0.0 && step <= 1e-3)) throw DomainError("residual: step must lie in (0, 1e-3]");
  if (!(t_from > 0.0 && t_to > t_from)) throw DomainError("residual: need 0 < t_from < t_to");
  if (k_max < 0) throw DomainError("residual: k_max must be >= 0");
}

// Pmf tables p[k][j] at t_j = j * step, j = 0..n.
template <class PmfAt>
std::vector<std::vector<double>> pmf_table(PmfAt&& pmf_at, double step, std::size_t n, int k_max) {
  std::vector<std::vector<double>> p(static_cast<std::size_t>(k_max) + 1, std::vector<double>(n + 1, 0.0));
  p[0][0] = 1.0;
  for (std::size_t j = 1; j <= n; ++j) {
    const auto probs = pmf_at(step * static_cast<double>(j));
    for (int k = 0; k <= k_max; ++k) p[static_cast<std::size_t>(k)][j] = probs[static_cast<std::size_t>(k)];
  }
  return p;
}

// Poisson(mu) probabilities 0..k_max built outward from the mode.
void poisson_probs_into(double mu, int k_max, std::vector<double>& out) {
  out.assign(static_cast<std::size_t>(k_max) + 1, 0.0);
  if (mu <= 0.0) {
    out[0] = 1.0;
    return;
  }
  const int mode = std::min(k_max, static_cast<int>(std::floor(mu)));
  out[static_cast<std::size_t>(mode)] = std::exp(mode * std::log(mu) - mu - std::lgamma(mode + 1.0));
  for (int k = mode + 1; k <= k_max; ++k) out[static_cast<std::size_t>(k)] = out[static_cast<std::size_t>(k - 1)] * mu / k;
  for (int k = mode - 1; k >= 0; --k) out[static_cast<std::size_t>(k)] = out[static_cast<std::size_t>(k + 1)] * (k + 1) / mu;
}

std::vector<double> poisson_probs(double mu, int k_max) {
  std::vector<double> out;
  poisson_probs_into(mu, k_max, out);
  return out;
}

// Mixed partial of the classical field pmf p_k(lambda t1 t2), written in mu = lambda t1 t2.
double classical_mixed_rhs(const std::vector<double>& p, int k, double lambda, double mu) {
  const auto at = [&](int j) { return j < 0 ? 0.0 : p[static_cast<std::size_t>(j)]; };
  return lambda * ((mu - 1.0) * at(k) + (1.0 - 2.0 * mu) * at(k - 1) + mu * at(k - 2));
}

}  // namespace

ResidualReport fde_residual_fpp(Alpha alpha, double lambda, double step, double t_from, double t_to, int k_max) {
  check_residual_grid(step, t_from, t_to, k_max);
  if (!(lambda > 0.0)) throw DomainError("fde_residual_fpp: lambda must be > 0");
  const auto n = static_cast<std::size_t>(std::ceil(t_to / step)) + 1;
  const auto p = pmf_table([&](double t) { return fpp_pmf(alpha, lambda, t, k_max).probs; }, step, n, k_max);
  ResidualReport r{"D^a p_k + lambda (p_k - p_{k-1}) = 0", 0.0, step, t_from, t_to, k_max};
  for (int k = 0; k <= k_max; ++k) {
    const auto& pk = p[static_cast<std::size_t>(k)];
    std::vector<double> d(n + 1, 0.0);
    if (alpha.is_one()) {
      for (std::size_t j = 1; j < n; ++j) d[j] = (pk[j + 1] - pk[j - 1]) / (2.0 * step);
    } else {
      d = caputo_l1({step, pk}, alpha).values;
    }
    for (std::size_t j = 1; j < n; ++j) {
      const double t = step * static_cast<double>(j);
      if (t < t_from - 1e-12 || t > t_to + 1e-12) continue;
      const double prev = k > 0 ? p[static_cast<std::size_t>(k - 1)][j] : 0.0;
      r.max_residual = std::max(r.max_residual, std::abs(d[j] + lambda * (pk[j] - prev)));
    }
  }
  r.order = alpha.is_one() ? 2.0 : 2.0 - alpha.value();
  r.fitted_constant = r.max_residual / std::pow(step, r.order);
  r.pass = alpha.is_one() ? r.max_residual < 1e-6 : std::isfinite(r.max_residual);
  return r;
}

ResidualReport fde_residual_mfpp(const MixedParams& params, double lambda, double step, double t_from, double t_to,
                                 int k_max) {
  check_residual_grid(step, t_from, t_to, k_max);
  if (!(lambda > 0.0)) throw DomainError("fde_residual_mfpp: lambda must be > 0");
  const auto n = static_cast<std::size_t>(std::ceil(t_to / step)) + 1;
  const auto p = pmf_table(
      [&](double t) { return mfpp_pmf(params, lambda, t, k_max, MfppMethod::laplace).probs; }, step, n, k_max);
  ResidualReport r{"C1 D^a1 p_k + C2 D^a2 p_k + lambda (p_k - p_{k-1}) = 0", 0.0, step, t_from, t_to, k_max};
  for (int k = 0; k <= k_max; ++k) {
    const auto& pk = p[static_cast<std::size_t>(k)];
    const auto d2 = caputo_l1({step, pk}, params.alpha2()).values;
    std::vector<double> d1(n + 1, 0.0);
    if (params.c1() > 0.0) d1 = caputo_l1({step, pk}, params.alpha1()).values;
    for (std::size_t j = 1; j <= n; ++j) {
      const double t = step * static_cast<double>(j);
      if (t < t_from - 1e-12 || t > t_to + 1e-12) continue;
      const double prev = k > 0 ? p[static_cast<std::size_t>(k - 1)][j] : 0.0;
      const double res = params.c1() * d1[j] + params.c2() * d2[j] + lambda * (pk[j] - prev);
      r.max_residual = std::max(r.max_residual, std::abs(res));
    }
  }
  r.order = 2.0 - params.alpha2().value();
  r.fitted_constant = r.max_residual / std::pow(step, r.order);
  r.pass = std::isfinite(r.max_residual);
  return r;
}

ResidualReport fde_residual_fprf(Alpha alpha1, Alpha alpha2, double lambda, double t_max, std::size_t n, int k_max,
                                 std::size_t n_mc, std::uint64_t seed, unsigned jobs) {
  if (!(lambda > 0.0 && t_max > 0.0)) throw DomainError("fde_residual_fprf: need lambda > 0 and t_max > 0");
  if (n < 2) throw DomainError("fde_residual_fprf: grid needs at least 2 intervals");
  if (k_max < 0) throw DomainError("fde_residual_fprf: k_max must be >= 0");
  const double h = t_max / static_cast<double>(n);
  ResidualReport r{"D^{a1,a2} p_k = E[mixed partial of p_k^c at (Y1(t1), Y2(t2))]", 0.0, h, h, t_max, k_max};
  if (alpha1.is_one() && alpha2.is_one()) {
    // Classical field: central mixed difference of the exact pmf.
    const double d = 1e-4;
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = 1; j <= n; ++j) {
        const double t1 = h * static_cast<double>(i);
        const double t2 = h * static_cast<double>(j);
        const auto pp = poisson_probs(lambda * (t1 + d) * (t2 + d), k_max);
        const auto pm = poisson_probs(lambda * (t1 + d) * (t2 - d), k_max);
        const auto mp = poisson_probs(lambda * (t1 - d) * (t2 + d), k_max);
        const auto mm = poisson_probs(lambda * (t1 - d) * (t2 - d), k_max);
        const double mu = lambda * t1 * t2;
        const auto p = poisson_probs(mu, k_max);
        for (int k = 0; k <= k_max; ++k) {
          const auto q = static_cast<std::size_t>(k);
          const double lhs = (pp[q] - pm[q] - mp[q] + mm[q]) / (4.0 * d * d);
          r.max_residual = std::max(r.max_residual, std::abs(lhs - classical_mixed_rhs(p, k, lambda, mu)));
        }
      }
    }
    r.order = 2.0;
    r.fitted_constant = r.max_residual / (d * d);
    r.pass = r.max_residual < 1e-6;
    return r;
  }

  // Monte Carlo over batches of (Y1(1), Y2(1)) draws; Y(t) = t^alpha Y(1) in law,
  // so one set of draws gives a smooth estimate on the whole grid.
  constexpr std::size_t kBatches = 50;
  if (n_mc < kBatches * 20) throw DomainError("fde_residual_fprf: n_mc must be >= 1000");
  const std::size_t per_batch = n_mc / kBatches;
  const std::size_t nf = 2 * n;
  const std::size_t width = static_cast<std::size_t>(k_max) + 1;
  const std::size_t cells = n * n * width;
  const double a1 = alpha1.value();
  const double a2 = alpha2.value();
  std::vector<double> pow1(nf + 1), pow2(nf + 1);
  for (std::size_t i = 0; i <= nf; ++i) {
    pow1[i] = std::pow(0.5 * h * static_cast<double>(i), a1);
    pow2[i] = std::pow(0.5 * h * static_cast<double>(i), a2);
  }
  std::vector<double> residual(kBatches * cells, 0.0);
  std::vector<double> scheme(kBatches * cells, 0.0);
  parallel_for_index(kBatches, jobs, [&](std::size_t b) {
    RandomSource rng(seed, b);
    std::vector<double> y1(per_batch), y2(per_batch);
    for (auto& y : y1) y = sample_inverse_at(alpha1, 1.0, rng);
    for (auto& y : y2) y = sample_inverse_at(alpha2, 1.0, rng);
    std::vector<GridFunction2> fine(width, GridFunction2{0.5 * h, 0.5 * h, nf + 1, nf + 1,
                                                        std::vector<double>((nf + 1) * (nf + 1), 0.0)});
    std::vector<double> rhs(cells, 0.0);
    std::vector<double> p;
    for (std::size_t i = 0; i <= nf; ++i) {
      for (std::size_t j = 0; j <= nf; ++j) {
        const bool coarse = i % 2 == 0 && j % 2 == 0 && i > 0 && j > 0;
        for (std::size_t m = 0; m < per_batch; ++m) {
          const double mu = lambda * y1[m] * y2[m] * pow1[i] * pow2[j];
          poisson_probs_into(mu, k_max, p);
          for (std::size_t k = 0; k < width; ++k) fine[k].values[i * (nf + 1) + j] += p[k];
          if (coarse) {
            const std::size_t base = ((i / 2 - 1) * n + (j / 2 - 1)) * width;
            for (std::size_t k = 0; k < width; ++k) {
              rhs[base + k] += classical_mixed_rhs(p, static_cast<int>(k), lambda, mu);
            }
          }
        }
      }
    }
    const double inv = 1.0 / static_cast<double>(per_batch);
    for (std::size_t k = 0; k < width; ++k) {
      for (auto& v : fine[k].values) v *= inv;
      GridFunction2 coarse{h, h, n + 1, n + 1, std::vector<double>((n + 1) * (n + 1))};
      for (std::size_t i = 0; i <= n; ++i) {
        for (std::size_t j = 0; j <= n; ++j) coarse.values[i * (n + 1) + j] = fine[k].at(2 * i, 2 * j);
      }
      const auto d_fine = caputo_mixed_l1(fine[k], alpha1, alpha2);
      const auto d_coarse = caputo_mixed_l1(coarse, alpha1, alpha2);
      for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
          const std::size_t c = ((i - 1) * n + (j - 1)) * width + k;
          const double df = d_fine.at(2 * i, 2 * j);
          residual[b * cells + c] = df - rhs[c] * inv;
          scheme[b * cells + c] = d_coarse.at(i, j) - df;
        }
      }
    }
  });
  const double nb = static_cast<double>(kBatches);
  for (std::size_t c = 0; c < cells; ++c) {
    double mean = 0.0, sch = 0.0;
    for (std::size_t b = 0; b < kBatches; ++b) {
      mean += residual[b * cells + c];
      sch += scheme[b * cells + c];
    }
    mean /= nb;
    sch /= nb;
    double var = 0.0;
    for (std::size_t b = 0; b < kBatches; ++b) var += (residual[b * cells + c] - mean) * (residual[b * cells + c] - mean);
    var /= nb - 1.0;
    const double combined = std::sqrt(var / nb + sch * sch);
    r.max_residual = std::max(r.max_residual, std::abs(mean));
    if (combined > 0.0) r.max_z = std::max(r.max_z, std::abs(mean) / combined);
  }
  r.order = 2.0 - std::max(a1, a2);
  r.fitted_constant = r.max_residual / std::pow(h, r.order);
  r.pass = r.max_z <= 3.0;
  return r;
}

}  // namespace fracpoisson

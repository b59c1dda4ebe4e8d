#include "fracpoisson/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "fracpoisson/errors.hpp"
#include "fracpoisson/fraccalc.hpp"

namespace fracpoisson {

namespace {

constexpr long double kPiL = std::numbers::pi_v<long double>;
constexpr long double kEpsL = std::numeric_limits<long double>::epsilon();
constexpr double kTargetAbs = 1e-12;
constexpr int kSeriesCap = 4000;

using Quad = boost::math::quadrature::gauss_kronrod<double, 61>;

bool is_nonpositive_integer(long double x) { return x <= 0 && x == std::floor(x); }

// Adaptive Gauss-Kronrod over consecutive breakpoints; returns (value, error).
template <class F>
std::pair<double, double> integrate_pieces(F&& f, const std::vector<double>& breaks, double rel_tol) {
  double value = 0.0;
  double error = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    if (!(breaks[i + 1] > breaks[i])) continue;
    double piece_err = 0.0;
    value += Quad::integrate(f, breaks[i], breaks[i + 1], 10, rel_tol, &piece_err);
    error += piece_err;
  }
  return {value, error};
}

[[noreturn]] void accuracy_failure(const char* what, double alpha, double beta, double gamma, double z) {
  std::ostringstream os;
  os << what << ": accuracy not attained at alpha=" << alpha << ", beta=" << beta
     << ", gamma=" << gamma << ", z=" << z;
  throw AccuracyError(os.str());
}

// Bromwich integral on the hyperbola s(u) = mu (1 + sin(iu - beta)) by the
// trapezoidal rule with 2n + 1 nodes.
template <class F>
double hyperbolic_invert(F&& transform, long double t, long double beta, int n) {
  constexpr long double kMuT = 8.0L;
  const long double mu = kMuT / t;
  const long double u_max = std::acosh((1.0L + 45.0L / kMuT) / std::sin(beta));
  const long double h = u_max / n;
  long double sum = 0.0L;
  for (int k = -n; k <= n; ++k) {
    const Complex w(-beta, k * h);
    const Complex s = mu * (1.0L + std::sin(w));
    // ds/du = i mu cos(w); the 1/(2 pi i) factor cancels the i.
    sum += (std::exp(s * t) * transform(s) * mu * std::cos(w)).real();
  }
  return static_cast<double>(sum * h / (2.0L * kPiL));
}

double ml_core(double alpha, double beta, double gamma, double z) {
  if (!(alpha > 0.0)) throw DomainError("Mittag-Leffler: alpha must be > 0");
  if (!(beta > 0.0)) throw DomainError("Mittag-Leffler: beta must be > 0");
  if (!(gamma > 0.0)) throw DomainError("Mittag-Leffler: gamma must be > 0");
  if (!std::isfinite(z)) throw DomainError("Mittag-Leffler: z must be finite");
  if (alpha == 1.0 && beta == 1.0 && gamma == 1.0) return std::exp(z);

  if (auto v = detail::ml_series(alpha, beta, gamma, z, kTargetAbs)) return *v;
  if (z < 0.0) {
    if (gamma == 1.0 && alpha < 1.0) {
      if (auto v = detail::ml_asymptotic(alpha, beta, z, kTargetAbs)) return *v;
      if (beta == 1.0) {
        if (auto v = detail::ml_integral(alpha, z, kTargetAbs)) return *v;
      }
    }
    if (alpha <= 1.0) {
      if (auto v = detail::ml_laplace(alpha, beta, gamma, z, 1e-10)) return *v;
    }
  }
  accuracy_failure("mittag_leffler", alpha, beta, gamma, z);
}

}  // namespace

long double rgamma(long double x) {
  if (x > 0) return x < 1700 ? 1.0L / std::tgamma(x) : std::exp(-std::lgamma(x));
  if (is_nonpositive_integer(x)) return 0.0L;
  // Reflection: 1/Gamma(x) = sin(pi x) Gamma(1 - x) / pi.
  const long double s = std::sin(kPiL * (x - 2.0L * std::floor(x / 2.0L)));
  const long double g = (1.0L - x) < 1700 ? std::tgamma(1.0L - x) : std::exp(std::lgamma(1.0L - x));
  return s * g / kPiL;
}

namespace detail {

std::optional<double> ml_series(double alpha, double beta, double gamma, double z, double tol) {
  if (z == 0.0) return static_cast<double>(rgamma(beta));
  const long double lz = std::log(std::fabs(static_cast<long double>(z)));
  const long double lg0 = std::lgamma(static_cast<long double>(gamma));
  long double sum = 0.0L;
  long double rounding = 0.0L;
  long double prev = std::numeric_limits<long double>::infinity();
  // Here |E_{alpha,beta}(z)| <= 1/Gamma(beta) on the negative axis.
  const bool bounded = z < 0.0 && gamma == 1.0 && alpha <= 1.0 && beta >= alpha;
  const long double bound = bounded ? std::max(1.0L, rgamma(beta)) : std::numeric_limits<long double>::infinity();
  for (int k = 0; k < kSeriesCap; ++k) {
    const long double lp = std::lgamma(static_cast<long double>(gamma) + k) - lg0 -
                           std::lgamma(static_cast<long double>(k) + 1.0L);
    const long double lg = std::lgamma(static_cast<long double>(alpha) * k + beta);
    const long double log_mag = lp - lg + k * lz;
    long double term = std::exp(log_mag);
    if (z < 0.0 && (k & 1)) term = -term;
    sum += term;
    const long double mag = std::fabs(term);
    rounding += mag * (std::fabs(lp) + std::fabs(lg) + k * std::fabs(lz) + 4.0L) * kEpsL;
    if (rounding > tol * bound) return std::nullopt;
    if (k > 0 && mag <= prev && mag <= kEpsL * std::fabs(sum) * 1e-2L) {
      const long double scale = std::max(1.0L, std::fabs(sum));
      if (rounding <= tol * scale && std::isfinite(static_cast<double>(sum))) return static_cast<double>(sum);
      return std::nullopt;
    }
    prev = mag;
  }
  return std::nullopt;
}

std::optional<double> ml_asymptotic(double alpha, double beta, double z, double tol) {
  if (!(z < 0.0) || !(alpha > 0.0 && alpha < 1.0)) return std::nullopt;
  const long double x = -static_cast<long double>(z);
  constexpr int kMaxTerms = 10;
  std::vector<long double> terms;
  for (int k = 1; k <= kMaxTerms + 2; ++k) {
    // -sum_k z^{-k} / Gamma(beta - alpha k) = sum_k (-1)^{k+1} x^{-k} / Gamma(beta - alpha k).
    long double t = std::pow(x, -static_cast<long double>(k)) * rgamma(beta - static_cast<long double>(alpha) * k);
    terms.push_back((k & 1) ? t : -t);
  }
  long double sum = 0.0L;
  int used = 0;
  long double last = std::numeric_limits<long double>::infinity();
  for (int k = 0; k < kMaxTerms; ++k) {
    const long double mag = std::fabs(terms[k]);
    if (mag > last && mag != 0.0L) break;
    sum += terms[k];
    ++used;
    if (mag != 0.0L) last = mag;
  }
  const long double remainder = std::max(std::fabs(terms[used]), std::fabs(terms[used + 1]));
  // Exponentially small contributions just outside the sector |arg z| <= alpha pi.
  const long double beyond = 2.0L / alpha *
                             std::exp(std::pow(x, 1.0L / alpha) * std::cos(kPiL / alpha)) *
                             std::pow(x, (1.0L - beta) / alpha);
  if (remainder + beyond <= tol) return static_cast<double>(sum);
  return std::nullopt;
}

std::optional<double> ml_integral(double alpha, double z, double tol) {
  if (!(z < 0.0) || !(alpha > 0.0 && alpha < 1.0)) return std::nullopt;
  const double x = -z;
  const double inv_alpha = 1.0 / alpha;
  const double c = std::cos(alpha * std::numbers::pi);
  const double sn = std::sin(alpha * std::numbers::pi);
  auto f = [&](double w) {
    return std::exp(-std::pow(x * w, inv_alpha)) / (w * w + 2.0 * w * c + 1.0);
  };
  const double upper = std::pow(60.0, alpha) / x;
  std::vector<double> breaks{0.0};
  if (c < 0.0) {
    const double w0 = -c;
    for (double off : {-8.0, -1.0, 0.0, 1.0, 8.0}) {
      const double b = w0 + off * sn;
      if (b > breaks.back() && b < upper) breaks.push_back(b);
    }
  }
  for (double b : {0.1 / x, 1.0 / x, 4.0 / x}) {
    if (b > 0.0 && b < upper) breaks.push_back(b);
  }
  breaks.push_back(upper);
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  static thread_local boost::math::quadrature::tanh_sinh<double> ts(10);
  double value = 0.0;
  double error = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    double piece_err = 0.0;
    double l1 = 0.0;
    value += ts.integrate([&](double w, double) { return f(w); }, breaks[i], breaks[i + 1], 1e-14, &piece_err, &l1);
    error += piece_err;
  }
  const double scale = sn / (alpha * std::numbers::pi);
  if (error * scale <= tol) return value * scale;
  return std::nullopt;
}

std::optional<double> ml_laplace(double alpha, double beta, double gamma, double z, double tol) {
  const long double a = alpha;
  const long double exponent = a * gamma - beta;
  const long double zz = z;
  const long double g = gamma;
  LaplaceTransform transform = [=](Complex s) {
    return std::pow(s, exponent) / std::pow(std::pow(s, a) - zz, g);
  };
  try {
    const double v48 = laplace_invert(transform, 1.0, InversionMethod::talbot, 48);
    const double v36 = laplace_invert(transform, 1.0, InversionMethod::talbot, 36);
    if (std::fabs(v48 - v36) <= tol) return v36;
  } catch (const InversionError&) {
  }
  return std::nullopt;
}

}  // namespace detail

double mittag_leffler(double alpha, double z) { return ml_core(alpha, 1.0, 1.0, z); }

double mittag_leffler2(double alpha, double beta, double z) { return ml_core(alpha, beta, 1.0, z); }

double mittag_leffler3(double alpha, double beta, double gamma, double z) {
  return ml_core(alpha, beta, gamma, z);
}

double wright(double gamma, double beta, double z) {
  if (!(gamma > -1.0)) throw DomainError("wright: gamma must be > -1");
  if (z == 0.0) return static_cast<double>(rgamma(beta));
  const long double lz = std::log(std::fabs(static_cast<long double>(z)));
  long double sum = 0.0L;
  long double rounding = 0.0L;
  long double prev = std::numeric_limits<long double>::infinity();
  for (int k = 0; k < kSeriesCap; ++k) {
    const long double lf = std::lgamma(static_cast<long double>(k) + 1.0L);
    const long double arg = static_cast<long double>(gamma) * k + beta;
    const long double rg = rgamma(arg);
    long double term = std::exp(k * lz - lf) * rg;
    if (z < 0.0 && (k & 1)) term = -term;
    sum += term;
    const long double mag = std::fabs(term);
    rounding += mag * (k * std::fabs(lz) + lf + std::fabs(std::lgamma(std::fabs(arg) + 1.0L)) + 4.0L) * kEpsL;
    if (mag == 0.0L) continue;
    if (k > 0 && mag <= prev && mag <= kEpsL * std::fabs(sum) * 1e-2L) {
      const long double scale = std::max(1.0L, std::fabs(sum));
      if (rounding <= kTargetAbs * scale && std::isfinite(static_cast<double>(sum))) return static_cast<double>(sum);
      accuracy_failure("wright", gamma, beta, 0.0, z);
    }
    prev = mag;
  }
  accuracy_failure("wright", gamma, beta, 0.0, z);
}

double stable_density(Alpha alpha, double x) {
  if (!(x > 0.0)) throw DomainError("stable_density: x must be > 0");
  if (alpha.is_one()) throw DomainError("stable_density: alpha = 1 is a point mass at 1");
  const double a = alpha.value();
  try {
    const double w = wright(-a, 0.0, -std::pow(x, -a));
    return std::max(0.0, w / x);
  } catch (const AccuracyError&) {
  }
  // Zolotarev-Kanter integral form, free of cancellation for small x.
  const double q = 1.0 / (1.0 - a);
  const double scale_x = std::pow(x, -a * q);
  auto kanter_a = [&](double u) {
    const double su = std::sin(u);
    const double sau = std::sin(a * u);
    return std::pow(sau, a * q) * std::sin((1.0 - a) * u) / std::pow(su, q);
  };
  auto f = [&](double u) {
    if (u <= 0.0 || u >= std::numbers::pi) return 0.0;
    const double au = kanter_a(u);
    const double e = au * scale_x;
    return e > 745.0 ? 0.0 : au * std::exp(-e);
  };
  const std::vector<double> breaks{0.0, std::numbers::pi / 4, std::numbers::pi / 2, 3 * std::numbers::pi / 4,
                                   std::numbers::pi};
  auto [value, error] = integrate_pieces(f, breaks, 1e-13);
  (void)error;
  if (!(value > 0.0)) return 0.0;
  return a * q / std::numbers::pi * std::exp(std::log(value) - q * std::log(x));
}

double inverse_stable_density(Alpha alpha, double t, double x) {
  if (!(t > 0.0)) throw DomainError("inverse_stable_density: t must be > 0");
  if (!(x > 0.0)) throw DomainError("inverse_stable_density: x must be > 0");
  if (alpha.is_one()) throw DomainError("inverse_stable_density: alpha = 1 is a point mass at t");
  const double a = alpha.value();
  const double ta = std::pow(t, -a);
  try {
    return std::max(0.0, ta * wright(-a, 1.0 - a, -x * ta));
  } catch (const AccuracyError&) {
  }
  const double y = t * std::pow(x, -1.0 / a);
  if (y == 0.0) return 0.0;
  return t / a * std::pow(x, -1.0 - 1.0 / a) * stable_density(alpha, y);
}

double mixed_inverse_density(const MixedParams& params, double t, double x) {
  if (!(t > 0.0)) throw DomainError("mixed_inverse_density: t must be > 0");
  if (!(x >= 0.0)) throw DomainError("mixed_inverse_density: x must be >= 0");
  const long double c1 = params.c1();
  const long double c2 = params.c2();
  const long double a1 = params.alpha1().value();
  const long double a2 = params.alpha2().value();
  const long double xl = x;
  auto transform = [=](Complex s) {
    const Complex phi = c1 * std::pow(s, a1) + c2 * std::pow(s, a2);
    return phi / s * std::exp(-xl * phi);
  };
  // Keep the contour inside |arg s| < pi / (2 max alpha), where Re phi > 0.
  const long double room = kPiL / (2.0L * std::max(a1, a2)) - kPiL / 2.0L;
  const long double beta = std::clamp(0.5L * room, 0.02L, kPiL / 4.0L);
  const double coarse = hyperbolic_invert(transform, t, beta, 400);
  const double fine = hyperbolic_invert(transform, t, beta, 800);
  if (!std::isfinite(fine) || std::fabs(fine - coarse) > 1e-10) {
    accuracy_failure("mixed_inverse_density", params.alpha1().value(), params.alpha2().value(), x, t);
  }
  return std::max(0.0, fine);
}

}  // namespace fracpoisson

#include "zlab/zeta_core.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <mutex>
#include <numbers>
#include <vector>

#include "zlab/errors.hpp"
#include "zlab/zeros.hpp"

namespace zlab {
namespace {

#include "rs_coefficients.inc"

using cld = std::complex<long double>;

constexpr long double kPiL = 3.141592653589793238462643383279502884L;
constexpr long double kTwoPiL = 2.0L * kPiL;
constexpr long double kLnPiL = 1.144729885849400174143427351353058712L;
constexpr long double kHalfLnTwoPiL = 0.918938533204672741780329736405617640L;

// B_{2k} for k = 1..10.
constexpr std::array<long double, 10> kBernoulli2k = {
    1.0L / 6.0L,     -1.0L / 30.0L,       1.0L / 42.0L,      -1.0L / 30.0L,
    5.0L / 66.0L,    -691.0L / 2730.0L,   7.0L / 6.0L,       -3617.0L / 510.0L,
    43867.0L / 798.0L, -174611.0L / 330.0L};

constexpr long double kStirlingRadius = 16.0L;

void require_finite(double t, const char* what) {
  if (!std::isfinite(t)) throw DomainError(std::string(what) + ": non-finite input");
}

// Im log Gamma(x + iy) for x > 0, continuous in y.
long double im_log_gamma(long double x, long double y) {
  long double shift_args = 0.0L;
  while (x * x + y * y < kStirlingRadius * kStirlingRadius) {
    shift_args += std::atan2(y, x);
    x += 1.0L;
  }
  const cld w(x, y);
  const long double modulus = std::hypot(x, y);
  long double im = (x - 0.5L) * std::atan2(y, x) + y * std::log(modulus) - y;
  const cld inv = 1.0L / w;
  const cld inv2 = inv * inv;
  cld pw = inv;
  for (std::size_t k = 1; k <= kBernoulli2k.size(); ++k) {
    const long double c = kBernoulli2k[k - 1] / static_cast<long double>((2 * k) * (2 * k - 1));
    im += c * pw.imag();
    pw *= inv2;
  }
  return im - shift_args;
}

// Re digamma(x + iy) for x > 0.
long double re_digamma(long double x, long double y) {
  long double shift = 0.0L;
  while (x * x + y * y < kStirlingRadius * kStirlingRadius) {
    shift += x / (x * x + y * y);
    x += 1.0L;
  }
  const cld w(x, y);
  cld acc = std::log(w) - 0.5L / w;
  const cld inv2 = 1.0L / (w * w);
  cld pw = inv2;
  for (std::size_t k = 1; k <= kBernoulli2k.size(); ++k) {
    acc -= kBernoulli2k[k - 1] / static_cast<long double>(2 * k) * pw;
    pw *= inv2;
  }
  return acc.real() - shift;
}

long double reduce_phase(long double phase) {
  return phase - kTwoPiL * std::nearbyint(phase / kTwoPiL);
}

// log(n) split as hi + lo doubles, built from an extended-precision log.
struct LogEntry {
  double hi;
  double lo;
};

const std::vector<LogEntry>& log_table(std::int64_t n_max) {
  thread_local std::vector<LogEntry> table{{0.0, 0.0}, {0.0, 0.0}};
  if (static_cast<std::int64_t>(table.size()) <= n_max) {
    const auto old = static_cast<std::int64_t>(table.size());
    table.resize(static_cast<std::size_t>(n_max + 1));
    for (std::int64_t n = old; n <= n_max; ++n) {
      const long double l = std::log(static_cast<long double>(n));
      const auto hi = static_cast<double>(l);
      table[static_cast<std::size_t>(n)] = {hi, static_cast<double>(l - hi)};
    }
  }
  return table;
}

// n^{-sigma} for the most recent sigma requested on this thread.
const std::vector<double>& amplitude_table(double sigma, std::int64_t n_max) {
  thread_local double cached_sigma = std::numeric_limits<double>::quiet_NaN();
  thread_local std::vector<double> amp{0.0};
  const auto& logs = log_table(n_max);
  if (sigma != cached_sigma) {
    amp.assign(1, 0.0);
    cached_sigma = sigma;
  }
  if (static_cast<std::int64_t>(amp.size()) <= n_max) {
    const auto old = static_cast<std::int64_t>(amp.size());
    amp.resize(static_cast<std::size_t>(n_max + 1));
    for (std::int64_t n = old; n <= n_max; ++n) {
      const LogEntry& e = logs[static_cast<std::size_t>(n)];
      amp[static_cast<std::size_t>(n)] = std::exp(-sigma * (e.hi + e.lo));
    }
  }
  return amp;
}

constexpr double kTwoPiHi = 6.283185307179586232;
constexpr double kTwoPiLo = 2.449293598294706414e-16;

// (base - t * log n) reduced to [-pi, pi] using double-double arithmetic.
inline double reduced_phase(double base_hi, double base_lo, double t, const LogEntry& e) {
  const double p = t * e.hi;
  const double perr = std::fma(t, e.hi, -p);
  const double k = std::nearbyint(p / kTwoPiHi);
  const double r = std::fma(-k, kTwoPiHi, p);  // exact: result is below 2 pi in size
  return base_hi - r + (base_lo - perr - t * e.lo + k * kTwoPiLo);
}

// Ratios b_{k+1}/b_k of b_k = B_{2k}/(2k)! = (-1)^{k+1} 2 zeta(2k) / (2 pi)^{2k}.
const std::vector<long double>& bernoulli_ratio_table(int k_max) {
  static std::mutex mu;
  static std::vector<long double> ratios;
  std::lock_guard lock(mu);
  if (static_cast<int>(ratios.size()) < k_max + 1) {
    auto zeta_even = [](int k) -> long double {
      if (k == 1) return kPiL * kPiL / 6.0L;
      if (k == 2) return kPiL * kPiL * kPiL * kPiL / 90.0L;
      long double s = 0.0L;
      constexpr int kTerms = 200;
      for (int n = kTerms; n >= 1; --n) s += std::pow(static_cast<long double>(n), -2.0L * k);
      const long double m = kTerms + 0.5L;
      s += std::pow(m, 1.0L - 2.0L * k) / (2.0L * k - 1.0L);
      return s;
    };
    ratios.assign(static_cast<std::size_t>(k_max + 1), 0.0L);
    long double prev = zeta_even(1);
    for (int k = 1; k <= k_max; ++k) {
      const long double next = zeta_even(k + 1);
      ratios[static_cast<std::size_t>(k)] = -next / (prev * kTwoPiL * kTwoPiL);
      prev = next;
    }
  }
  return ratios;
}

std::complex<double> zeta_euler_maclaurin(double sigma, double t, const PrecisionConfig& cfg) {
  const std::int64_t big_n = cfg.em_terms_policy.cutoff(std::abs(t));
  const auto& amp = amplitude_table(sigma, big_n);
  const auto& logs = log_table(big_n);

  double re = 0.0;
  double im = 0.0;
  for (std::int64_t n = 1; n < big_n; ++n) {
    const auto i = static_cast<std::size_t>(n);
    const double ph = reduced_phase(0.0, 0.0, t, logs[i]);
    re += amp[i] * std::cos(ph);
    im += amp[i] * std::sin(ph);
  }

  const cld s(sigma, t);
  const LogEntry& le = logs[static_cast<std::size_t>(big_n)];
  const long double ln_n = static_cast<long double>(le.hi) + le.lo;
  const long double nn = static_cast<long double>(big_n);
  // N^{-s} with the phase reduced in extended precision.
  const long double ph_n = reduce_phase(static_cast<long double>(t) * ln_n);
  const cld n_pow_minus_s = std::exp(-static_cast<long double>(sigma) * ln_n) *
                            cld(std::cos(ph_n), -std::sin(ph_n));
  cld acc(static_cast<long double>(re), static_cast<long double>(im));
  acc += n_pow_minus_s * nn / (s - 1.0L);
  acc += 0.5L * n_pow_minus_s;

  const int k_max = cfg.em_terms_policy.max_corrections;
  const auto& ratios = bernoulli_ratio_table(k_max);
  const long double inv_n2 = 1.0L / (nn * nn);
  // T_1 = (B_2/2!) s N^{-s-1}
  cld term = (1.0L / 12.0L) * s * n_pow_minus_s / nn;
  const long double target = 0.01L * static_cast<long double>(cfg.abs_tol);
  long double best_bound = std::numeric_limits<long double>::infinity();
  for (int k = 1;; ++k) {
    acc += term;
    const long double kk = 2.0L * k + 1.0L;
    const long double bound =
        std::abs(term) * std::abs(s + kk) / (static_cast<long double>(sigma) + kk);
    best_bound = std::min(best_bound, bound);
    if (bound < target) break;
    if (k >= k_max) {
      throw PrecisionError("zeta: Euler-Maclaurin tail did not reach abs_tol",
                           static_cast<double>(best_bound));
    }
    const long double tk = 2.0L * k;
    term *= (s + (tk - 1.0L)) * (s + tk) * inv_n2 * ratios[static_cast<std::size_t>(k)];
  }
  return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

double rs_correction(int k, double u) {
  double r = 0.0;
  for (int j = kRsDegree; j >= 0; --j) r = r * u + kRsCoeff[k][j];
  return r;
}

}  // namespace

Height::Height(double t) : t_(t) {
  require_finite(t, "Height");
  if (t < 0.0) throw DomainError("Height: negative ordinate");
}

long double theta_extended(long double t) {
  return im_log_gamma(0.25L, 0.5L * t) - 0.5L * t * kLnPiL;
}

double theta(Height t) { return static_cast<double>(theta_extended(t.value())); }

double theta_deriv(Height t, const PrecisionConfig&) {
  if (t.value() <= 2.0 * std::numbers::pi) throw DomainError("theta_deriv: requires t > 2 pi");
  const long double d = 0.5L * re_digamma(0.25L, 0.5L * t.value()) - 0.5L * kLnPiL;
  return static_cast<double>(d);
}

std::complex<double> zeta(ComplexPoint s, const PrecisionConfig& cfg) {
  require_finite(s.sigma, "zeta");
  require_finite(s.t, "zeta");
  if (s.t == 0.0 && s.sigma == 1.0) throw PoleError("zeta: pole at s = 1");
  if (s.sigma <= 0.0) throw DomainError("zeta: requires sigma > 0");
  if (s.t < 0.0) return std::conj(zeta_euler_maclaurin(s.sigma, -s.t, cfg));
  return zeta_euler_maclaurin(s.sigma, s.t, cfg);
}

std::complex<double> hardy_z_construction(Height t, const PrecisionConfig& cfg) {
  const std::complex<double> z = zeta({0.5, t.value()}, cfg);
  const long double th = reduce_phase(theta_extended(t.value()));
  const std::complex<double> rot(std::cos(static_cast<double>(th)),
                                 std::sin(static_cast<double>(th)));
  return rot * z;
}

double hardy_z_riemann_siegel(double t) {
  if (!(t >= 2.0 * std::numbers::pi)) throw DomainError("Riemann-Siegel: requires t >= 2 pi");
  const long double tl = t;
  const double a = std::sqrt(t / (2.0 * std::numbers::pi));
  const auto big_n = static_cast<std::int64_t>(std::floor(a));
  const double p = a - static_cast<double>(big_n);
  const long double th = reduce_phase(theta_extended(tl));
  const auto th_hi = static_cast<double>(th);
  const auto th_lo = static_cast<double>(th - th_hi);
  const auto& logs = log_table(big_n);
  const auto& amp = amplitude_table(0.5, big_n);

  double main = 0.0;
  for (std::int64_t n = 1; n <= big_n; ++n) {
    const auto i = static_cast<std::size_t>(n);
    main += amp[i] * std::cos(reduced_phase(th_hi, th_lo, t, logs[i]));
  }

  const double u = p - 0.5;
  const double inv_a = 1.0 / a;
  double corr = 0.0;
  double pw = 1.0;
  for (int k = 0; k <= 4; ++k) {
    corr += rs_correction(k, u) * pw;
    pw *= inv_a;
  }
  const double sign = (big_n % 2 == 1) ? 1.0 : -1.0;  // (-1)^{N-1}
  return 2.0 * main + sign * corr / std::sqrt(a);
}

double hardy_z(Height t, const PrecisionConfig& cfg) {
  if (t.value() >= cfg.riemann_siegel_crossover()) return hardy_z_riemann_siegel(t.value());
  return hardy_z_construction(t, cfg).real();
}

ArgTrace s_of_t(Height t, const PrecisionConfig& cfg) {
  const double tv = t.value();
  ArgTrace out;
  out.t = tv;
  if (tv == 0.0) {
    // Limit t -> 0+: the horizontal leg passes just above the pole at s = 1,
    // which turns arg zeta by -pi.
    out.s_value = -1.0;
    out.zero_count = 0;
    out.branch_residual = 0.0;
    return out;
  }

  if (std::abs(zeta({0.5, tv}, cfg)) < cfg.abs_tol * (1.0 + std::log1p(tv))) {
    throw AmbiguousBranchError("s_of_t: t is at a zero ordinate");
  }

  const std::complex<double> top = zeta({2.0, tv}, cfg);
  // Re zeta(2 + it) >= 2 - zeta(2) > 0, so the principal argument is continuous.
  long double arg = std::arg(top);
  std::complex<double> prev = top;
  double sigma = 2.0;
  double step = cfg.quad_step_cap;
  constexpr double kMinStep = 1e-13;
  constexpr double kMaxTurn = std::numbers::pi / 6.0;
  while (sigma > 0.5) {
    step = std::min(step, sigma - 0.5);
    const double next_sigma = (sigma - step <= 0.5) ? 0.5 : sigma - step;
    const std::complex<double> cur = zeta({next_sigma, tv}, cfg);
    const double turn = std::arg(cur / prev);
    const double grow = std::abs(cur) / std::abs(prev);
    if (std::abs(turn) > kMaxTurn || grow > 2.0 || grow < 0.5 || !std::isfinite(turn)) {
      step *= 0.5;
      if (step < kMinStep) throw TrackingError("s_of_t: argument varies too fast to track");
      continue;
    }
    arg += turn;
    sigma = next_sigma;
    prev = cur;
    step = std::min(cfg.quad_step_cap, 2.0 * step);
  }

  out.s_value = static_cast<double>(arg / kPiL);
  const long double w = theta_extended(tv) / kPiL + 1.0L + arg / kPiL;
  const long double n = std::nearbyint(w);
  out.zero_count = static_cast<std::int64_t>(n);
  out.branch_residual = static_cast<double>(std::abs(w - n));
  return out;
}

double s1_of_t(Height t, const PrecisionConfig& cfg) {
  if (t.value() == 0.0) return 0.0;
  return shared_zero_index(cfg).s1_at(t.value());
}

}  // namespace zlab

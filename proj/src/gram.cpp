#include "zlab/gram.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>

#include "zlab/csv.hpp"
#include "zlab/errors.hpp"
#include "zlab/parallel.hpp"

namespace zlab {
namespace {

constexpr long double kPiL = 3.141592653589793238462643383279502884L;

// Solves w e^w = x for x > 0.
double lambert_w(double x) {
  double w = x < 1.0 ? x : std::log(x) - std::log(std::log(x) + 1.0);
  for (int i = 0; i < 50; ++i) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    const double step = f / (ew * (w + 1.0) - (w + 2.0) * f / (2.0 * w + 2.0));
    w -= step;
    if (std::abs(step) < 1e-15 * (1.0 + std::abs(w))) break;
  }
  return w;
}

// Leading-order inverse of theta(t) = (t/2) ln(t / 2 pi e) - pi/8.
double initial_guess(std::int64_t nu) {
  const double m = static_cast<double>(nu) + 0.125;
  return 2.0 * std::numbers::pi * m / lambert_w(m / std::numbers::e);
}

}  // namespace

GramPoint gram_point(std::int64_t nu, const PrecisionConfig& cfg) {
  if (nu < 1) throw DomainError("gram_point: requires nu >= 1");
  const long double target = kPiL * static_cast<long double>(nu);
  auto f = [&](double t) { return theta_extended(t) - target; };

  // theta is increasing beyond its minimum near t = 6.29, and theta(2 pi) < 0 < pi.
  double lo = 2.0 * std::numbers::pi;
  double hi = std::max(initial_guess(nu), lo + 1.0);
  while (f(hi) < 0.0L) {
    lo = hi;
    hi *= 1.5;
  }

  double t = std::clamp(initial_guess(nu), lo, hi);
  long double ft = f(t);
  const long double tol = static_cast<long double>(cfg.abs_tol) * 0.25L;
  for (int iter = 0; iter < cfg.max_newton_iters && std::abs(ft) > tol; ++iter) {
    if (ft < 0.0L) lo = std::max(lo, t); else hi = std::min(hi, t);
    double next = t - static_cast<double>(ft) / theta_deriv(Height(t), cfg);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (next == t) break;
    t = next;
    ft = f(t);
  }
  // Newton can stall at the last ulp; finish on the bracket.
  for (int iter = 0; std::abs(ft) > tol && iter < 200; ++iter) {
    if (ft < 0.0L) lo = t; else hi = t;
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    t = mid;
    ft = f(t);
  }
  const double residual = static_cast<double>(std::abs(ft));
  if (!(residual <= cfg.abs_tol)) {
    throw RootError("gram_point: residual above abs_tol for nu = " + std::to_string(nu));
  }
  return {nu, t, residual};
}

GramRange gram_range(Height t_lo, Height t_hi, const PrecisionConfig& cfg) {
  if (!(t_lo.value() > 2.0 * std::numbers::pi)) throw DomainError("gram_range: requires t_lo > 2 pi");
  if (!(t_lo.value() < t_hi.value())) throw DomainError("gram_range: requires t_lo < t_hi");
  GramRange out;
  out.t_lo = t_lo;
  out.t_hi = t_hi;

  const long double th_lo = theta_extended(t_lo.value()) / kPiL;
  const long double th_hi = theta_extended(t_hi.value()) / kPiL;
  // One index of slack on each side; membership is decided on t itself.
  const std::int64_t first = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(th_lo)) - 1);
  const std::int64_t last = static_cast<std::int64_t>(std::ceil(th_hi));
  if (last < first) return out;

  const auto n = static_cast<std::size_t>(last - first + 1);
  auto pts = parallel::map_indices<GramPoint>(
      n, [&](std::size_t i) { return gram_point(first + static_cast<std::int64_t>(i), cfg); });
  for (const GramPoint& p : pts) {
    if (p.t >= t_lo.value() && p.t < t_hi.value()) out.points.push_back(p);
  }
  return out;
}

double gram_count_estimate(Height big_t) {
  if (!(big_t.value() > std::numbers::e)) throw DomainError("gram_count_estimate: requires T > e");
  return big_t.value() * std::log(big_t.value()) / (2.0 * std::numbers::pi);
}

void write_gram_csv(std::ostream& os, const GramRange& range) {
  csv::Writer w(os, {"nu", "t", "residual"});
  for (const GramPoint& p : range.points) {
    w.row(p.nu, p.t, p.residual);
  }
}

}  // namespace zlab

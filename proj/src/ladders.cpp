#include "zlab/ladders.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "zlab/csv.hpp"
#include "zlab/errors.hpp"
#include "zlab/moments.hpp"
#include "zlab/quadrature.hpp"
#include "zlab/summation.hpp"

namespace zlab {
namespace {

double z_squared(double t, const PrecisionConfig& cfg) {
  const double z = hardy_z(Height(t), cfg);
  return z * z;
}

}  // namespace

LadderStep reverse_step(Height T, const PrecisionConfig& cfg) {
  if (T.value() < 100.0) throw DomainError("reverse_iterate: T must be >= 100");
  const double base = T.value();
  const double target = (1.0 - kEulerGamma) * base;
  const double guess_gap = target / std::log(base);

  PanelOptions opt;
  opt.max_width = oscillation_panel_width(base + 2.0 * guess_gap, cfg);
  opt.abs_tol_density = cfg.abs_tol;
  const auto f = [&cfg](double t) { return z_squared(t, cfg); };

  // Cumulative integral on a lattice anchored at T, extended chunk by chunk until
  // it passes the target. The first chunk ends at the initial guess.
  std::vector<double> lattice{base};
  NeumaierSum cumulative;
  std::vector<double> cum_at{0.0};
  double chunk_end = base + guess_gap;
  for (int round = 0; cum_at.back() < target; ++round) {
    if (round > 64) throw RootError("reverse_iterate: failed to bracket the ladder step");
    const double from = lattice.back();
    const auto n = static_cast<std::size_t>(std::ceil((chunk_end - from) / opt.max_width));
    std::vector<double> cells{from};
    for (std::size_t i = 1; i <= n; ++i) {
      cells.push_back(i == n ? chunk_end
                             : from + (chunk_end - from) * static_cast<double>(i) /
                                          static_cast<double>(n));
    }
    const auto vals = lattice_integrals(f, cells, opt);
    for (std::size_t i = 0; i < vals.size(); ++i) {
      cumulative.add(vals[i]);
      lattice.push_back(cells[i + 1]);
      cum_at.push_back(cumulative.value());
      if (cum_at.back() >= target) break;
    }
    chunk_end = lattice.back() + 0.25 * guess_gap;
  }

  // Solve inside the last cell [a, b]: C(a) + integral_a^U Z^2 = target.
  const std::size_t k = lattice.size() - 2;
  double a = lattice[k];
  double b = lattice[k + 1];
  const double c0 = cum_at[k];
  const int order = 2 * opt.order;
  const auto G = [&](double u) { return c0 + gauss_apply(f, order, lattice[k], u) - target; };

  double lo = a, hi = b;
  double u = a + (b - a) * (target - c0) / std::max(cum_at[k + 1] - c0, 1e-300);
  u = std::clamp(u, lo, hi);
  double g = G(u);
  for (int iter = 0; iter < cfg.max_newton_iters; ++iter) {
    if (g > 0.0) hi = u; else lo = u;
    if (std::abs(g) <= 0.01 * cfg.abs_tol * base || hi - lo < 1e-14 * base) break;
    const double d = f(u);
    double next = u - g / d;
    // Newton is unreliable where Z is near a zero; bisect instead.
    if (!(d > 1e-8) || !(next > lo && next < hi)) next = 0.5 * (lo + hi);
    u = next;
    g = G(u);
  }
  const double residual = std::abs(g);
  if (residual > cfg.abs_tol * base) {
    throw RootError("reverse_iterate: residual above abs_tol * T");
  }
  return {base, u, g + target, residual};
}

LadderChain ladder_chain(Height T, int k, const PrecisionConfig& cfg) {
  if (k < 1 || k > 20) throw DomainError("ladder_chain: k must be in [1, 20]");
  LadderChain chain;
  chain.base = T;
  double cur = T;
  for (int r = 0; r < k; ++r) {
    const LadderStep s = reverse_step(Height(cur), cfg);
    chain.iterates.push_back(s.iterate);
    chain.residuals.push_back(s.residual);
    chain.slice_integrals.push_back(s.slice_integral);
    cur = s.iterate;
  }
  return chain;
}

PartitionReport partition_report(const LadderChain& chain) {
  const std::size_t k = chain.iterates.size();
  if (k < 2) throw DomainError("partition_report: chain needs at least two iterates");
  auto at = [&](std::size_t r) { return r == 0 ? chain.base : chain.iterates[r - 1]; };
  PartitionReport rep;
  for (std::size_t r = 1; r <= k; ++r) {
    const double gap = at(r) - at(r - 1);
    const double prev = at(r - 1);
    rep.gap_prediction_ratios.push_back(gap / ((1.0 - chain.euler_c) * prev / std::log(prev)));
    if (r >= 2) {
      rep.gap_ratios.push_back(gap / (at(r - 1) - at(r - 2)));
      rep.integral_ratios.push_back(chain.slice_integrals[r - 1] / chain.slice_integrals[r - 2]);
    }
  }
  return rep;
}

void write_ladder_csv(std::ostream& os, const LadderChain& chain) {
  csv::Writer w(os, {"r", "T_r", "gap", "slice_integral", "residual"});
  w.row(0, chain.base, 0.0, 0.0, 0.0);
  double prev = chain.base;
  for (std::size_t r = 0; r < chain.iterates.size(); ++r) {
    w.row(static_cast<int>(r + 1), chain.iterates[r], chain.iterates[r] - prev,
          chain.slice_integrals[r], chain.residuals[r]);
    prev = chain.iterates[r];
  }
}

}  // namespace zlab

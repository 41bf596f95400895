#include "zlab/moments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>

#include "zlab/csv.hpp"
#include "zlab/errors.hpp"
#include "zlab/quadrature.hpp"
#include "zlab/zeros.hpp"

namespace zlab {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

PanelOptions panel_options(double t_hi, const PrecisionConfig& cfg) {
  PanelOptions opt;
  opt.max_width = oscillation_panel_width(t_hi, cfg);
  opt.abs_tol_density = cfg.abs_tol;
  return opt;
}

void check_interval(const char* who, double lo, double hi) {
  if (!(lo <= hi)) throw DomainError(std::string(who) + ": requires t_lo <= t_hi");
}

MomentEstimate finish(MomentEstimate m, const QuadResult& q, const char* who) {
  m.value = std::max(q.value, 0.0);
  m.quad_error = q.error;
  const double len = m.t_hi - m.t_lo;
  m.per_unit = len > 0.0 ? m.value / len : 0.0;
  if (m.value > 0.0 && m.quad_error > 0.01 * m.value) {
    throw PrecisionError(std::string(who) + ": quadrature error exceeds 1% of value",
                         m.quad_error);
  }
  return m;
}

}  // namespace

std::string MomentEstimate::kind_label() const {
  switch (kind) {
    case MomentKind::critical2: return "critical2";
    case MomentKind::sigma2: return "sigma2(" + csv::format(sigma) + ")";
    case MomentKind::s1moment: return "s1moment(" + std::to_string(l) + ")";
  }
  return "unknown";
}

std::string cbar_cache_key(int l, double T, double H) {
  return "cbar/l=" + std::to_string(l) + "/T=" + csv::format(T) + "/H=" + csv::format(H);
}

std::string CbarEstimate::cache_key() const { return cbar_cache_key(l, T, H); }

double oscillation_panel_width(double t, const PrecisionConfig& cfg) {
  const double lg = std::log(t / kTwoPi);
  if (!(lg > 1.0)) return cfg.quad_step_cap;
  return std::min(cfg.quad_step_cap, 0.25 * kTwoPi / lg);
}

MomentEstimate second_moment_critical(Height t_lo, Height t_hi, const PrecisionConfig& cfg) {
  check_interval("second_moment_critical", t_lo, t_hi);
  MomentEstimate m{t_lo, t_hi, MomentKind::critical2};
  if (t_lo.value() == t_hi.value()) return m;
  const auto q = integrate_panels(
      [&cfg](double t) {
        const double z = hardy_z(Height(t), cfg);
        return z * z;
      },
      t_lo, t_hi, panel_options(t_hi, cfg));
  return finish(m, q, "second_moment_critical");
}

MomentEstimate second_moment_sigma(double sigma, Height t_lo, Height t_hi,
                                   const PrecisionConfig& cfg) {
  if (!(sigma >= 0.5 + cfg.sigma_eps)) {
    throw DomainError("second_moment_sigma: sigma must be >= 1/2 + sigma_eps");
  }
  check_interval("second_moment_sigma", t_lo, t_hi);
  MomentEstimate m{t_lo, t_hi, MomentKind::sigma2, sigma};
  if (t_lo.value() == t_hi.value()) return m;
  const auto q = integrate_panels(
      [&cfg, sigma](double t) { return std::norm(zeta({sigma, t}, cfg)); }, t_lo, t_hi,
      panel_options(t_hi, cfg));
  return finish(m, q, "second_moment_sigma");
}

std::vector<MomentEstimate> s1_moments(std::span<const int> ls, Height t_lo, Height t_hi,
                                       const PrecisionConfig& cfg) {
  for (int l : ls) {
    if (l < 1) throw DomainError("s1_moment: l must be >= 1");
  }
  if (t_lo.value() < 10.0) throw DomainError("s1_moment: t_lo must be >= 10");
  check_interval("s1_moment", t_lo, t_hi);

  std::vector<MomentEstimate> out;
  for (int l : ls) out.push_back(MomentEstimate{t_lo, t_hi, MomentKind::s1moment, 0.5, l});
  if (t_lo.value() == t_hi.value() || ls.empty()) return out;

  // S1 has a kink at every zero, so zeros become panel edges.
  ZeroIndex& index = shared_zero_index(cfg);
  index.ensure(t_hi);
  std::vector<double> edges{t_lo.value()};
  for (double g : index.zeros_in(t_lo, t_hi)) {
    if (g > edges.back()) edges.push_back(g);
  }
  if (t_hi.value() > edges.back()) edges.push_back(t_hi);

  const std::vector<int> powers(ls.begin(), ls.end());
  const MultiIntegrand f = [&index, &powers](double t, std::span<double> vals) {
    const double s1sq = [&] {
      const double s1 = index.s1_at(t);
      return s1 * s1;
    }();
    for (std::size_t i = 0; i < powers.size(); ++i) vals[i] = std::pow(s1sq, powers[i]);
  };
  const auto q = integrate_segments(f, powers.size(), edges, panel_options(t_hi, cfg));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = finish(out[i], q[i], "s1_moment");
  return out;
}

MomentEstimate s1_moment(int l, Height t_lo, Height t_hi, const PrecisionConfig& cfg) {
  const int ls[1] = {l};
  return s1_moments(ls, t_lo, t_hi, cfg).front();
}

CbarEstimate estimate_cbar(int l, Height T, double H, const PrecisionConfig& cfg,
                           ConstantsCache* cache) {
  if (l < 1) throw DomainError("estimate_cbar: l must be >= 1");
  if (!(H >= std::pow(T.value(), 0.6) && H <= T.value())) {
    throw DomainError("estimate_cbar: window must satisfy T^0.6 <= H <= T");
  }
  CbarEstimate est;
  est.l = l;
  est.T = T;
  est.H = H;
  est.cbar = s1_moment(l, T, Height(T + H), cfg).value / H;
  for (int k = 0; k < 4; ++k) {
    const double a = T + H * k / 4.0;
    const double b = T + H * (k + 1) / 4.0;
    const double sub = s1_moment(l, Height(a), Height(b), cfg).value / (b - a);
    est.sub_window_cbar.push_back(sub);
    est.spread = std::max(est.spread, std::abs(sub - est.cbar));
  }
  if (cache) cache->put(est.cache_key(), {est.cbar, est.spread, {}});
  return est;
}

void write_moment_csv(std::ostream& os, std::span<const MomentEstimate> rows) {
  csv::Writer w(os, {"kind", "t_lo", "t_hi", "value", "per_unit", "quad_error"});
  for (const auto& m : rows) w.row(m.kind_label(), m.t_lo, m.t_hi, m.value, m.per_unit, m.quad_error);
}

}  // namespace zlab

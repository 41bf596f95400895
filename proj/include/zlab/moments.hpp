#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "zlab/cache.hpp"
#include "zlab/precision.hpp"
#include "zlab/zeta_core.hpp"

namespace zlab {

enum class MomentKind { critical2, sigma2, s1moment };

struct MomentEstimate {
  double t_lo = 0.0;
  double t_hi = 0.0;
  MomentKind kind = MomentKind::critical2;
  /// Line abscissa for sigma2; 0.5 otherwise.
  double sigma = 0.5;
  /// Power index for s1moment; 0 otherwise.
  int l = 0;
  double value = 0.0;
  double per_unit = 0.0;
  double quad_error = 0.0;

  /// "critical2", "sigma2(1)", "s1moment(2)".
  std::string kind_label() const;
};

struct CbarEstimate {
  int l = 1;
  double T = 0.0;
  double H = 0.0;
  double cbar = 0.0;
  /// Largest |sub-window estimate - cbar| over four equal sub-windows.
  double spread = 0.0;
  std::vector<double> sub_window_cbar;

  std::string cache_key() const;
};

/// "cbar/l=<l>/T=<T>/H=<H>" with 15 significant digits.
std::string cbar_cache_key(int l, double T, double H);

/// Panel width for oscillatory integrands near height t:
/// min(cap, 0.25 * 2 pi / ln(t / 2 pi)).
double oscillation_panel_width(double t, const PrecisionConfig& cfg);

/// Integral of Z(t)^2 = |zeta(1/2 + it)|^2 over [t_lo, t_hi].
MomentEstimate second_moment_critical(Height t_lo, Height t_hi,
                                      const PrecisionConfig& cfg = default_precision());

/// Integral of |zeta(sigma + it)|^2; sigma >= 1/2 + sigma_eps.
MomentEstimate second_moment_sigma(double sigma, Height t_lo, Height t_hi,
                                   const PrecisionConfig& cfg = default_precision());

/// Integral of |S1(t)|^(2l); t_lo >= 10.
MomentEstimate s1_moment(int l, Height t_lo, Height t_hi,
                         const PrecisionConfig& cfg = default_precision());

/// Several powers at once; S1 is evaluated once per quadrature node.
std::vector<MomentEstimate> s1_moments(std::span<const int> ls, Height t_lo, Height t_hi,
                                       const PrecisionConfig& cfg = default_precision());

/// cbar(l) = s1_moment(l, T, T + H) / H with T^0.6 <= H <= T. Persists the
/// estimate when a cache is supplied.
CbarEstimate estimate_cbar(int l, Height T, double H,
                           const PrecisionConfig& cfg = default_precision(),
                           ConstantsCache* cache = nullptr);

/// CSV with header `kind,t_lo,t_hi,value,per_unit,quad_error`.
void write_moment_csv(std::ostream& os, std::span<const MomentEstimate> rows);

}  // namespace zlab

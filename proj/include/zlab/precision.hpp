#pragma once

#include <cstdint>

namespace zlab {

/// Euler-Maclaurin cutoff rule: N = ceil(scale * |t| / (2 pi)) + offset.
struct EmTermsPolicy {
  double scale = 2.0;
  int offset = 50;
  int max_corrections = 400;

  std::int64_t cutoff(double abs_t) const;

  bool operator==(const EmTermsPolicy&) const = default;
};

/// Numerical knobs shared by every evaluator. Pure value type; pass by const&.
struct PrecisionConfig {
  double abs_tol = 1e-10;
  double quad_step_cap = 0.1;
  EmTermsPolicy em_terms_policy{};
  int max_newton_iters = 60;
  /// Lower margin for sigma-line requests: sigma >= 1/2 + sigma_eps.
  double sigma_eps = 0.01;

  /// Throws ConfigError when an invariant is violated.
  void validate() const;

  /// Height above which Z(t) uses the Riemann-Siegel expansion.
  double riemann_siegel_crossover() const;

  bool operator==(const PrecisionConfig&) const = default;
};

inline const PrecisionConfig& default_precision() {
  static const PrecisionConfig cfg{};
  return cfg;
}

}  // namespace zlab

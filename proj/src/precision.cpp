#include "zlab/precision.hpp"

#include <cmath>
#include <numbers>

#include "zlab/errors.hpp"

namespace zlab {

std::int64_t EmTermsPolicy::cutoff(double abs_t) const {
  return static_cast<std::int64_t>(std::ceil(scale * abs_t / (2.0 * std::numbers::pi))) + offset;
}

void PrecisionConfig::validate() const {
  if (!(abs_tol > 0.0)) throw ConfigError("abs_tol must be > 0");
  if (!(quad_step_cap > 0.0)) throw ConfigError("quad_step_cap must be > 0");
  if (max_newton_iters < 1) throw ConfigError("max_newton_iters must be >= 1");
  if (!(em_terms_policy.scale >= 1.0)) throw ConfigError("em_terms_policy.scale must be >= 1");
  if (em_terms_policy.offset < 1) throw ConfigError("em_terms_policy.offset must be >= 1");
  if (em_terms_policy.max_corrections < 1) {
    throw ConfigError("em_terms_policy.max_corrections must be >= 1");
  }
  if (!(sigma_eps > 0.0)) throw ConfigError("sigma_eps must be > 0");
}

double PrecisionConfig::riemann_siegel_crossover() const {
  // Remainder after C4 stays below kRsBound * t^{-11/4}.
  constexpr double kRsBound = 0.053;
  const double t = std::pow(kRsBound / abs_tol, 4.0 / 11.0);
  return std::max(50.0, t);
}

}  // namespace zlab

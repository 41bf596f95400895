#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "zlab/precision.hpp"
#include "zlab/zeta_core.hpp"

namespace zlab {

struct GramPoint {
  std::int64_t nu = 0;
  double t = 0.0;
  /// |theta(t) - pi nu| in extended precision.
  double residual = 0.0;
};

/// Gram points with t in [t_lo, t_hi), ordered by index.
struct GramRange {
  double t_lo = 0.0;
  double t_hi = 0.0;
  std::vector<GramPoint> points;

  std::size_t count() const { return points.size(); }
};

/// Root of theta(t) = pi nu on the increasing branch, nu >= 1.
GramPoint gram_point(std::int64_t nu, const PrecisionConfig& cfg = default_precision());

/// All Gram points in [t_lo, t_hi); requires 2 pi < t_lo < t_hi.
GramRange gram_range(Height t_lo, Height t_hi, const PrecisionConfig& cfg = default_precision());

/// Asymptotic count (1 / 2 pi) T ln T of Gram points up to T; requires T > e.
double gram_count_estimate(Height big_t);

/// CSV with header `nu,t,residual`, 15 significant digits.
void write_gram_csv(std::ostream& os, const GramRange& range);

}  // namespace zlab

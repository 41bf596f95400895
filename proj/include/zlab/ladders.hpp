#pragma once

#include <iosfwd>
#include <vector>

#include "zlab/precision.hpp"
#include "zlab/zeta_core.hpp"

namespace zlab {

/// Constant c of the ladder increment (1 - c) T.
inline constexpr double kEulerGamma = 0.5772156649;

/// One reverse step: U solving integral_T^U Z^2 dt = (1 - c) T.
struct LadderStep {
  double base = 0.0;
  double iterate = 0.0;
  /// Achieved slice integral integral_base^iterate Z^2 dt.
  double slice_integral = 0.0;
  /// |slice_integral - (1 - c) base|.
  double residual = 0.0;
};

LadderStep reverse_step(Height T, const PrecisionConfig& cfg = default_precision());

inline double reverse_iterate(Height T, const PrecisionConfig& cfg = default_precision()) {
  return reverse_step(T, cfg).iterate;
}

struct LadderChain {
  double base = 0.0;
  std::vector<double> iterates;
  std::vector<double> residuals;
  std::vector<double> slice_integrals;
  double euler_c = kEulerGamma;
};

/// k reverse iterations, 1 <= k <= 20.
LadderChain ladder_chain(Height T, int k, const PrecisionConfig& cfg = default_precision());

struct PartitionReport {
  std::vector<double> gap_ratios;
  std::vector<double> integral_ratios;
  std::vector<double> gap_prediction_ratios;
};

/// Requires at least two iterates.
PartitionReport partition_report(const LadderChain& chain);

/// CSV with header `r,T_r,gap,slice_integral,residual`; row r = 0 is the base.
void write_ladder_csv(std::ostream& os, const LadderChain& chain);

}  // namespace zlab

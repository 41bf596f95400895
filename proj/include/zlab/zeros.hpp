#pragma once

#include <cstdint>
#include <shared_mutex>
#include <vector>

#include "zlab/precision.hpp"

namespace zlab {

/// Ordered zeros of Z(t) on (0, covered()], found by sign changes on a fixed
/// block lattice and validated block by block against the argument tracker.
/// Extending the coverage never changes zeros already found.
class ZeroIndex {
 public:
  explicit ZeroIndex(const PrecisionConfig& cfg);

  /// Scan until every block up to t_max is covered.
  void ensure(double t_max);
  double covered() const;

  /// Number of zeros in (0, t].
  std::int64_t count_upto(double t);
  /// Zeros in [lo, hi).
  std::vector<double> zeros_in(double lo, double hi);

  /// S(t) = N(t) - 1 - theta(t)/pi.
  double s_at(double t);
  /// S1(t), integrated exactly piece by piece between zeros.
  double s1_at(double t);

  static constexpr double kBlockWidth = 100.0;

 private:
  struct Block {
    std::vector<double> zeros;
  };
  Block scan_block(std::int64_t k, int refine) const;
  std::int64_t count_locked(double t) const;
  double s1_locked(double t) const;

  PrecisionConfig cfg_;
  mutable std::shared_mutex mu_;
  std::int64_t blocks_ = 0;
  std::vector<double> zeros_;
  std::vector<long double> s1_at_zero_;
};

/// Process-wide index for a given configuration (synchronized, deterministic).
ZeroIndex& shared_zero_index(const PrecisionConfig& cfg);

/// Integral of theta over [a, b] by Gauss-Legendre panels.
long double theta_integral(long double a, long double b);

}  // namespace zlab

#pragma once

#include <complex>
#include <cstdint>

#include "zlab/precision.hpp"

namespace zlab {

/// Ordinate on a vertical line. Construction rejects negative or non-finite values.
class Height {
 public:
  explicit Height(double t);
  double value() const noexcept { return t_; }
  operator double() const noexcept { return t_; }

 private:
  double t_;
};

struct ComplexPoint {
  double sigma;
  double t;
};

/// Argument of zeta on the critical line, normalized by pi, with the zero count
/// it implies and the distance of theta/pi + 1 + S from the nearest integer.
struct ArgTrace {
  double t = 0.0;
  double s_value = 0.0;
  std::int64_t zero_count = 0;
  double branch_residual = 0.0;
};

/// Riemann-Siegel theta from the log-Gamma form.
double theta(Height t);

/// Extended-precision theta; Gram residuals are measured with this.
long double theta_extended(long double t);

/// d theta / dt. Requires t > 2 pi.
double theta_deriv(Height t, const PrecisionConfig& cfg = default_precision());

/// zeta(s) for sigma > 0, s != 1, by Euler-Maclaurin summation.
std::complex<double> zeta(ComplexPoint s, const PrecisionConfig& cfg = default_precision());

/// Hardy's Z(t): Riemann-Siegel above the crossover height, Euler-Maclaurin below.
double hardy_z(Height t, const PrecisionConfig& cfg = default_precision());

/// e^{i theta(t)} zeta(1/2 + it) evaluated directly; real up to rounding.
std::complex<double> hardy_z_construction(Height t,
                                          const PrecisionConfig& cfg = default_precision());

/// Riemann-Siegel main sum with corrections C0..C4. Valid for t >= 2 pi.
double hardy_z_riemann_siegel(double t);

/// S(t) by continuous variation of arg zeta along 2 -> 2+it -> 1/2+it.
ArgTrace s_of_t(Height t, const PrecisionConfig& cfg = default_precision());

/// S1(t) = integral of S over [0, t].
double s1_of_t(Height t, const PrecisionConfig& cfg = default_precision());

}  // namespace zlab

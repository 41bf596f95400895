#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "zlab/cache.hpp"
#include "zlab/moments.hpp"
#include "zlab/precision.hpp"
#include "zlab/zeta_core.hpp"

namespace zlab {

// ---- Gram-point sums ----------------------------------------------------

enum class SumKind { pair, fourth };

const char* to_string(SumKind k) noexcept;

struct SumResult {
  double t_lo = 0.0;
  double t_hi = 0.0;
  SumKind kind = SumKind::pair;
  std::int64_t terms = 0;
  /// Index of the first Gram point in range (0 when empty).
  std::int64_t first_nu = 0;
  double value = 0.0;
  /// Present only for ranges of the form [T, 2T).
  std::optional<double> main_term;
  std::optional<double> ratio;
};

/// Main-term constants: 3 / (4 pi^5) and 1 / (4 pi^3).
double pair_sum_constant();
double fourth_sum_constant();

/// Sum of Z^2(t_nu) Z^2(t_{nu+1}) over Gram points t_nu in [t_lo, t_hi).
SumResult titchmarsh_sum(Height t_lo, Height t_hi, const PrecisionConfig& cfg = default_precision());

/// Sum of Z^4(t_nu) over Gram points t_nu in [t_lo, t_hi).
SumResult fourth_power_sum(Height t_lo, Height t_hi,
                           const PrecisionConfig& cfg = default_precision());

struct TrendReport {
  SumKind kind = SumKind::pair;
  std::vector<double> heights;
  std::vector<SumResult> sums;
  std::vector<double> ratios;
  /// |r(T) - 1| ln T.
  std::vector<double> fitted;
  bool pass = false;
};

/// Ratios on [T, 2T) for each height; PASS when |r - 1| does not increase over
/// the two largest heights. Requires at least three increasing heights.
TrendReport verify_asymptotic_trend(SumKind kind, std::span<const double> heights,
                                    const PrecisionConfig& cfg = default_precision());

/// CSV with header `kind,T,terms,value,main_term,ratio`.
void write_sum_csv(std::ostream& os, std::span<const SumResult> rows);

// ---- Quotient formulas ----------------------------------------------------

struct QuotientReport {
  double T = 0.0;
  double T1 = 0.0;
  double numerator = 0.0;
  double denominator = 0.0;
  double quotient = 0.0;
  /// quotient * zeta(2 sigma) / ln T, or quotient * cbar / ln T.
  double normalized = 0.0;
};

/// Ratio of the critical-line and sigma-line second moments over [T, T^1].
QuotientReport quotient_zeta(double sigma, Height T,
                             const PrecisionConfig& cfg = default_precision());

struct S1QuotientReport : QuotientReport {
  int l = 1;
  double cbar = 0.0;
  double cbar_spread = 0.0;
  /// denominator / (cbar (T^1 - T)) - 1.
  double selberg_deviation = 0.0;
};

/// Ratio of the critical-line second moment to the |S1|^(2l) moment over [T, T^1].
S1QuotientReport quotient_s1(int l, Height T, const CbarEstimate& cbar,
                             const PrecisionConfig& cfg = default_precision());

// ---- Cross-bred functionals ------------------------------------------------

enum class FunctionalKind { A, B, C };

const char* to_string(FunctionalKind k) noexcept;
FunctionalKind parse_functional_kind(const std::string& s);

/// Parameter of a functional: sigma for A and C, l with a fitted cbar for B.
struct FunctionalParam {
  double sigma = 1.0;
  int l = 1;
  /// Required for kind B.
  std::optional<CbarEstimate> cbar;
};

struct FunctionalApproximant {
  FunctionalKind kind = FunctionalKind::A;
  double x = 1.0;
  double sigma = 0.0;
  int l = 0;
  double tau = 0.0;
  /// Substitution constant K with T = K (x tau).
  double substitution = 0.0;
  double T = 0.0;
  double T1 = 0.0;
  double value = 0.0;
  double target = 0.0;
  double rel_err = 0.0;
  /// Constants-cache key of the cbar used (kind B only).
  std::string cbar_key;
};

/// Substitution constant: A 4 pi^5 / (3 zeta^5(2 sigma)), B 4 pi^5 / (3 cbar^5),
/// C 4 pi^3 / zeta^5(2 sigma).
double substitution_constant(FunctionalKind kind, const FunctionalParam& p,
                             const PrecisionConfig& cfg = default_precision());

/// Evaluates the functional at x and tau. Interval integrals and Gram sums are
/// memoized per implied T, so repeated evaluations at equal T reuse them.
FunctionalApproximant functional_approximant(FunctionalKind kind, double x,
                                             const FunctionalParam& p, double tau,
                                             const PrecisionConfig& cfg = default_precision());

/// CSV with header `kind,x,param,tau,T,value,rel_err`.
void write_functional_csv(std::ostream& os, std::span<const FunctionalApproximant> rows);

// ---- Fermat rationals --------------------------------------------------------

/// (x^n + y^n) / z^n in lowest terms; n >= 3.
mpq_class fermat_rational(std::uint64_t x, std::uint64_t y, std::uint64_t z, unsigned n);

enum class Verdict { consistent, unresolved, disagree };

const char* to_string(Verdict v) noexcept;

struct FermatWitness {
  std::uint64_t x = 0, y = 0, z = 0;
  unsigned n = 3;
  mpq_class rational;
  bool is_one_exact = false;
  std::vector<FunctionalApproximant> approximants;
  Verdict verdict = Verdict::unresolved;
  std::string verdict_text;
};

/// Exact arithmetic plus the functional trace at x = rational for each tau.
FermatWitness fermat_equivalence_check(std::uint64_t x, std::uint64_t y, std::uint64_t z,
                                       unsigned n, FunctionalKind kind,
                                       const FunctionalParam& p,
                                       std::span<const double> tau_schedule,
                                       const PrecisionConfig& cfg = default_precision());

struct FermatSolution {
  std::uint64_t x, y, z;
  unsigned n;
};

/// Every x <= y, z <= limit, n in [n_min, n_max] with x^n + y^n = z^n.
std::vector<FermatSolution> fermat_search(std::uint64_t limit, unsigned n_min, unsigned n_max);

/// CSV with header `x,y,z,n,numerator,denominator,is_one,verdict`.
void write_fermat_csv(std::ostream& os, std::span<const FermatWitness> rows);

// ---- Chain comparison ---------------------------------------------------------

struct ChainReport {
  FunctionalApproximant a, b, c;
  double dev_ab = 0.0, dev_ac = 0.0, dev_bc = 0.0;
  bool pass = false;
};

/// Evaluates A, B and C. With matched_height each kind gets its own tau so that
/// all three share the implied T of kind A; otherwise all use the same tau.
ChainReport chain_compare(double x, double sigma, int l, const CbarEstimate& cbar, double tau,
                          bool matched_height = true,
                          const PrecisionConfig& cfg = default_precision());

}  // namespace zlab

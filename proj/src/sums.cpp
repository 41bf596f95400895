#include "zlab/sums.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numbers>
#include <ostream>
#include <tuple>
#include <unordered_set>

#include "zlab/csv.hpp"
#include "zlab/errors.hpp"
#include "zlab/gram.hpp"
#include "zlab/ladders.hpp"
#include "zlab/parallel.hpp"
#include "zlab/summation.hpp"

namespace zlab {
namespace {

constexpr double kPi = std::numbers::pi;

SumResult gram_sum(SumKind kind, Height t_lo, Height t_hi, const PrecisionConfig& cfg) {
  if (!(t_lo.value() > 2.0 * kPi && t_lo.value() < t_hi.value())) {
    throw DomainError("gram sum: requires 2 pi < t_lo < t_hi");
  }
  SumResult r;
  r.t_lo = t_lo;
  r.t_hi = t_hi;
  r.kind = kind;
  if (t_hi.value() == 2.0 * t_lo.value()) {
    const double T = t_lo;
    const double c = kind == SumKind::pair ? pair_sum_constant() : fourth_sum_constant();
    r.main_term = c * T * std::pow(std::log(T), 5);
  }

  const GramRange range = gram_range(t_lo, t_hi, cfg);
  r.terms = static_cast<std::int64_t>(range.count());
  if (range.points.empty()) {
    r.value = 0.0;
    if (r.main_term) r.ratio = 0.0;
    return r;
  }
  r.first_nu = range.points.front().nu;

  std::vector<double> ts;
  for (const auto& p : range.points) ts.push_back(p.t);
  if (kind == SumKind::pair) ts.push_back(gram_point(range.points.back().nu + 1, cfg).t);
  const auto z2 = parallel::map_indices<double>(ts.size(), [&](std::size_t i) {
    const double z = hardy_z(Height(ts[i]), cfg);
    return z * z;
  });
  std::vector<double> terms(range.count());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    terms[i] = kind == SumKind::pair ? z2[i] * z2[i + 1] : z2[i] * z2[i];
  }
  r.value = stable_sum(terms);
  if (r.main_term) r.ratio = r.value / *r.main_term;
  return r;
}

double zeta_real(double s, const PrecisionConfig& cfg) { return zeta({s, 0.0}, cfg).real(); }

/// Implied heights are rounded to 15 significant digits so that evaluations
/// which agree up to the last bits share one memoized pipeline run.
double snap_height(double t) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", t);
  return std::strtod(buf, nullptr);
}

// Memo of expensive per-height quantities.
enum class Quantity { ladder, critical, sigma, s1, pair, fourth };

class Memo {
 public:
  double get(const PrecisionConfig& cfg, Quantity q, double param, double T,
             const std::function<double()>& compute) {
    const Key key{static_cast<int>(q), param, T};
    {
      std::lock_guard lock(mu_);
      auto& m = table(cfg);
      if (auto it = m.find(key); it != m.end()) return it->second;
    }
    const double v = compute();
    std::lock_guard lock(mu_);
    table(cfg).emplace(key, v);
    return v;
  }

 private:
  using Key = std::tuple<int, double, double>;
  std::map<Key, double>& table(const PrecisionConfig& cfg) {
    for (auto& [c, m] : tables_) {
      if (c == cfg) return m;
    }
    tables_.emplace_back(cfg, std::map<Key, double>{});
    return tables_.back().second;
  }
  std::mutex mu_;
  std::vector<std::pair<PrecisionConfig, std::map<Key, double>>> tables_;
};

Memo& memo() {
  static Memo m;
  return m;
}

double memo_ladder(double T, const PrecisionConfig& cfg) {
  return memo().get(cfg, Quantity::ladder, 0.0, T,
                    [&] { return reverse_iterate(Height(T), cfg); });
}

double memo_critical(double T, double U, const PrecisionConfig& cfg) {
  return memo().get(cfg, Quantity::critical, 0.0, T,
                    [&] { return second_moment_critical(Height(T), Height(U), cfg).value; });
}

double memo_sigma(double sigma, double T, double U, const PrecisionConfig& cfg) {
  return memo().get(cfg, Quantity::sigma, sigma, T,
                    [&] { return second_moment_sigma(sigma, Height(T), Height(U), cfg).value; });
}

double memo_s1(int l, double T, double U, const PrecisionConfig& cfg) {
  return memo().get(cfg, Quantity::s1, l, T,
                    [&] { return s1_moment(l, Height(T), Height(U), cfg).value; });
}

double memo_sum(SumKind kind, double T, const PrecisionConfig& cfg) {
  return memo().get(cfg, kind == SumKind::pair ? Quantity::pair : Quantity::fourth, 0.0, T,
                    [&] { return gram_sum(kind, Height(T), Height(2.0 * T), cfg).value; });
}

std::string param_label(const FunctionalApproximant& f) {
  if (f.kind == FunctionalKind::B) return "l=" + std::to_string(f.l);
  return "sigma=" + csv::format(f.sigma);
}

}  // namespace

const char* to_string(SumKind k) noexcept { return k == SumKind::pair ? "pair" : "fourth"; }

double pair_sum_constant() { return 3.0 / (4.0 * std::pow(kPi, 5)); }
double fourth_sum_constant() { return 1.0 / (4.0 * std::pow(kPi, 3)); }

SumResult titchmarsh_sum(Height t_lo, Height t_hi, const PrecisionConfig& cfg) {
  return gram_sum(SumKind::pair, t_lo, t_hi, cfg);
}

SumResult fourth_power_sum(Height t_lo, Height t_hi, const PrecisionConfig& cfg) {
  return gram_sum(SumKind::fourth, t_lo, t_hi, cfg);
}

TrendReport verify_asymptotic_trend(SumKind kind, std::span<const double> heights,
                                    const PrecisionConfig& cfg) {
  if (heights.size() < 3) throw DomainError("verify_asymptotic_trend: needs >= 3 heights");
  for (std::size_t i = 1; i < heights.size(); ++i) {
    if (!(heights[i] > heights[i - 1])) {
      throw DomainError("verify_asymptotic_trend: heights must increase");
    }
  }
  TrendReport rep;
  rep.kind = kind;
  rep.heights.assign(heights.begin(), heights.end());
  for (double T : heights) {
    SumResult s = gram_sum(kind, Height(T), Height(2.0 * T), cfg);
    rep.ratios.push_back(*s.ratio);
    rep.fitted.push_back(std::abs(*s.ratio - 1.0) * std::log(T));
    rep.sums.push_back(std::move(s));
  }
  const std::size_t n = rep.ratios.size();
  rep.pass = std::abs(rep.ratios[n - 1] - 1.0) <= std::abs(rep.ratios[n - 2] - 1.0);
  return rep;
}

void write_sum_csv(std::ostream& os, std::span<const SumResult> rows) {
  csv::Writer w(os, {"kind", "T", "terms", "value", "main_term", "ratio"});
  for (const auto& r : rows) {
    w.row(to_string(r.kind), r.t_lo, r.terms, r.value,
          r.main_term ? csv::format(*r.main_term) : std::string(),
          r.ratio ? csv::format(*r.ratio) : std::string());
  }
}

QuotientReport quotient_zeta(double sigma, Height T, const PrecisionConfig& cfg) {
  if (!(sigma >= 0.5 + cfg.sigma_eps)) throw DomainError("quotient_zeta: sigma too small");
  QuotientReport q;
  q.T = T;
  q.T1 = memo_ladder(T, cfg);
  q.numerator = memo_critical(T, q.T1, cfg);
  q.denominator = memo_sigma(sigma, T, q.T1, cfg);
  q.quotient = q.numerator / q.denominator;
  q.normalized = q.quotient * zeta_real(2.0 * sigma, cfg) / std::log(q.T);
  return q;
}

S1QuotientReport quotient_s1(int l, Height T, const CbarEstimate& cbar,
                             const PrecisionConfig& cfg) {
  if (l < 1) throw DomainError("quotient_s1: l must be >= 1");
  if (cbar.l != l || !(cbar.cbar > 0.0)) {
    throw ConfigError("quotient_s1: cbar estimate does not match l");
  }
  S1QuotientReport q;
  q.l = l;
  q.cbar = cbar.cbar;
  q.cbar_spread = cbar.spread;
  q.T = T;
  q.T1 = memo_ladder(T, cfg);
  q.numerator = memo_critical(T, q.T1, cfg);
  q.denominator = memo_s1(l, T, q.T1, cfg);
  q.quotient = q.numerator / q.denominator;
  q.normalized = q.quotient * cbar.cbar / std::log(q.T);
  q.selberg_deviation = q.denominator / (cbar.cbar * (q.T1 - q.T)) - 1.0;
  return q;
}

const char* to_string(FunctionalKind k) noexcept {
  switch (k) {
    case FunctionalKind::A: return "A";
    case FunctionalKind::B: return "B";
    case FunctionalKind::C: return "C";
  }
  return "?";
}

FunctionalKind parse_functional_kind(const std::string& s) {
  if (s == "A" || s == "a") return FunctionalKind::A;
  if (s == "B" || s == "b") return FunctionalKind::B;
  if (s == "C" || s == "c") return FunctionalKind::C;
  throw DomainError("unknown functional kind: " + s);
}

double substitution_constant(FunctionalKind kind, const FunctionalParam& p,
                             const PrecisionConfig& cfg) {
  switch (kind) {
    case FunctionalKind::A:
    case FunctionalKind::C: {
      if (!(p.sigma >= 0.5 + cfg.sigma_eps)) {
        throw DomainError("functional: sigma must be >= 1/2 + sigma_eps");
      }
      const double z5 = std::pow(zeta_real(2.0 * p.sigma, cfg), 5);
      return kind == FunctionalKind::A ? 4.0 * std::pow(kPi, 5) / (3.0 * z5)
                                       : 4.0 * std::pow(kPi, 3) / z5;
    }
    case FunctionalKind::B: {
      if (!p.cbar) throw ConfigError("functional B: no cbar estimate available");
      if (p.cbar->l != p.l || !(p.cbar->cbar > 0.0)) {
        throw ConfigError("functional B: cbar estimate does not match l");
      }
      return 4.0 * std::pow(kPi, 5) / (3.0 * std::pow(p.cbar->cbar, 5));
    }
  }
  throw DomainError("functional: unknown kind");
}

FunctionalApproximant functional_approximant(FunctionalKind kind, double x,
                                             const FunctionalParam& p, double tau,
                                             const PrecisionConfig& cfg) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("functional: x must be positive");
  if (!(tau > 0.0) || !std::isfinite(tau)) throw DomainError("functional: tau must be positive");
  FunctionalApproximant f;
  f.kind = kind;
  f.x = x;
  f.tau = tau;
  f.target = x;
  if (kind == FunctionalKind::B) {
    f.l = p.l;
  } else {
    f.sigma = p.sigma;
  }
  f.substitution = substitution_constant(kind, p, cfg);
  if (kind == FunctionalKind::B) f.cbar_key = p.cbar->cache_key();
  f.T = snap_height(f.substitution * (x * tau));
  if (!(f.T >= 100.0)) throw DomainError("functional: implied T below 100; increase tau");

  f.T1 = memo_ladder(f.T, cfg);
  const double critical = memo_critical(f.T, f.T1, cfg);
  double other = 0.0;
  double sum = 0.0;
  switch (kind) {
    case FunctionalKind::A:
      other = memo_sigma(p.sigma, f.T, f.T1, cfg);
      sum = memo_sum(SumKind::pair, f.T, cfg);
      break;
    case FunctionalKind::B:
      other = memo_s1(p.l, f.T, f.T1, cfg);
      sum = memo_sum(SumKind::pair, f.T, cfg);
      break;
    case FunctionalKind::C:
      other = memo_sigma(p.sigma, f.T, f.T1, cfg);
      sum = memo_sum(SumKind::fourth, f.T, cfg);
      break;
  }
  f.value = std::pow(other / critical, 5) * sum / tau;
  f.rel_err = std::abs(f.value / x - 1.0);
  return f;
}

void write_functional_csv(std::ostream& os, std::span<const FunctionalApproximant> rows) {
  csv::Writer w(os, {"kind", "x", "param", "tau", "T", "value", "rel_err"});
  for (const auto& f : rows) {
    w.row(to_string(f.kind), f.x, param_label(f), f.tau, f.T, f.value, f.rel_err);
  }
}

mpq_class fermat_rational(std::uint64_t x, std::uint64_t y, std::uint64_t z, unsigned n) {
  if (n < 3) throw DomainError("fermat_rational: n must be >= 3");
  if (x == 0 || y == 0 || z == 0) throw DomainError("fermat_rational: x, y, z must be positive");
  mpz_class xn, yn, zn;
  mpz_ui_pow_ui(xn.get_mpz_t(), x, n);
  mpz_ui_pow_ui(yn.get_mpz_t(), y, n);
  mpz_ui_pow_ui(zn.get_mpz_t(), z, n);
  mpq_class q(mpz_class(xn + yn), zn);
  q.canonicalize();
  return q;
}

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::consistent: return "CONSISTENT";
    case Verdict::unresolved: return "UNRESOLVED";
    case Verdict::disagree: return "DISAGREE";
  }
  return "?";
}

FermatWitness fermat_equivalence_check(std::uint64_t x, std::uint64_t y, std::uint64_t z,
                                       unsigned n, FunctionalKind kind,
                                       const FunctionalParam& p,
                                       std::span<const double> tau_schedule,
                                       const PrecisionConfig& cfg) {
  if (tau_schedule.empty()) throw DomainError("fermat check: empty tau schedule");
  for (std::size_t i = 1; i < tau_schedule.size(); ++i) {
    if (!(tau_schedule[i] > tau_schedule[i - 1])) {
      throw DomainError("fermat check: tau schedule must increase");
    }
  }
  FermatWitness w;
  w.x = x;
  w.y = y;
  w.z = z;
  w.n = n;
  w.rational = fermat_rational(x, y, z, n);
  w.is_one_exact = w.rational == 1;
  const double q = w.rational.get_d();
  for (double tau : tau_schedule) w.approximants.push_back(functional_approximant(kind, q, p, tau, cfg));

  // Two channels: exact arithmetic and the numerical trace.
  const double v = w.approximants.back().value;
  bool improving = w.approximants.size() >= 2;
  for (std::size_t i = 1; i < w.approximants.size(); ++i) {
    improving = improving && w.approximants[i].rel_err < w.approximants[i - 1].rel_err;
  }
  if (w.is_one_exact) {
    w.verdict = Verdict::disagree;
    w.verdict_text = "exact arithmetic gives 1";
  } else if (std::abs(v - q) < std::abs(v - 1.0)) {
    w.verdict = Verdict::consistent;
    w.verdict_text = "limit != 1: approximant closer to the rational than to 1";
  } else if (improving) {
    w.verdict = Verdict::unresolved;
    w.verdict_text = "approximant still nearer 1 but converging toward the rational";
  } else {
    w.verdict = Verdict::disagree;
    w.verdict_text = "approximant points to 1 while exact arithmetic does not";
  }
  return w;
}

std::vector<FermatSolution> fermat_search(std::uint64_t limit, unsigned n_min, unsigned n_max) {
  if (n_min < 3) throw DomainError("fermat_search: n must be >= 3");
  std::vector<FermatSolution> found;
  for (unsigned n = n_min; n <= n_max; ++n) {
    std::vector<mpz_class> pw(limit + 1);
    std::unordered_set<std::string> powers;
    for (std::uint64_t k = 1; k <= limit; ++k) {
      mpz_ui_pow_ui(pw[k].get_mpz_t(), k, n);
      powers.insert(pw[k].get_str(16));
    }
    for (std::uint64_t a = 1; a <= limit; ++a) {
      for (std::uint64_t b = a; b <= limit; ++b) {
        const mpz_class s = pw[a] + pw[b];
        if (!powers.contains(s.get_str(16))) continue;
        for (std::uint64_t c = 1; c <= limit; ++c) {
          if (pw[c] == s) found.push_back({a, b, c, n});
        }
      }
    }
  }
  return found;
}

void write_fermat_csv(std::ostream& os, std::span<const FermatWitness> rows) {
  csv::Writer w(os, {"x", "y", "z", "n", "numerator", "denominator", "is_one", "verdict"});
  for (const auto& r : rows) {
    w.row(static_cast<std::size_t>(r.x), static_cast<std::size_t>(r.y),
          static_cast<std::size_t>(r.z), static_cast<std::size_t>(r.n),
          r.rational.get_num().get_str(), r.rational.get_den().get_str(), r.is_one_exact,
          to_string(r.verdict));
  }
}

ChainReport chain_compare(double x, double sigma, int l, const CbarEstimate& cbar, double tau,
                          bool matched_height, const PrecisionConfig& cfg) {
  FunctionalParam pa;
  pa.sigma = sigma;
  FunctionalParam pb;
  pb.l = l;
  pb.cbar = cbar;
  ChainReport rep;
  rep.a = functional_approximant(FunctionalKind::A, x, pa, tau, cfg);
  double tau_b = tau, tau_c = tau;
  if (matched_height) {
    tau_b = rep.a.T / substitution_constant(FunctionalKind::B, pb, cfg) / x;
    tau_c = rep.a.T / substitution_constant(FunctionalKind::C, pa, cfg) / x;
  }
  rep.b = functional_approximant(FunctionalKind::B, x, pb, tau_b, cfg);
  rep.c = functional_approximant(FunctionalKind::C, x, pa, tau_c, cfg);
  rep.dev_ab = std::abs(rep.a.value - rep.b.value) / x;
  rep.dev_ac = std::abs(rep.a.value - rep.c.value) / x;
  rep.dev_bc = std::abs(rep.b.value - rep.c.value) / x;
  rep.pass = rep.dev_ab <= rep.a.rel_err + rep.b.rel_err &&
             rep.dev_ac <= rep.a.rel_err + rep.c.rel_err &&
             rep.dev_bc <= rep.b.rel_err + rep.c.rel_err;
  return rep;
}

}  // namespace zlab

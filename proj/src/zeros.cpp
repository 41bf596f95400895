#include "zlab/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>

#include "zlab/errors.hpp"
#include "zlab/parallel.hpp"
#include "zlab/quadrature.hpp"
#include "zlab/roots.hpp"
#include "zlab/zeta_core.hpp"

namespace zlab {
namespace {

constexpr long double kPiL = 3.141592653589793238462643383279502884L;

double sample_step(double t_end, double cap) {
  constexpr double kSamplesPerGap = 8.0;
  const double x = t_end / (2.0 * std::numbers::pi);
  if (x <= std::numbers::e) return cap;
  return std::min(cap, 2.0 * std::numbers::pi / std::log(x) / kSamplesPerGap);
}

}  // namespace

long double theta_integral(long double a, long double b) {
  if (b <= a) return 0.0L;
  const GaussRule& rule = gauss_legendre(16);
  constexpr long double kWidth = 2.0L;
  const auto n = static_cast<std::int64_t>(std::ceil((b - a) / kWidth));
  long double total = 0.0L;
  for (std::int64_t k = 0; k < n; ++k) {
    const long double lo = a + (b - a) * k / n;
    const long double hi = (k + 1 == n) ? b : a + (b - a) * (k + 1) / n;
    const long double half = 0.5L * (hi - lo);
    const long double mid = 0.5L * (hi + lo);
    long double acc = 0.0L;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      acc += rule.weights[i] * theta_extended(mid + half * rule.nodes[i]);
    }
    total += half * acc;
  }
  return total;
}

ZeroIndex::ZeroIndex(const PrecisionConfig& cfg) : cfg_(cfg) { cfg_.validate(); }

double ZeroIndex::covered() const {
  std::shared_lock lock(mu_);
  return static_cast<double>(blocks_) * kBlockWidth;
}

ZeroIndex::Block ZeroIndex::scan_block(std::int64_t k, int refine) const {
  const double a = static_cast<double>(k) * kBlockWidth;
  const double b = a + kBlockWidth;
  const double h = sample_step(b, cfg_.quad_step_cap) / refine;
  const auto n = static_cast<std::size_t>(std::ceil((b - a) / h));
  auto z = [&](double t) { return hardy_z(Height(t), cfg_); };

  std::vector<double> ts(n + 1), fs(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    ts[i] = (i == n) ? b : a + (b - a) * static_cast<double>(i) / static_cast<double>(n);
    fs[i] = z(ts[i]);
  }
  auto positive = [](double v) { return v >= 0.0; };
  const double xtol = 1e-13;

  Block out;
  for (std::size_t i = 0; i < n; ++i) {
    if (positive(fs[i]) != positive(fs[i + 1])) {
      out.zeros.push_back(roots::brent(z, ts[i], ts[i + 1], fs[i], fs[i + 1], xtol));
      continue;
    }
    // A close pair of zeros can hide between samples; look inside every local
    // minimum of |Z| that does not change sign.
    if (i == 0) continue;
    const bool same = positive(fs[i - 1]) == positive(fs[i]);
    const double m = std::abs(fs[i]);
    if (same && m <= std::abs(fs[i - 1]) && m <= std::abs(fs[i + 1])) {
      const double sgn = positive(fs[i]) ? 1.0 : -1.0;
      auto g = [&](double t) { return sgn * z(t); };
      const auto [tmin, gmin] = roots::golden_min(g, ts[i - 1], ts[i + 1], 1e-9);
      if (gmin < 0.0) {
        const double zmin = sgn * gmin;
        out.zeros.push_back(roots::brent(z, ts[i - 1], tmin, fs[i - 1], zmin, xtol));
        out.zeros.push_back(roots::brent(z, tmin, ts[i + 1], zmin, fs[i + 1], xtol));
      }
    }
  }
  std::sort(out.zeros.begin(), out.zeros.end());
  out.zeros.erase(std::remove_if(out.zeros.begin(), out.zeros.end(),
                                 [&](double g) { return !(g > a && g <= b); }),
                  out.zeros.end());
  out.zeros.erase(std::unique(out.zeros.begin(), out.zeros.end()), out.zeros.end());
  return out;
}

void ZeroIndex::ensure(double t_max) {
  const auto need = static_cast<std::int64_t>(std::floor(t_max / kBlockWidth)) + 1;
  {
    std::shared_lock lock(mu_);
    if (blocks_ >= need) return;
  }
  std::unique_lock lock(mu_);
  if (blocks_ >= need) return;
  const std::int64_t first = blocks_;
  const auto count = static_cast<std::size_t>(need - first);

  auto blocks = parallel::map_indices<Block>(
      count, [&](std::size_t i) { return scan_block(first + static_cast<std::int64_t>(i), 1); });

  // Independent check: the branch tracker's zero count at every block end.
  const auto expected = parallel::map_indices<std::int64_t>(count, [&](std::size_t i) {
    double end = static_cast<double>(first + static_cast<std::int64_t>(i) + 1) * kBlockWidth;
    for (int attempt = 0;; ++attempt) {
      try {
        return s_of_t(Height(end), cfg_).zero_count;
      } catch (const AmbiguousBranchError&) {
        if (attempt > 3) throw;
        end -= 1e-6;
      }
    }
  });

  std::int64_t running = static_cast<std::int64_t>(zeros_.size());
  for (std::size_t i = 0; i < count; ++i) {
    const std::int64_t k = first + static_cast<std::int64_t>(i);
    for (int refine = 4; running + static_cast<std::int64_t>(blocks[i].zeros.size()) != expected[i];
         refine *= 4) {
      if (refine > 64) {
        throw TrackingError("zero scan disagrees with the argument tracker near t = " +
                            std::to_string(static_cast<double>(k + 1) * kBlockWidth));
      }
      blocks[i] = scan_block(k, refine);
    }
    for (double g : blocks[i].zeros) {
      long double s1;
      if (zeros_.empty()) {
        s1 = -static_cast<long double>(g) - theta_integral(0.0L, g) / kPiL;
      } else {
        const auto j = static_cast<long double>(zeros_.size() - 1);
        const long double prev = zeros_.back();
        s1 = s1_at_zero_.back() + j * (g - prev) - theta_integral(prev, g) / kPiL;
      }
      zeros_.push_back(g);
      s1_at_zero_.push_back(s1);
    }
    running = static_cast<std::int64_t>(zeros_.size());
    blocks_ = k + 1;
  }
}

std::int64_t ZeroIndex::count_locked(double t) const {
  return std::upper_bound(zeros_.begin(), zeros_.end(), t) - zeros_.begin();
}

std::int64_t ZeroIndex::count_upto(double t) {
  ensure(t);
  std::shared_lock lock(mu_);
  return count_locked(t);
}

std::vector<double> ZeroIndex::zeros_in(double lo, double hi) {
  ensure(hi);
  std::shared_lock lock(mu_);
  const auto b = std::lower_bound(zeros_.begin(), zeros_.end(), lo);
  const auto e = std::lower_bound(zeros_.begin(), zeros_.end(), hi);
  return {b, e};
}

double ZeroIndex::s_at(double t) {
  const std::int64_t n = count_upto(t);
  return static_cast<double>(static_cast<long double>(n) - 1.0L - theta_extended(t) / kPiL);
}

double ZeroIndex::s1_locked(double t) const {
  const std::int64_t m = count_locked(t);
  if (m == 0) return static_cast<double>(-static_cast<long double>(t) - theta_integral(0.0L, t) / kPiL);
  const auto j = static_cast<std::size_t>(m - 1);
  const long double g = zeros_[j];
  const long double val = s1_at_zero_[j] + static_cast<long double>(j) * (t - g) -
                          theta_integral(g, t) / kPiL;
  return static_cast<double>(val);
}

double ZeroIndex::s1_at(double t) {
  ensure(t);
  std::shared_lock lock(mu_);
  return s1_locked(t);
}

ZeroIndex& shared_zero_index(const PrecisionConfig& cfg) {
  static std::mutex mu;
  static std::vector<std::pair<PrecisionConfig, std::unique_ptr<ZeroIndex>>> registry;
  std::lock_guard lock(mu);
  for (auto& [c, idx] : registry) {
    if (c == cfg) return *idx;
  }
  registry.emplace_back(cfg, std::make_unique<ZeroIndex>(cfg));
  return *registry.back().second;
}

}  // namespace zlab

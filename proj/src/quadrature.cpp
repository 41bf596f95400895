#include "zlab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "zlab/errors.hpp"
#include "zlab/parallel.hpp"
#include "zlab/summation.hpp"

namespace zlab {
namespace {

GaussRule make_rule(int n) {
  GaussRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    long double x = std::cos(std::numbers::pi_v<long double> * (i + 0.75L) / (n + 0.5L));
    long double dp = 1.0L;
    for (int iter = 0; iter < 100; ++iter) {
      long double p0 = 1.0L, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const long double p2 = ((2.0L * k - 1.0L) * x * p1 - (k - 1.0L) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0L);
      const long double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-19L) break;
    }
    rule.nodes[static_cast<std::size_t>(i)] = static_cast<double>(x);
    rule.weights[static_cast<std::size_t>(i)] =
        static_cast<double>(2.0L / ((1.0L - x * x) * dp * dp));
  }
  return rule;
}

using Vec = std::vector<double>;

Vec apply_rule(const MultiIntegrand& f, std::size_t m, const GaussRule& rule, double a, double b) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  std::vector<NeumaierSum> acc(m);
  Vec buf(m);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    f(mid + half * rule.nodes[i], buf);
    for (std::size_t c = 0; c < m; ++c) acc[c].add(rule.weights[i] * buf[c]);
  }
  Vec out(m);
  for (std::size_t c = 0; c < m; ++c) out[c] = half * acc[c].value();
  return out;
}

struct PanelOut {
  Vec value;
  Vec error;
  std::size_t panels = 0;
};

PanelOut adaptive_panel(const MultiIntegrand& f, std::size_t m, const GaussRule& rule, double a,
                        double b, const Vec& whole, const PanelOptions& opt, int depth) {
  const double mid = 0.5 * (a + b);
  const Vec left = apply_rule(f, m, rule, a, mid);
  const Vec right = apply_rule(f, m, rule, mid, b);
  PanelOut out{Vec(m), Vec(m), 1};
  bool ok = true;
  for (std::size_t c = 0; c < m; ++c) {
    out.value[c] = left[c] + right[c];
    out.error[c] = std::abs(out.value[c] - whole[c]);
    const double tol =
        std::max(opt.abs_tol_density * (b - a), opt.rel_tol * std::abs(out.value[c]));
    if (out.error[c] > tol) ok = false;
  }
  if (ok || depth >= opt.max_depth) return out;
  PanelOut l = adaptive_panel(f, m, rule, a, mid, left, opt, depth + 1);
  const PanelOut r = adaptive_panel(f, m, rule, mid, b, right, opt, depth + 1);
  for (std::size_t c = 0; c < m; ++c) {
    l.value[c] += r.value[c];
    l.error[c] += r.error[c];
  }
  l.panels += r.panels;
  return l;
}

struct Panel {
  double a;
  double b;
};

std::vector<PanelOut> run_panels(const MultiIntegrand& f, std::size_t m,
                                 const std::vector<Panel>& panels, const PanelOptions& opt) {
  const GaussRule& rule = gauss_legendre(opt.order);
  return parallel::map_indices<PanelOut>(panels.size(), [&](std::size_t i) {
    const Panel& p = panels[i];
    const Vec whole = apply_rule(f, m, rule, p.a, p.b);
    return adaptive_panel(f, m, rule, p.a, p.b, whole, opt, 0);
  });
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
  if (n < 1) throw DomainError("gauss_legendre: order must be >= 1");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<GaussRule>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<GaussRule>(make_rule(n));
  return *slot;
}

std::vector<QuadResult> integrate_segments(const MultiIntegrand& f, std::size_t m,
                                           std::span<const double> edges,
                                           const PanelOptions& opt) {
  if (!(opt.max_width > 0.0)) throw DomainError("integrate_segments: max_width must be > 0");
  std::vector<Panel> panels;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    const double a = edges[i];
    const double b = edges[i + 1];
    if (!(b >= a)) throw DomainError("integrate_segments: edges must be non-decreasing");
    if (b == a) continue;
    const auto n = static_cast<std::size_t>(std::ceil((b - a) / opt.max_width));
    for (std::size_t k = 0; k < n; ++k) {
      const double pa = a + (b - a) * static_cast<double>(k) / static_cast<double>(n);
      const double pb =
          (k + 1 == n) ? b : a + (b - a) * static_cast<double>(k + 1) / static_cast<double>(n);
      panels.push_back({pa, pb});
    }
  }

  const auto outs = run_panels(f, m, panels, opt);
  std::vector<QuadResult> result(m);
  Vec values(outs.size()), errors(outs.size());
  std::size_t total_panels = 0;
  for (const auto& o : outs) total_panels += o.panels;
  for (std::size_t c = 0; c < m; ++c) {
    for (std::size_t i = 0; i < outs.size(); ++i) {
      values[i] = outs[i].value[c];
      errors[i] = outs[i].error[c];
    }
    result[c].value = stable_sum(values);
    result[c].error = stable_sum(errors);
    result[c].panels = total_panels;
  }
  return result;
}

QuadResult integrate_segments(const std::function<double(double)>& f,
                              std::span<const double> edges, const PanelOptions& opt) {
  const MultiIntegrand g = [&f](double t, std::span<double> out) { out[0] = f(t); };
  return integrate_segments(g, 1, edges, opt).front();
}

std::vector<double> lattice_integrals(const std::function<double(double)>& f,
                                      std::span<const double> lattice, const PanelOptions& opt) {
  std::vector<Panel> panels;
  for (std::size_t i = 0; i + 1 < lattice.size(); ++i) panels.push_back({lattice[i], lattice[i + 1]});
  const MultiIntegrand g = [&f](double t, std::span<double> out) { out[0] = f(t); };
  const auto outs = run_panels(g, 1, panels, opt);
  std::vector<double> vals(outs.size());
  for (std::size_t i = 0; i < outs.size(); ++i) vals[i] = outs[i].value[0];
  return vals;
}

double gauss_apply(const std::function<double(double)>& f, int order, double a, double b) {
  const GaussRule& rule = gauss_legendre(order);
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  NeumaierSum acc;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    acc.add(rule.weights[i] * f(mid + half * rule.nodes[i]));
  }
  return half * acc.value();
}

}  // namespace zlab

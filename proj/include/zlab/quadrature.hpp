#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace zlab {

/// Gauss-Legendre rule on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Cached n-point rule (Newton on the Legendre recurrence).
const GaussRule& gauss_legendre(int n);

struct QuadResult {
  double value = 0.0;
  /// Sum of per-panel |halves - whole| estimates.
  double error = 0.0;
  std::size_t panels = 0;
};

struct PanelOptions {
  double max_width = 0.1;
  int order = 5;
  double abs_tol_density = 1e-10;  // per unit length
  double rel_tol = 1e-12;
  int max_depth = 24;
};

/// Vector-valued integrand: writes m components for abscissa t.
using MultiIntegrand = std::function<void(double t, std::span<double> out)>;

/// Integrates over consecutive segments [edges[i], edges[i+1]], each split into
/// equal panels no wider than max_width. Every panel is compared against its two
/// halves and bisected until the difference meets tolerance. Panels run in
/// parallel and are reduced in a fixed order, so results do not depend on the
/// worker count.
std::vector<QuadResult> integrate_segments(const MultiIntegrand& f, std::size_t m,
                                           std::span<const double> edges,
                                           const PanelOptions& opt);

QuadResult integrate_segments(const std::function<double(double)>& f,
                              std::span<const double> edges, const PanelOptions& opt);

inline QuadResult integrate_panels(const std::function<double(double)>& f, double a, double b,
                                   const PanelOptions& opt) {
  const double edges[2] = {a, b};
  return integrate_segments(f, edges, opt);
}

/// Per-panel integrals over an explicit lattice x0 < x1 < ... (no re-splitting
/// beyond the adaptive halving inside each cell).
std::vector<double> lattice_integrals(const std::function<double(double)>& f,
                                      std::span<const double> lattice, const PanelOptions& opt);

/// Single fixed Gauss-Legendre application on [a, b].
double gauss_apply(const std::function<double(double)>& f, int order, double a, double b);

}  // namespace zlab

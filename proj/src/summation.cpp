#include "zlab/summation.hpp"

#include <cmath>

namespace zlab {
namespace {

struct Pair {
  double hi;
  double lo;
};

Pair two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  const double err = (a - (s - bb)) + (b - bb);
  return {s, err};
}

Pair pairwise(std::span<const double> xs) {
  constexpr std::size_t kLeaf = 32;
  if (xs.size() <= kLeaf) {
    double s = 0.0;
    double c = 0.0;
    for (double x : xs) {
      const Pair p = two_sum(s, x);
      s = p.hi;
      c += p.lo;
    }
    return {s, c};
  }
  const std::size_t mid = xs.size() / 2;
  const Pair a = pairwise(xs.first(mid));
  const Pair b = pairwise(xs.subspan(mid));
  const Pair s = two_sum(a.hi, b.hi);
  return {s.hi, s.lo + a.lo + b.lo};
}

}  // namespace

double stable_sum(std::span<const double> xs) {
  const Pair p = pairwise(xs);
  return p.hi + p.lo;
}

}  // namespace zlab

#pragma once

#include <span>

namespace zlab {

/// Pairwise summation with Neumaier-compensated leaves. The reduction tree
/// depends only on the input length, so results are bit-reproducible.
double stable_sum(std::span<const double> xs);

/// Running compensated accumulator for sequential loops.
class NeumaierSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if ((sum_ >= 0 ? sum_ : -sum_) >= (x >= 0 ? x : -x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace zlab

#pragma once

#include <cmath>

namespace harmonia::detail {

// Neumaier-compensated running sum. Order of `add` calls is the order of
// reduction, so results are reproducible for a fixed input sequence.
class CompensatedSum {
 public:
  void add(double v) noexcept {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      carry_ += (sum_ - t) + v;
    } else {
      carry_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const noexcept { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

}  // namespace harmonia::detail

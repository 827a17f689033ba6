#pragma once

#include <cstdint>
#include <random>

#include "ellip/types.hpp"

namespace ellip {

/// Deterministic random stream. Doubles are produced from raw mt19937_64
/// output (whose sequence the standard pins down exactly), so values are
/// reproducible across platforms and standard libraries.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : gen_(seed) {}

  /// Uniform in [0, 1) with 53-bit resolution.
  double unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  /// Uniform integer in [0, n).
  int below(int n) { return static_cast<int>(unit() * n) % n; }

  /// Complex with Re, Im uniform in [-w, w].
  Cx in_box(double w) {
    double re = uniform(-w, w);
    double im = uniform(-w, w);
    return {re, im};
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace ellip

#pragma once

#include <cstdint>

#include "curvspace/matrix.hpp"

namespace curvspace {

/// Deterministic xorshift generator for reproducible test data.
class TestRng {
 public:
  explicit TestRng(std::uint64_t seed) : s_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

  std::uint64_t next() {
    s_ ^= s_ << 13;
    s_ ^= s_ >> 7;
    s_ ^= s_ << 17;
    return s_;
  }

  /// Uniform integer in [lo, hi].
  int uniform(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  /// Small rational with numerator in [-9, 9] and denominator in {1, 2, 3}.
  Rat rat() { return make_rat(uniform(-9, 9), uniform(1, 3)); }

  CRat crat() { return CRat(rat(), rat()); }

  RVec rat_vector(std::size_t n) {
    RVec v(n);
    for (auto& x : v) x = rat();
    return v;
  }

  RMat rat_matrix(std::size_t r, std::size_t c) {
    RMat m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rat();
    return m;
  }

  CMat crat_matrix(std::size_t r, std::size_t c) {
    CMat m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = crat();
    return m;
  }

 private:
  std::uint64_t s_;
};

}  // namespace curvspace

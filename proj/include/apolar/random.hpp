#pragma once

// Seeded integer and rational draws. The reduction from the 64-bit engine is
// written out so that a seed gives the same stream on every platform.

#include <cstdint>
#include <random>

#include "apolar/ring.hpp"

namespace apolar {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [lo, hi] (modulo bias is negligible for the ranges used).
  long uniform(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(engine_() % span);
  }

  /// p/q with |p| <= bound and 1 <= q <= bound.
  Rational rational(long bound) {
    Rational r(mpz_class(uniform(-bound, bound)), mpz_class(uniform(1, bound)));
    r.canonicalize();
    return r;
  }

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace apolar

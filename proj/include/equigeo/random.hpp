#pragma once

#include <cstdint>
#include <random>

#include "equigeo/rational.hpp"

namespace equigeo {

/// Seeded generator whose output is identical on every platform:
/// std::mt19937_64 is fully specified, and the reductions below avoid the
/// implementation-defined standard distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
  }

  /// Uniform on the grid {lo + k (hi - lo) / steps : k = 0..steps}.
  Scalar uniform_rational(const Scalar& lo, const Scalar& hi, std::int64_t steps) {
    Scalar k(static_cast<long>(uniform_int(0, steps)));
    Scalar r = lo + (hi - lo) * k / Scalar(static_cast<long>(steps));
    r.canonicalize();
    return r;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace equigeo

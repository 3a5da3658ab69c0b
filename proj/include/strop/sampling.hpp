#pragma once

#include <cstdint>
#include <random>

#include "strop/rational.hpp"

namespace strop {

struct SampleConfig {
  std::uint64_t seed = 42;
  std::uint64_t samples = 10000;
  // Numerators are drawn from [-box, box], denominators from [1, box].
  long box = 12;
};

// Seeded generator with the draws used by every sampler in the library.
// Reduction is by modulo so that streams are identical across standard
// library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : engine_() % n; }
  long in_range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

  Rational rational(long box) {
    long p = in_range(-box, box);
    long q = in_range(1, box);
    return make_rational(p, q);
  }
  // A rational in (0, 1].
  Rational unit_open_closed(long box) {
    long q = in_range(1, box);
    long p = in_range(1, q);
    return make_rational(p, q);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace strop

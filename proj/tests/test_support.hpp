#pragma once

#include <random>

#include "eulercf/rational.hpp"

namespace eulercf::test {

// Deterministic rational generator for property tests.
class RationalGen {
 public:
  explicit RationalGen(unsigned seed) : rng_(seed) {}

  // numerator in [-bound, bound] \ {0} unless zero_ok, denominator in [1, bound]
  Rational any(long bound = 20, bool zero_ok = false) {
    std::uniform_int_distribution<long> num(-bound, bound);
    std::uniform_int_distribution<long> den(1, bound);
    long p = num(rng_);
    while (!zero_ok && p == 0) p = num(rng_);
    return Rational(p, den(rng_));
  }

  Rational positive(long bound = 20) {
    std::uniform_int_distribution<long> num(1, bound);
    std::uniform_int_distribution<long> den(1, bound);
    return Rational(num(rng_), den(rng_));
  }

  unsigned index(unsigned lo, unsigned hi) {
    std::uniform_int_distribution<unsigned> d(lo, hi);
    return d(rng_);
  }

 private:
  std::mt19937 rng_;
};

}  // namespace eulercf::test

#pragma once

// Hand-rolled generators for the property-style tests.

#include <random>
#include <vector>

#include "heckoid/rational.hpp"
#include "heckoid/word.hpp"

namespace heckoid::testing {

class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  long long uniform(long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(eng_);
  }

  /// Reduced fraction with denominator in [1, max_den].
  Rational rational(long long max_num, long long max_den) {
    long long d = uniform(1, max_den);
    long long n = uniform(-max_num, max_num);
    return Rational(n, d);
  }

  /// Fraction in [0, 1] with denominator in [1, max_den].
  Rational unit_rational(long long max_den) {
    long long d = uniform(1, max_den);
    long long n = uniform(0, d);
    return Rational(n, d);
  }

  std::vector<Letter> raw_letters(size_t len) {
    std::vector<Letter> out;
    out.reserve(len);
    for (size_t i = 0; i < len; ++i)
      out.push_back(Letter{static_cast<uint8_t>(uniform(0, 3))});
    return out;
  }

  /// Freely reduced word of exactly the requested length.
  Word reduced_word(size_t len) {
    Word w;
    while (w.size() < len) {
      Letter l{static_cast<uint8_t>(uniform(0, 3))};
      if (!w.letters.empty() && l == w.letters.back().inv()) continue;
      w.letters.push_back(l);
    }
    return w;
  }

  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace heckoid::testing

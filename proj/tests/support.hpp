#pragma once

#include <cstdint>
#include <random>

#include "sadic/directive.hpp"
#include "sadic/substitution.hpp"
#include "sadic/word.hpp"

namespace sadic::testing {

/// Small hand-rolled generators for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }

  Letter letter() { return integer(0, 1) == 0 ? Letter::one : Letter::two; }

  Word word(std::size_t min_len, std::size_t max_len) {
    Word w;
    const auto n = static_cast<std::size_t>(integer(static_cast<std::int64_t>(min_len), static_cast<std::int64_t>(max_len)));
    for (std::size_t j = 0; j < n; ++j) w.push_back(letter());
    return w;
  }

  Substitution substitution(std::size_t max_len = 4) { return {word(1, max_len), word(1, max_len)}; }

  /// Random substitution whose incidence matrix has determinant ±1.
  Substitution unimodular_substitution(std::size_t max_len = 4) {
    for (;;) {
      auto s = substitution(max_len);
      if (s.is_unimodular()) return s;
    }
  }

 private:
  std::mt19937_64 rng_;
};

inline Substitution fibonacci() { return Substitution::parse("1->12, 2->1"); }
inline Substitution thue_morse() { return Substitution::parse("1->12, 2->21"); }
inline DirectiveSequence fibonacci_sequence() { return DirectiveSequence::periodic({fibonacci()}); }

}  // namespace sadic::testing

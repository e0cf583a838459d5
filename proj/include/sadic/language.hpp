#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sadic/directive.hpp"

namespace sadic {

/// Depth and size limits for generating language data from images.
struct GenerationLimits {
  /// Largest image σ_{[m,n)}(i) that will be materialized.
  std::size_t max_image_length = std::size_t{1} << 24;
  /// Deepest n tried for infinite sequences.
  std::size_t max_depth = 2048;
};

/// Length-L prefix of the limit word seeded at letter `seed`: the common
/// prefix of σ_{[0,n)}(seed) once it no longer changes as n grows (compared
/// across two cycles for periodic sequences). Throws HorizonExceeded when a
/// finite window runs out first, NonStabilizing when the prefix keeps changing
/// or the images stop growing.
Word limit_word_prefix(const DirectiveSequence& seq, Letter seed, std::size_t length,
                       const GenerationLimits& limits = {});

/// Factors of length ≤ L of L^{(m)}, per length, sorted.
struct FactorSet {
  std::size_t shift = 0;
  std::size_t max_length = 0;
  /// Generating depth n at which the set stopped changing.
  std::size_t depth = 0;
  bool saturated = false;
  /// by_length[n] holds the distinct factors of length n ('1'/'2' strings).
  std::vector<std::vector<std::string>> by_length;

  bool contains(const std::string& w) const;
  std::size_t count(std::size_t n) const { return n < by_length.size() ? by_length[n].size() : 0; }
  std::size_t total() const;
};

/// Union over n of the factors of σ_{[m,n)}(1) and σ_{[m,n)}(2), grown until
/// two consecutive depths add nothing and both images are at least L long.
FactorSet factors(const DirectiveSequence& seq, std::size_t shift, std::size_t max_length,
                  const GenerationLimits& limits = {});

/// Sliding-window extraction of all factors of length ≤ L of one word.
FactorSet factors_of_word(const Word& w, std::size_t max_length);

enum class BalanceStatus { certified, refuted, unsaturated };

struct BalanceCertificate {
  /// Smallest C with max|w|₁ − min|w|₁ ≤ C over factors of each length ≤ L.
  std::int64_t constant = 0;
  std::size_t max_length = 0;
  std::size_t shift = 0;
  std::size_t depth = 0;
  BalanceStatus status = BalanceStatus::unsaturated;
  /// Per-length extremes of |w|₁, index n = factor length (index 0 unused).
  std::vector<std::int64_t> min_ones;
  std::vector<std::int64_t> max_ones;
  /// A pair of equal-length factors realizing the constant (or exceeding the target).
  std::string witness_heavy;
  std::string witness_light;
  std::optional<std::int64_t> target;
};

/// Certifies balance of L^{(m)} up to length L. With a target C, a larger
/// observed imbalance produces status refuted and a witness pair.
BalanceCertificate balance(const DirectiveSequence& seq, std::size_t shift, std::size_t max_length,
                           std::optional<std::int64_t> target = std::nullopt,
                           const GenerationLimits& limits = {});

std::string to_string(BalanceStatus s);

}  // namespace sadic

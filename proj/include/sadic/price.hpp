#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sadic/directive.hpp"
#include "sadic/language.hpp"
#include "sadic/spectral.hpp"

namespace sadic {

/// `verified` is reserved for claims that are decidable for the sequence at
/// hand (periodic data); everything read off a finite window is
/// `verified_on_window`.
enum class ConditionStatus { verified, verified_on_window, refuted, unknown };

struct PriceParams {
  /// Search horizon for the positive block and recurrence matches.
  std::size_t horizon = 64;
  std::size_t irreducibility_min = 1;
  std::size_t irreducibility_max = 50;
  /// Length cap for balance certificates of the shifted languages.
  std::size_t balance_length = 100;
  /// Number of (n_k, l_k) pairs to materialize.
  std::size_t pairs = 4;
  /// Angle below which the left-vector trace counts as returned to v.
  Real trace_tolerance{"1e-20"};
  GenerationLimits limits{};
};

struct BlockCondition {
  ConditionStatus status = ConditionStatus::unknown;
  std::optional<Mat2> block;
  std::size_t h = 0;
  /// Window ends l_k with M_{[l_k−h, l_k)} = B.
  std::vector<std::size_t> ends;
};

struct RecurrenceCondition {
  ConditionStatus status = ConditionStatus::unknown;
  /// Matched windows (n_k, l_k).
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  /// A window length with no recurrence, when refuted.
  std::optional<std::size_t> counterexample;
};

struct IrreducibilityCondition {
  ConditionStatus status = ConditionStatus::unknown;
  std::vector<IrreducibilityResult> per_start;
};

struct BalanceCondition {
  ConditionStatus status = ConditionStatus::unknown;
  std::int64_t constant = 0;
  std::vector<BalanceCertificate> certificates;
};

struct EigenvectorCondition {
  ConditionStatus status = ConditionStatus::unknown;
  std::optional<DirectionVec> v;
  /// "left-perron-of-block" or "ones".
  std::string v_source;
  LeftVecTrace trace;
};

struct PriceReport {
  BlockCondition primitivity;
  RecurrenceCondition recurrence;
  IrreducibilityCondition irreducibility;
  BalanceCondition balance;
  EigenvectorCondition eigenvector;
};

/// Smallest h, then smallest first end l_1, with a positive block that recurs.
BlockCondition find_repeated_block(const DirectiveSequence& seq, std::size_t horizon, std::size_t pairs);

PriceReport price_report(const DirectiveSequence& seq, const PriceParams& params = {});

std::string to_string(ConditionStatus s);

}  // namespace sadic

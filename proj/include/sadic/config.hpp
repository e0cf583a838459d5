#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "sadic/directive.hpp"
#include "sadic/lyapunov.hpp"
#include "sadic/substitution.hpp"

namespace sadic {

/// Analysis parameters shared by the subcommands.
struct AnalysisParams {
  std::size_t depth = 60;
  double tolerance = 1e-20;
  std::size_t cap = 20;
  std::size_t maxlen = 200;
  std::size_t shift = 0;
  std::size_t horizon = 64;
  std::size_t irreducibility_min = 1;
  std::size_t irreducibility_max = 50;
  std::size_t pairs = 4;
  std::size_t steps = 10000;
  std::size_t fractal_depth = 100000;
  double bin_width = 1e-3;
  std::size_t length = 10000;
  std::size_t samples = 50;
  std::uint64_t seed = 1;
  std::size_t explore_n = 2;
  unsigned threads = 1;
};

struct SystemConfig {
  std::vector<NamedSubstitution> substitutions;
  std::optional<DirectiveSequence> sequence;
  /// The sequence line as written, for reports.
  std::string sequence_text;
  std::optional<SequenceModel> model;
  AnalysisParams params;

  /// Throws ConfigError when no sequence was given.
  const DirectiveSequence& require_sequence() const;
  /// Throws ConfigError when no model was given.
  const SequenceModel& require_model() const;
};

/// Line-oriented key = value text:
///
///   fib = "1->12, 2->1"
///   sequence = periodic [fib]           # or: prefix [a, b] cycle [b]
///                                       # or: window [a, b, a]
///   model = iid [fib: 1.0]              # or: markov [a, b] / sofic [a, b]
///   transitions = [[0.5, 0.5], [1, 0]]  # markov rows
///   states = 2                          # sofic
///   edge = 0 -> 1 a 0.5                 # sofic, repeatable
///   initial = [0.5, 0.5]
///   depth = 60                          # any AnalysisParams field
///
/// `#` starts a comment; `[section]` headers are accepted and ignored.
/// Throws ConfigError with the offending line and field.
SystemConfig parse_config(std::istream& in);
SystemConfig parse_config_text(const std::string& text);
SystemConfig load_config(const std::string& path);

}  // namespace sadic

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sadic/substitution.hpp"

namespace sadic {

/// A shift-invariant measure on directive sequences over a finite set S.
class SequenceModel {
 public:
  enum class Kind { iid, markov, sofic };

  struct Edge {
    std::size_t from = 0;
    std::size_t to = 0;
    /// Index into substitutions().
    std::size_t label = 0;
    double weight = 0;
  };

  /// Throws std::invalid_argument on non-stochastic weights or a singular
  /// incidence matrix.
  static SequenceModel iid(std::vector<NamedSubstitution> set, std::vector<double> weights);
  /// One state per substitution; row s of `transitions` is the law of the
  /// next substitution after s.
  static SequenceModel markov(std::vector<NamedSubstitution> set, std::vector<std::vector<double>> transitions,
                              std::vector<double> initial);
  /// Labeled graph with edge weights; the out-weights of each state sum to 1.
  /// An empty initial law means uniform over states.
  static SequenceModel sofic(std::vector<NamedSubstitution> set, std::size_t states, std::vector<Edge> edges,
                             std::vector<double> initial = {});

  Kind kind() const noexcept { return kind_; }
  const std::vector<NamedSubstitution>& substitutions() const noexcept { return set_; }
  bool is_unimodular() const;
  /// The graph of positive-weight transitions is strongly connected.
  bool strongly_connected() const;
  /// Every cylinder has positive mass: positive weights on a strongly connected presentation.
  bool cylinder_positive() const;
  /// Some substitution with an entrywise-positive incidence matrix is used with positive probability.
  bool has_positive_matrix_cylinder() const;

  /// One path of substitution indices; deterministic in the seed.
  std::vector<std::size_t> sample_path(std::size_t length, std::uint64_t seed) const;
  /// Draws `length` substitution indices, calling visit on each.
  void walk(std::size_t length, std::mt19937_64& rng, const std::function<void(std::size_t)>& visit) const;

 private:
  SequenceModel() = default;
  /// Checks stochasticity and matrix invertibility, then builds the sampling tables.
  void finish();

  Kind kind_ = Kind::iid;
  std::vector<NamedSubstitution> set_;
  /// Every kind is run as a walk on a weighted graph; for Markov models the
  /// states are the substitutions and the start state is the first letter.
  std::size_t states_ = 1;
  std::vector<Edge> edges_;
  std::vector<double> initial_;
  std::vector<std::vector<std::size_t>> out_edges_;
  std::vector<std::vector<double>> cumulative_;
  std::vector<double> initial_cumulative_;
};

std::vector<Substitution> sample_sequence(const SequenceModel& model, std::size_t length, std::uint64_t seed);

enum class PisotVerdict { satisfied, violated, inconclusive };

struct LyapEstimate {
  double theta1 = 0;
  double stderr1 = 0;
  double theta2 = 0;
  double stderr2 = 0;
  std::size_t samples = 0;
  std::size_t length = 0;
  std::uint64_t seed = 0;
  bool transposed = true;
  PisotVerdict pisot = PisotVerdict::inconclusive;
};

struct LyapunovOptions {
  unsigned threads = 1;
  /// Multiply by ᵗM_k (the cocycle) rather than M_k.
  bool transposed = true;
  std::size_t renormalize_every = 16;
  /// Steps run before growth is recorded.
  std::size_t burn_in = 64;
};

/// Per sample, pushes an orthonormal frame through the cocycle and reads θ₁,
/// θ₂ from the Gram–Schmidt factors; mean and standard error over samples.
LyapEstimate estimate_exponents(const SequenceModel& model, std::size_t length, std::size_t samples,
                                std::uint64_t seed, const LyapunovOptions& options = {});

/// Satisfied if θ₁ − 3s₁ > 0 and θ₂ + 3s₂ < 0; violated if θ₁ + 3s₁ < 0 or
/// θ₂ − 3s₂ > 0; inconclusive otherwise.
PisotVerdict pisot_verdict(double theta1, double stderr1, double theta2, double stderr2);
PisotVerdict pisot_verdict(const LyapEstimate& est);

std::string to_string(PisotVerdict v);
std::string to_string(SequenceModel::Kind k);

/// Per-sample seed derived from the master seed (splitmix64 of seed and index).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

}  // namespace sadic

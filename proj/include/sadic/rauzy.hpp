#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sadic/directive.hpp"
#include "sadic/language.hpp"
#include "sadic/spectral.hpp"
#include "sadic/word.hpp"

namespace sadic {

/// Points π₀(π_{u,1} l(p)) = |p|₁ − |p|·u₁′ for the first `depth` prefixes p
/// of a limit word, each labeled by the letter that follows p.
struct RauzyApprox {
  std::vector<double> pi0;
  std::vector<Letter> labels;
  std::size_t depth = 0;
  Letter seed = Letter::one;
};

RauzyApprox fractal_points(const DirectiveSequence& seq, const DirectionVec& u, std::size_t depth,
                           Letter seed = Letter::one, const GenerationLimits& limits = {});

/// Same points from an explicit word: prefixes of `word` labeled by their next letter.
RauzyApprox fractal_points_of_word(const Word& word, const DirectionVec& u);

/// x ↦ x + t_i on R(i), with t_i = π₀(π_{u,1}e_i).
struct ExchangeMap {
  Real t1;
  Real t2;

  static ExchangeMap from_direction(const DirectionVec& u);
  /// Translations computed from an explicit first-coordinate share u₁′.
  static ExchangeMap from_share(const Real& share);
  const Real& translation(Letter a) const noexcept { return a == Letter::one ? t1 : t2; }
};

Real exchange(const ExchangeMap& map, const Real& x, Letter label);

struct RotationFactor {
  /// π₀(π_{u,1}e₁) mod 1, in [0, 1).
  Real angle;
  ExchangeMap map;
  bool rational = false;
  IndependenceVerdict independence;
};

RotationFactor rotation_factor(const DirectionVec& u);

struct OrbitOptions {
  /// Added to u₁′ when forming the exchange translations (control runs).
  double perturbation = 0.0;
  /// Reference points generated per orbit step.
  std::size_t reference_factor = 4;
  /// Whether strong coincidence was established beforehand.
  bool coincidence_verified = true;
  Letter seed = Letter::one;
  GenerationLimits limits{};
};

struct OrbitReport {
  std::size_t steps = 0;
  std::size_t mismatches = 0;
  std::optional<std::size_t> first_mismatch;
  /// Up to the first 100 mismatch positions.
  std::vector<std::size_t> positions;
  Real angle;
  std::optional<std::string> warning;
};

/// Drives the exchange of pieces from φ(ω) = 0 using only its own labels (the
/// label of a point is that of the nearest reference fractal point) and
/// compares the label sequence with the limit word ω.
OrbitReport orbit_vs_shift(const DirectiveSequence& seq, const DirectionVec& u, std::size_t steps,
                           const OrbitOptions& options = {});

struct OverlapEstimate {
  double bin_width = 0;
  std::int64_t bound = 0;
  std::size_t bins = 0;
  /// Measure of bins holding points of both labels.
  double overlap = 0;
  /// Measure of bins holding any point.
  double support = 0;
  /// Points outside [−C, C].
  std::size_t outside = 0;
};

/// Bins [−C, C] at the given width. Throws std::invalid_argument for an empty
/// approximation or a non-positive width.
OverlapEstimate subtile_overlap(const RauzyApprox& approx, double bin_width, std::int64_t bound);

struct ZWalk {
  /// z_0 … z_N.
  std::vector<std::int64_t> z;
  /// Steps with |z_{n+1} − z_n| > 1.
  std::size_t step_violations = 0;
  std::int64_t max_abs = 0;
  std::size_t bound_violations = 0;
  std::size_t sign_changes = 0;
  /// First n ≥ 1 with z_n = 0 after the walk has left 0.
  std::optional<std::size_t> first_return;
};

/// z_n = π₀(l(u[0,n))) − π₀(l(v[0,n))), rounded to the lattice ℤ; the bound C
/// is checked when given. Throws std::length_error if either word is shorter than N.
ZWalk zwalk(const Word& u_word, const Word& v_word, const DirectionVec& u, std::size_t steps,
            std::optional<std::int64_t> bound = std::nullopt);

}  // namespace sadic

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sadic/directive.hpp"
#include "sadic/spectral.hpp"
#include "sadic/word.hpp"

namespace sadic {

/// The unit segment x + [0,1)e_i, written [x,i].
struct GeomSegment {
  Vec2i x;
  Letter i = Letter::one;

  Vec2i end() const noexcept { return x + unit(i); }
  friend auto operator<=>(const GeomSegment&, const GeomSegment&) = default;
};

struct GeomSegmentHash {
  std::size_t operator()(const GeomSegment& s) const noexcept {
    return Vec2iHash{}(s.x) * 31u + static_cast<std::size_t>(s.i);
  }
};

std::string to_string(const GeomSegment& s);

/// E₁(σ)[x,i] = {[M_σx + l(p), j] : pj prefix of σ(i)}, in the order of σ(i).
std::vector<GeomSegment> e1_image(const Substitution& sigma, const GeomSegment& s);

/// E₁(σ_{[k,l)})[x,i] built literally: E₁(σ_{l−1}) is applied first and
/// E₁(σ_k) last. Throws std::length_error beyond max_size segments.
std::vector<GeomSegment> e1_iterate(const DirectiveSequence& seq, std::size_t k, std::size_t l,
                                    const GeomSegment& s, std::size_t max_size = std::size_t{1} << 22);

struct CoincidenceWitness {
  std::size_t n = 0;
  /// Common element [y, letter] of E₁(σ_{[0,n)})[0,1] and E₁(σ_{[0,n)})[0,2]; y = l(p₁) = l(p₂).
  Vec2i y;
  Letter letter = Letter::one;
  std::size_t prefix_length = 0;
  /// The prefixes themselves when they are short enough to print.
  std::optional<std::string> p1;
  std::optional<std::string> p2;
};

struct CoincidenceVerdict {
  bool coincident = false;
  std::size_t cap = 0;
  /// Least coincident n with its first witness.
  std::optional<CoincidenceWitness> witness;
  /// Every coincident n ≤ cap (filled when all levels were requested).
  std::vector<std::size_t> coincident_levels;
  /// Levels whose images were too long to scan completely without a match.
  std::vector<std::size_t> truncated_levels;
};

struct CoincidenceOptions {
  /// Report every coincident n ≤ cap instead of stopping at the first.
  bool all_levels = false;
  /// Longest common prefix length scanned per level.
  std::size_t max_scan = std::size_t{1} << 26;
  unsigned threads = 1;
};

/// Scans σ_{[0,n)}(1) and σ_{[0,n)}(2) in lockstep for n = 1..cap. Prefixes
/// with equal abelianization have equal length, so comparing letter counts
/// position by position finds every coincidence.
CoincidenceVerdict strong_coincidence(const DirectiveSequence& seq, std::size_t cap,
                                      const CoincidenceOptions& options = {});

/// Same question answered by intersecting the literal E₁ sets.
bool e1_sets_intersect(const DirectiveSequence& seq, std::size_t n, std::size_t max_size = std::size_t{1} << 22);

struct TaggedSegment {
  GeomSegment segment;
  /// Index of the segment of K this one descends from.
  std::size_t source = 0;
};

/// K⁽ⁿ⁾ as a union of broken lines, each segment tagged by its source.
std::vector<TaggedSegment> configuration_iterate(const DirectiveSequence& seq, const std::vector<GeomSegment>& k,
                                                 std::size_t n, std::size_t max_size = std::size_t{1} << 22);

/// Open height interval (H(x), H(x+e_i)) w.r.t. u and w.
std::pair<Real, Real> height_interval(const GeomSegment& s, const DirectionVec& u, const DirectionVec& w);

/// Intersection of the open height intervals, if non-empty.
std::optional<std::pair<Real, Real>> common_height_interval(const std::vector<GeomSegment>& segments,
                                                            const DirectionVec& u, const DirectionVec& w);

class Configuration {
 public:
  /// Throws std::invalid_argument for repeated segments or when no translate
  /// of w⊥ meets every segment's interior.
  Configuration(std::vector<GeomSegment> segments, DirectionVec u, DirectionVec w);

  const std::vector<GeomSegment>& segments() const noexcept { return segments_; }
  const DirectionVec& u() const noexcept { return u_; }
  const DirectionVec& w() const noexcept { return w_; }
  std::size_t size() const noexcept { return segments_.size(); }

 private:
  std::vector<GeomSegment> segments_;
  DirectionVec u_;
  DirectionVec w_;
};

/// Segments whose interior meets v⊥ + t·u. Throws std::domain_error when ⟨u,v⟩ = 0.
std::vector<TaggedSegment> stripe_slice(const std::vector<TaggedSegment>& segments, const DirectionVec& v,
                                        const DirectionVec& u, const Real& t);

/// T_{u,C} = {x ∈ ℤ² : |π₀(π_{u,1}x)| < C+1}.
class TruncationDomain {
 public:
  TruncationDomain(DirectionVec u, std::int64_t c);
  Real norm(const Vec2i& x) const;
  bool contains(const Vec2i& x) const;

 private:
  DirectionVec u_;
  Real share_;
  std::int64_t c_;
};

/// First n in J for which two segments of K have intersecting E₁(σ_{[0,n)}) images.
std::optional<std::size_t> first_coincidence(const DirectiveSequence& seq, const std::vector<GeomSegment>& k,
                                             const std::vector<std::size_t>& levels,
                                             std::size_t max_size = std::size_t{1} << 22);

struct SliceObservation {
  Real t;
  std::vector<TaggedSegment> segments;
  /// Segments translated so that the smallest start vertex is the origin.
  std::vector<GeomSegment> shape;
  Vec2i offset;
};

struct ExplorerReport {
  std::size_t n = 0;
  std::vector<TaggedSegment> iterate;
  /// Vertices of the iterate inside the stripe, by increasing height.
  std::vector<std::pair<Vec2i, Real>> vertices;
  std::vector<SliceObservation> slices;
  /// Vertex pairs whose heights agree to working precision.
  std::vector<std::pair<Vec2i, Vec2i>> equal_heights;
  /// Slice shapes repeat: slice a+b is slice a translated by t.
  struct Period {
    std::size_t a = 0;
    std::size_t b = 0;
    Vec2i t;
  };
  std::optional<Period> period;
  std::pair<Real, Real> stripe;
};

/// Iterates K n times and walks the slices of the stripe v⊥ + I·u between
/// consecutive vertex heights, recording slice shapes up to translation.
ExplorerReport explore_configuration(const DirectiveSequence& seq, const Configuration& k, std::size_t n,
                                     std::size_t max_size = std::size_t{1} << 16);

}  // namespace sadic

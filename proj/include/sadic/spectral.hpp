#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sadic/directive.hpp"
#include "sadic/quadratic.hpp"

namespace sadic {

/// Non-negative direction in ℝ², normalized to maximum norm 1. Carries an
/// exact quadratic form when one is known.
class DirectionVec {
 public:
  /// Throws std::invalid_argument for negative or all-zero input.
  static DirectionVec from_reals(Real x, Real y);
  static DirectionVec from_exact(const Quadratic& x, const Quadratic& y);

  const Real& x() const noexcept { return x_; }
  const Real& y() const noexcept { return y_; }
  double xd() const { return static_cast<double>(x_); }
  double yd() const { return static_cast<double>(y_); }

  bool is_exact() const noexcept { return exact_.has_value(); }
  const std::optional<std::array<Quadratic, 2>>& exact() const noexcept { return exact_; }

  /// Share of the first coordinate, u₁/(u₁+u₂).
  Real first_share() const { return x_ / (x_ + y_); }

 private:
  Real x_;
  Real y_;
  std::optional<std::array<Quadratic, 2>> exact_;
};

/// Angle in [0, π] between two non-zero vectors (Euclidean).
Real angle_between(const Real& x1, const Real& y1, const Real& x2, const Real& y2);
Real angle_between(const DirectionVec& a, const DirectionVec& b);

/// Angle between the two column images of a non-negative matrix.
Real cone_angle(const Mat2& m);

/// Normalized M_{[0,n)}·ᵗ(1,1).
DirectionVec cone_direction(const DirectiveSequence& seq, std::size_t n);

/// Exact Perron direction of a matrix with a positive square; nullopt otherwise.
std::optional<DirectionVec> perron_direction(const Mat2& m);

/// Exact generalized right eigenvector of an (eventually) periodic sequence:
/// the prefix product applied to the Perron direction of the cycle product.
std::optional<DirectionVec> exact_right_eigenvector(const DirectiveSequence& seq);

enum class EigenStatus { converged, unknown, refused };

struct RightEigenResult {
  EigenStatus status = EigenStatus::unknown;
  /// Direction from the cone iteration at the last depth examined.
  std::optional<DirectionVec> u;
  /// Exact form for (eventually) periodic sequences with a primitive cycle.
  std::optional<DirectionVec> exact;
  std::size_t depth = 0;
  Real cone_angle{0};
  std::optional<std::size_t> positive_at;

  /// Exact direction when available, else the iterated one.
  const DirectionVec& best() const;
};

/// Iterates the nested cones M_{[0,n)}ℝ²₊ until the column angle drops below
/// tol. Status refused when no product up to depth is positive.
RightEigenResult right_eigenvector(const DirectiveSequence& seq, std::size_t depth, const Real& tol);

enum class Independence { independent, dependent, unknown_leaning_independent };

struct IndependenceVerdict {
  Independence status = Independence::unknown_leaning_independent;
  /// u₂/u₁ = numerator/denominator when dependent.
  std::optional<std::pair<BigInt, BigInt>> ratio;
  std::vector<BigInt> partial_quotients;
  /// "exact" or "continued-fraction".
  std::string basis;
  /// Irreducibility plus balance were supplied as established, which forces independence.
  bool implied_by_irreducibility = false;
};

/// Exact forms are decided outright; float forms by expanding the coordinate
/// ratio as a continued fraction up to max_quotients partial quotients.
IndependenceVerdict rational_independence(const DirectionVec& u, std::size_t max_quotients = 40,
                                          bool irreducible_and_balanced = false);

struct LeftVecTraceEntry {
  std::size_t n = 0;
  DirectionVec direction;
  Real angle;
};

struct LeftVecTrace {
  std::vector<LeftVecTraceEntry> entries;
};

/// Normalized ᵗ(M_{[0,n)})·v for each n in indices (increasing), with the
/// angle to v.
LeftVecTrace left_vector_trace(const DirectiveSequence& seq, const DirectionVec& v,
                               const std::vector<std::size_t>& indices);

struct RealPair {
  Real x;
  Real y;
};

/// H(x) = ⟨x,w⟩/⟨u,w⟩, the u-coefficient of x along w⊥.
Real height(const RealPair& x, const DirectionVec& u, const DirectionVec& w);

/// π_{u,w}x = x − H(x)·u. Throws std::domain_error when ⟨u,w⟩ = 0.
RealPair project(const RealPair& x, const DirectionVec& u, const DirectionVec& w);

/// First coordinate of a point of 1⊥; throws std::domain_error off the line.
Real pi0(const RealPair& x, const Real& tol = Real("1e-20"));

/// The all-ones direction 1 = ᵗ(1,1).
DirectionVec ones_direction();

std::string to_string(EigenStatus s);
std::string to_string(Independence s);

}  // namespace sadic

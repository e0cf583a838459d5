#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "sadic/word.hpp"

namespace sadic {

using BigInt = boost::multiprecision::cpp_int;

/// Exact lattice vector for products whose entries outgrow 64 bits.
struct BigVec2 {
  BigInt x;
  BigInt y;
  friend bool operator==(const BigVec2&, const BigVec2&) = default;
};

/// 2×2 matrix with arbitrary-precision integer entries. Indices are 0-based:
/// (0,0) counts letter 1 in the image of letter 1, (1,0) letter 2 in it, etc.
class Mat2 {
 public:
  Mat2() : Mat2(1, 0, 0, 1) {}
  Mat2(BigInt m00, BigInt m01, BigInt m10, BigInt m11)
      : m_{std::move(m00), std::move(m01), std::move(m10), std::move(m11)} {}

  static Mat2 identity() { return {}; }

  const BigInt& operator()(int i, int j) const noexcept { return m_[2 * i + j]; }

  BigInt trace() const { return m_[0] + m_[3]; }
  BigInt det() const { return m_[0] * m_[3] - m_[1] * m_[2]; }
  /// tr² − 4·det, the discriminant of the characteristic polynomial.
  BigInt discriminant() const;
  Mat2 transpose() const { return {m_[0], m_[2], m_[1], m_[3]}; }

  bool is_nonnegative() const;
  /// Entrywise strictly positive.
  bool is_positive() const;

  BigVec2 column(int j) const { return {m_[j], m_[2 + j]}; }
  BigInt column_sum(int j) const { return m_[j] + m_[2 + j]; }

  BigVec2 operator*(const BigVec2& v) const;
  /// Lattice image; throws std::overflow_error when a coordinate leaves int64.
  Vec2i apply(const Vec2i& v) const;

  friend Mat2 operator*(const Mat2& a, const Mat2& b);
  friend bool operator==(const Mat2&, const Mat2&) = default;

  /// "[[a,b],[c,d]]"
  std::string str() const;

 private:
  BigInt m_[4];
};

bool is_perfect_square(const BigInt& n);

/// x² − tr·x + det irreducible over ℚ, i.e. the discriminant is not a square.
bool has_irreducible_charpoly(const Mat2& m);

std::int64_t to_int64_checked(const BigInt& v);

}  // namespace sadic

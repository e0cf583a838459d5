#include "sadic/matrix.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace sadic {

BigInt Mat2::discriminant() const {
  BigInt t = trace();
  return t * t - 4 * det();
}

bool Mat2::is_nonnegative() const {
  for (const auto& e : m_)
    if (e < 0) return false;
  return true;
}

bool Mat2::is_positive() const {
  for (const auto& e : m_)
    if (e <= 0) return false;
  return true;
}

BigVec2 Mat2::operator*(const BigVec2& v) const {
  return {m_[0] * v.x + m_[1] * v.y, m_[2] * v.x + m_[3] * v.y};
}

Vec2i Mat2::apply(const Vec2i& v) const {
  BigVec2 r = *this * BigVec2{v.x, v.y};
  return {to_int64_checked(r.x), to_int64_checked(r.y)};
}

Mat2 operator*(const Mat2& a, const Mat2& b) {
  return {a.m_[0] * b.m_[0] + a.m_[1] * b.m_[2], a.m_[0] * b.m_[1] + a.m_[1] * b.m_[3],
          a.m_[2] * b.m_[0] + a.m_[3] * b.m_[2], a.m_[2] * b.m_[1] + a.m_[3] * b.m_[3]};
}

std::string Mat2::str() const {
  std::ostringstream os;
  os << "[[" << m_[0] << "," << m_[1] << "],[" << m_[2] << "," << m_[3] << "]]";
  return os.str();
}

bool is_perfect_square(const BigInt& n) {
  if (n < 0) return false;
  BigInt r = boost::multiprecision::sqrt(n);
  return r * r == n;
}

bool has_irreducible_charpoly(const Mat2& m) { return !is_perfect_square(m.discriminant()); }

std::int64_t to_int64_checked(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("lattice coordinate exceeds 64 bits");
  return static_cast<std::int64_t>(v);
}

}  // namespace sadic

#pragma once

#include <string>
#include <utility>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "sadic/matrix.hpp"

namespace sadic {

using Rational = boost::multiprecision::cpp_rational;

/// Working precision for directions: 128-bit binary mantissa.
using Real = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<128, boost::multiprecision::digit_base_2>,
    boost::multiprecision::et_off>;

/// n = s²·d with d square-free (d ≥ 1 for n > 0). Trial division covers
/// primes below 10⁵; a leftover cofactor is split only if it is a perfect
/// square, so d may carry a squared prime above that bound.
std::pair<BigInt, BigInt> square_free_decomposition(const BigInt& n);

/// Exact element a + b·√d of a real quadratic field (or ℚ when b = 0).
class Quadratic {
 public:
  Quadratic() = default;
  Quadratic(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  /// a + b·√radicand; the radicand is reduced to its square-free part.
  Quadratic(Rational a, Rational b, const BigInt& radicand);

  const Rational& rational_part() const noexcept { return a_; }
  const Rational& surd_coefficient() const noexcept { return b_; }
  const BigInt& radicand() const noexcept { return d_; }
  bool is_rational() const noexcept { return b_ == 0; }

  /// Exact sign in {−1, 0, 1}.
  int sign() const;
  Real to_real() const;

  friend Quadratic operator+(const Quadratic& x, const Quadratic& y);
  friend Quadratic operator-(const Quadratic& x, const Quadratic& y);
  friend Quadratic operator*(const Quadratic& x, const Quadratic& y);
  friend Quadratic operator/(const Quadratic& x, const Quadratic& y);
  friend bool operator==(const Quadratic& x, const Quadratic& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_ == 0 || x.d_ == y.d_);
  }
  friend bool operator<(const Quadratic& x, const Quadratic& y) { return (x - y).sign() < 0; }

  /// "a + b*sqrt(d)" with reduced fractions, or just "a".
  std::string str() const;

 private:
  static BigInt common_radicand(const Quadratic& x, const Quadratic& y);
  void normalize();

  Rational a_{0};
  Rational b_{0};
  BigInt d_{1};
};

}  // namespace sadic

#include "sadic/quadratic.hpp"

#include <stdexcept>

namespace sadic {

std::pair<BigInt, BigInt> square_free_decomposition(const BigInt& n) {
  if (n <= 0) throw std::invalid_argument("square_free_decomposition requires n > 0");
  BigInt rest = n;
  BigInt square = 1;
  BigInt free = 1;
  for (unsigned p = 2; p < 100000; p += (p == 2 ? 1 : 2)) {
    if (BigInt(p) * p > rest) break;
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    for (unsigned i = 0; i + 1 < e; i += 2) square *= p;
    if (e % 2) free *= p;
  }
  if (rest > 1) {
    if (is_perfect_square(rest)) {
      square *= boost::multiprecision::sqrt(rest);
    } else {
      free *= rest;
    }
  }
  return {square, free};
}

Quadratic::Quadratic(Rational a, Rational b, const BigInt& radicand) : a_(std::move(a)), b_(std::move(b)) {
  if (radicand < 0) throw std::invalid_argument("negative radicand");
  if (radicand == 0) {
    b_ = 0;
    d_ = 1;
    return;
  }
  auto [s, d] = square_free_decomposition(radicand);
  b_ *= Rational(s);
  d_ = d;
  normalize();
}

void Quadratic::normalize() {
  if (d_ == 1) {
    a_ += b_;
    b_ = 0;
  }
  if (b_ == 0) d_ = 1;
}

int Quadratic::sign() const {
  const int sa = a_.sign();
  const int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // a and b√d have opposite signs: compare a² with b²d.
  const Rational lhs = a_ * a_;
  const Rational rhs = b_ * b_ * Rational(d_);
  if (lhs == rhs) return 0;
  return lhs > rhs ? sa : sb;
}

Real Quadratic::to_real() const {
  Real a = Real(numerator(a_)) / Real(denominator(a_));
  if (b_ == 0) return a;
  Real b = Real(numerator(b_)) / Real(denominator(b_));
  return a + b * sqrt(Real(d_));
}

BigInt Quadratic::common_radicand(const Quadratic& x, const Quadratic& y) {
  if (x.b_ == 0) return y.d_;
  if (y.b_ == 0 || x.d_ == y.d_) return x.d_;
  throw std::domain_error("quadratic numbers from different fields");
}

Quadratic operator+(const Quadratic& x, const Quadratic& y) {
  Quadratic r;
  r.d_ = Quadratic::common_radicand(x, y);
  r.a_ = x.a_ + y.a_;
  r.b_ = x.b_ + y.b_;
  r.normalize();
  return r;
}

Quadratic operator-(const Quadratic& x, const Quadratic& y) {
  Quadratic r;
  r.d_ = Quadratic::common_radicand(x, y);
  r.a_ = x.a_ - y.a_;
  r.b_ = x.b_ - y.b_;
  r.normalize();
  return r;
}

Quadratic operator*(const Quadratic& x, const Quadratic& y) {
  Quadratic r;
  r.d_ = Quadratic::common_radicand(x, y);
  r.a_ = x.a_ * y.a_ + x.b_ * y.b_ * Rational(r.d_);
  r.b_ = x.a_ * y.b_ + x.b_ * y.a_;
  r.normalize();
  return r;
}

Quadratic operator/(const Quadratic& x, const Quadratic& y) {
  const BigInt d = Quadratic::common_radicand(x, y);
  const Rational norm = y.a_ * y.a_ - y.b_ * y.b_ * Rational(d);
  if (norm == 0) throw std::domain_error("division by zero in quadratic field");
  Quadratic conj;
  conj.a_ = y.a_ / norm;
  conj.b_ = -y.b_ / norm;
  conj.d_ = d;
  conj.normalize();
  return x * conj;
}

std::string Quadratic::str() const {
  if (b_ == 0) return a_.str();
  std::string out;
  if (a_ != 0) out = a_.str() + (b_ > 0 ? " + " : " - ");
  else if (b_ < 0) out = "-";
  Rational mag = b_ < 0 ? Rational(-b_) : b_;
  if (mag != 1) out += mag.str() + "*";
  return out + "sqrt(" + d_.str() + ")";
}

}  // namespace sadic

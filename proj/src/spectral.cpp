#include "sadic/spectral.hpp"

#include <stdexcept>

namespace sadic {

namespace {

Real to_real(const BigInt& v) { return Real(v); }

}  // namespace

DirectionVec DirectionVec::from_reals(Real x, Real y) {
  if (x < 0 || y < 0) throw std::invalid_argument("direction coordinates must be non-negative");
  const Real m = x > y ? x : y;
  if (m == 0) throw std::invalid_argument("direction must be non-zero");
  DirectionVec out;
  out.x_ = x / m;
  out.y_ = y / m;
  return out;
}

DirectionVec DirectionVec::from_exact(const Quadratic& x, const Quadratic& y) {
  if (x.sign() < 0 || y.sign() < 0) throw std::invalid_argument("direction coordinates must be non-negative");
  if (x.sign() == 0 && y.sign() == 0) throw std::invalid_argument("direction must be non-zero");
  const Quadratic& m = (y < x) ? x : y;
  Quadratic ex = x / m;
  Quadratic ey = y / m;
  DirectionVec out;
  out.x_ = ex.to_real();
  out.y_ = ey.to_real();
  out.exact_ = std::array<Quadratic, 2>{std::move(ex), std::move(ey)};
  return out;
}

Real angle_between(const Real& x1, const Real& y1, const Real& x2, const Real& y2) {
  const Real cross = x1 * y2 - y1 * x2;
  const Real dot = x1 * x2 + y1 * y2;
  return atan2(abs(cross), dot);
}

Real angle_between(const DirectionVec& a, const DirectionVec& b) {
  return angle_between(a.x(), a.y(), b.x(), b.y());
}

Real cone_angle(const Mat2& m) {
  // The cross product of the columns is the determinant; both are exact.
  const BigInt dot = m(0, 0) * m(0, 1) + m(1, 0) * m(1, 1);
  const BigInt cross = abs(m.det());
  return atan2(to_real(cross), to_real(dot));
}

DirectionVec cone_direction(const DirectiveSequence& seq, std::size_t n) {
  const Mat2 m = seq.product(0, n);
  return DirectionVec::from_reals(to_real(m(0, 0) + m(0, 1)), to_real(m(1, 0) + m(1, 1)));
}

std::optional<DirectionVec> perron_direction(const Mat2& m) {
  if (!m.is_nonnegative() || !(m * m).is_positive()) return std::nullopt;
  const BigInt& a = m(0, 0);
  const BigInt& b = m(0, 1);
  const BigInt& d = m(1, 1);
  // Eigenvector (b, λ − a) with λ = (tr + √disc)/2.
  const Rational two_b = Rational(2 * b);
  Quadratic second(Rational(d - a) / two_b, Rational(1) / two_b, m.discriminant());
  return DirectionVec::from_exact(Quadratic(Rational(1)), second);
}

std::optional<DirectionVec> exact_right_eigenvector(const DirectiveSequence& seq) {
  if (seq.is_finite()) return std::nullopt;
  const std::size_t pre = seq.preperiod_length();
  auto cycle_dir = perron_direction(seq.product(pre, pre + seq.cycle_length()));
  if (!cycle_dir) return std::nullopt;
  const Mat2 head = seq.product(0, pre);
  const auto& [x, y] = *cycle_dir->exact();
  auto q = [](const BigInt& v) { return Quadratic(Rational(v)); };
  return DirectionVec::from_exact(q(head(0, 0)) * x + q(head(0, 1)) * y, q(head(1, 0)) * x + q(head(1, 1)) * y);
}

const DirectionVec& RightEigenResult::best() const {
  if (exact) return *exact;
  if (u) return *u;
  throw std::logic_error("no eigenvector available");
}

RightEigenResult right_eigenvector(const DirectiveSequence& seq, std::size_t depth, const Real& tol) {
  seq.require_within(depth);
  RightEigenResult result;
  result.exact = exact_right_eigenvector(seq);
  result.cone_angle = cone_angle(Mat2::identity());
  for (std::size_t n = 1; n <= depth; ++n) {
    const Mat2 m = seq.product(0, n);
    result.depth = n;
    if (!result.positive_at && m.is_positive()) result.positive_at = n;
    if (!result.positive_at) continue;
    result.cone_angle = cone_angle(m);
    if (result.cone_angle < tol) {
      result.status = EigenStatus::converged;
      break;
    }
  }
  if (!result.positive_at) {
    result.status = EigenStatus::refused;
    return result;
  }
  result.u = cone_direction(seq, result.depth);
  return result;
}

IndependenceVerdict rational_independence(const DirectionVec& u, std::size_t max_quotients,
                                          bool irreducible_and_balanced) {
  IndependenceVerdict v;
  v.implied_by_irreducibility = irreducible_and_balanced;
  if (u.is_exact()) {
    v.basis = "exact";
    const auto& [ex, ey] = *u.exact();
    if (ex.sign() == 0 || ey.sign() == 0) {
      v.status = Independence::dependent;
      v.ratio = ex.sign() == 0 ? std::pair<BigInt, BigInt>{1, 0} : std::pair<BigInt, BigInt>{0, 1};
      return v;
    }
    const Quadratic r = ey / ex;
    if (r.is_rational()) {
      v.status = Independence::dependent;
      v.ratio = std::pair<BigInt, BigInt>{numerator(r.rational_part()), denominator(r.rational_part())};
    } else {
      v.status = Independence::independent;
    }
    return v;
  }

  v.basis = "continued-fraction";
  if (u.x() == 0 || u.y() == 0) {
    v.status = Independence::dependent;
    v.ratio = u.x() == 0 ? std::pair<BigInt, BigInt>{1, 0} : std::pair<BigInt, BigInt>{0, 1};
    return v;
  }
  // Expand the ratio small/large in (0, 1].
  const bool flipped = u.y() > u.x();
  const Real r = flipped ? u.x() / u.y() : u.y() / u.x();
  const Real eps = ldexp(Real(1), -100);
  Real x = r;
  BigInt p_prev = 1, p_prev2 = 0, q_prev = 0, q_prev2 = 1;
  for (std::size_t k = 0; k < max_quotients; ++k) {
    const Real fl = floor(x);
    const BigInt a = static_cast<BigInt>(fl);
    v.partial_quotients.push_back(a);
    const BigInt p = a * p_prev + p_prev2;
    const BigInt q = a * q_prev + q_prev2;
    p_prev2 = p_prev;
    p_prev = p;
    q_prev2 = q_prev;
    q_prev = q;
    const Real frac = x - fl;
    if (abs(r - Real(p) / Real(q)) <= eps || frac == 0) {
      v.status = Independence::dependent;
      v.ratio = flipped ? std::pair<BigInt, BigInt>{q, p} : std::pair<BigInt, BigInt>{p, q};
      return v;
    }
    x = 1 / frac;
  }
  v.status = irreducible_and_balanced ? Independence::independent : Independence::unknown_leaning_independent;
  return v;
}

LeftVecTrace left_vector_trace(const DirectiveSequence& seq, const DirectionVec& v,
                               const std::vector<std::size_t>& indices) {
  LeftVecTrace trace;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i && indices[i] <= indices[i - 1]) throw std::invalid_argument("left_vector_trace indices must increase");
    const Mat2 m = seq.product(0, indices[i]);
    // ᵗM·v
    const Real x = to_real(m(0, 0)) * v.x() + to_real(m(1, 0)) * v.y();
    const Real y = to_real(m(0, 1)) * v.x() + to_real(m(1, 1)) * v.y();
    LeftVecTraceEntry e;
    e.n = indices[i];
    e.direction = DirectionVec::from_reals(x, y);
    e.angle = angle_between(e.direction, v);
    trace.entries.push_back(std::move(e));
  }
  return trace;
}

Real height(const RealPair& x, const DirectionVec& u, const DirectionVec& w) {
  const Real uw = u.x() * w.x() + u.y() * w.y();
  if (uw == 0) throw std::domain_error("projection direction is orthogonal to the normal");
  return (x.x * w.x() + x.y * w.y()) / uw;
}

RealPair project(const RealPair& x, const DirectionVec& u, const DirectionVec& w) {
  const Real h = height(x, u, w);
  return {x.x - h * u.x(), x.y - h * u.y()};
}

Real pi0(const RealPair& x, const Real& tol) {
  const Real scale = abs(x.x) > 1 ? abs(x.x) : Real(1);
  if (abs(x.x + x.y) > tol * scale) throw std::domain_error("point is not on the line 1⊥");
  return x.x;
}

DirectionVec ones_direction() { return DirectionVec::from_exact(Quadratic(Rational(1)), Quadratic(Rational(1))); }

std::string to_string(EigenStatus s) {
  switch (s) {
    case EigenStatus::converged:
      return "converged";
    case EigenStatus::unknown:
      return "unknown";
    case EigenStatus::refused:
      return "refused";
  }
  return "unknown";
}

std::string to_string(Independence s) {
  switch (s) {
    case Independence::independent:
      return "independent";
    case Independence::dependent:
      return "dependent";
    case Independence::unknown_leaning_independent:
      return "unknown-leaning-independent";
  }
  return "unknown-leaning-independent";
}

}  // namespace sadic

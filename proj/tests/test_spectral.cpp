#include <doctest.h>

#include <cmath>

#include "sadic/spectral.hpp"
#include "support.hpp"

using namespace sadic;
using sadic::testing::fibonacci_sequence;
using sadic::testing::Gen;

namespace {

const double kPhi = (1.0 + std::sqrt(5.0)) / 2.0;

double d(const Real& x) { return static_cast<double>(x); }

}  // namespace

TEST_CASE("quadratic numbers") {
  const Quadratic phi(Rational(1, 2), Rational(1, 2), 5);
  CHECK(d(phi.to_real()) == doctest::Approx(kPhi).epsilon(1e-15));
  CHECK(phi * phi == phi + Quadratic(Rational(1)));
  CHECK((phi - Quadratic(Rational(2))).sign() < 0);
  CHECK(Quadratic(Rational(0), Rational(1), 8) == Quadratic(Rational(0), Rational(2), 2));
  CHECK(Quadratic(Rational(3), Rational(5), 1).is_rational());
  CHECK_THROWS_AS(Quadratic(Rational(0), Rational(1), 2) + Quadratic(Rational(0), Rational(1), 3), std::domain_error);
}

TEST_CASE("Fibonacci right eigenvector, exact and iterated") {
  const auto r = right_eigenvector(fibonacci_sequence(), 60, Real("1e-20"));
  CHECK(r.status == EigenStatus::converged);
  REQUIRE(r.exact);
  REQUIRE(r.u);
  CHECK(r.exact->exact()->at(0) == Quadratic(Rational(1)));
  CHECK(r.exact->exact()->at(1) == Quadratic(Rational(-1, 2), Rational(1, 2), 5));
  CHECK(r.exact->yd() == doctest::Approx(1.0 / kPhi).epsilon(1e-15));
  CHECK(abs(r.exact->y() - r.u->y()) < Real("1e-10"));
  CHECK(abs(r.exact->x() - r.u->x()) < Real("1e-10"));
}

TEST_CASE("exact and iterated directions agree at depth 60") {
  const auto r = right_eigenvector(fibonacci_sequence(), 60, Real("1e-60"));
  REQUIRE(r.u);
  REQUIRE(r.exact);
  CHECK(r.depth == 60);
  CHECK(angle_between(*r.u, *r.exact) < Real("1e-10"));
}

TEST_CASE("block [[2,1],[1,1]] has the same Perron direction") {
  const auto seq = DirectiveSequence::periodic({Substitution::parse("1->112, 2->12")});
  const auto r = right_eigenvector(seq, 40, Real("1e-20"));
  REQUIRE(r.exact);
  CHECK(r.exact->yd() == doctest::Approx(1.0 / kPhi).epsilon(1e-15));
  const auto p = perron_direction(Mat2(2, 1, 1, 1));
  REQUIRE(p);
  CHECK(angle_between(*p, *r.exact) < Real("1e-30"));
}

TEST_CASE("depth 0 leaves the cone at a right angle") {
  const auto r = right_eigenvector(fibonacci_sequence(), 0, Real("1e-20"));
  CHECK(r.status != EigenStatus::converged);
  CHECK(d(r.cone_angle) == doctest::Approx(std::acos(0.0)));
  const auto lower = DirectiveSequence::periodic({Substitution::parse("1->12, 2->2")});
  CHECK(right_eigenvector(lower, 30, Real("1e-20")).status == EigenStatus::refused);
}

TEST_CASE("cone angles shrink once the product is positive") {
  Gen gen(12);
  for (int t = 0; t < 10; ++t) {
    const auto seq = DirectiveSequence::periodic({gen.unimodular_substitution(3), gen.unimodular_substitution(3)});
    auto prim = is_primitive(seq, 0, 20);
    if (!prim.positive_at) continue;
    Real last = cone_angle(seq.product(0, *prim.positive_at));
    for (std::size_t n = *prim.positive_at + 1; n < *prim.positive_at + 25; ++n) {
      const Real a = cone_angle(seq.product(0, n));
      CHECK(a < last);
      last = a;
    }
  }
}

TEST_CASE("rational independence") {
  const auto exact = DirectionVec::from_exact(Quadratic(Rational(1)), Quadratic(Rational(-1, 2), Rational(1, 2), 5));
  CHECK(rational_independence(exact).status == Independence::independent);

  const auto half = rational_independence(DirectionVec::from_reals(1, Real("0.5")));
  CHECK(half.status == Independence::dependent);
  REQUIRE(half.ratio);
  CHECK(half.ratio->first == 1);
  CHECK(half.ratio->second == 2);

  const Real share = (sqrt(Real(5)) - 1) / 2;
  const auto golden = rational_independence(DirectionVec::from_reals(1, share));
  CHECK(golden.status == Independence::unknown_leaning_independent);
  REQUIRE(golden.partial_quotients.size() == 40);
  for (std::size_t k = 1; k < 10; ++k) CHECK(golden.partial_quotients[k] == 1);

  const auto truncated = rational_independence(DirectionVec::from_reals(1, Real("0.6180339887")));
  CHECK(truncated.status == Independence::dependent);
  REQUIRE(truncated.ratio);
  CHECK(truncated.ratio->first * 10000000000 == truncated.ratio->second * 6180339887);

  const auto implied = rational_independence(DirectionVec::from_reals(1, share), 40, true);
  CHECK(implied.status == Independence::independent);
  CHECK(implied.implied_by_irreducibility);
}

TEST_CASE("left vector traces") {
  const auto fib = fibonacci_sequence();
  const auto v = perron_direction(Mat2(1, 1, 1, 0).transpose());
  REQUIRE(v);
  const auto trace = left_vector_trace(fib, *v, {1, 2, 3, 10});
  REQUIRE(trace.entries.size() == 4);
  for (const auto& e : trace.entries) CHECK(e.angle < Real("1e-30"));

  const auto e1 = DirectionVec::from_reals(1, 0);
  const auto one = left_vector_trace(fib, e1, {1});
  CHECK(one.entries[0].direction.xd() == doctest::Approx(1.0));
  CHECK(one.entries[0].direction.yd() == doctest::Approx(1.0));
  CHECK(d(one.entries[0].angle) == doctest::Approx(std::atan(1.0)));

  CHECK(left_vector_trace(fib, e1, {}).entries.empty());
  CHECK_THROWS_AS(left_vector_trace(fib, e1, {3, 2}), std::invalid_argument);
}

TEST_CASE("projection, height, and pi0") {
  const auto u = DirectionVec::from_reals(1, Real(1) / Real(kPhi));
  const auto w = ones_direction();
  const auto pu = project({u.x(), u.y()}, u, w);
  CHECK(abs(pu.x) < Real("1e-30"));
  CHECK(abs(pu.y) < Real("1e-30"));

  const auto e1 = project({1, 0}, u, w);
  CHECK(d(pi0(e1)) == doctest::Approx(1.0 / (kPhi * kPhi)).epsilon(1e-12));

  const RealPair on_line{Real("0.3"), Real("-0.3")};
  const auto same = project(on_line, u, w);
  CHECK(abs(same.x - on_line.x) < Real("1e-30"));
  CHECK(d(pi0(on_line)) == doctest::Approx(0.3));
  CHECK(pi0({0, 0}) == 0);
  CHECK_THROWS_AS(pi0({1, 0}), std::domain_error);
  CHECK_THROWS_AS(project({1, 0}, DirectionVec::from_reals(1, 0), DirectionVec::from_reals(0, 1)), std::domain_error);
}

TEST_CASE("projection properties on random points") {
  Gen gen(31);
  const auto u = DirectionVec::from_reals(1, Real(1) / Real(kPhi));
  const auto w = ones_direction();
  const Real share = u.first_share();
  for (int t = 0; t < 200; ++t) {
    const auto a = gen.integer(0, 1000);
    const auto b = gen.integer(0, 1000);
    const RealPair x{a, b};
    const auto p = project(x, u, w);
    const auto pp = project(p, u, w);
    CHECK(abs(pp.x - p.x) < Real("1e-12"));
    CHECK(abs(pp.y - p.y) < Real("1e-12"));
    CHECK(abs(p.x + p.y) < Real("1e-25"));
    // π₀(π_{u,1} l(p)) = a − (a+b)·u₁′
    CHECK(abs(pi0(p) - (Real(a) - Real(a + b) * share)) < Real("1e-25"));

    const RealPair y{gen.integer(-50, 50), gen.integer(-50, 50)};
    const RealPair s{x.x + y.x, x.y + y.y};
    CHECK(abs(height(s, u, w) - height(x, u, w) - height(y, u, w)) < Real("1e-25"));
  }
  CHECK(abs(height({u.x(), u.y()}, u, w) - 1) < Real("1e-30"));
}

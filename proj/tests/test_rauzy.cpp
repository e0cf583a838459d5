#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "sadic/language.hpp"
#include "sadic/rauzy.hpp"
#include "support.hpp"

using namespace sadic;
using sadic::testing::fibonacci_sequence;
using sadic::testing::Gen;

namespace {

DirectionVec fib_u() { return *exact_right_eigenvector(fibonacci_sequence()); }

const double kShare = (std::sqrt(5.0) - 1) / 2;

}  // namespace

TEST_CASE("fractal points of the first prefixes") {
  const auto one = fractal_points(fibonacci_sequence(), fib_u(), 1);
  REQUIRE(one.pi0.size() == 1);
  CHECK(one.pi0[0] == 0.0);
  CHECK(one.labels[0] == Letter::one);

  const auto three = fractal_points(fibonacci_sequence(), fib_u(), 3);
  REQUIRE(three.pi0.size() == 3);
  CHECK(three.pi0[0] == doctest::Approx(0.0));
  CHECK(three.pi0[1] == doctest::Approx(1 - kShare));
  CHECK(three.pi0[2] == doctest::Approx(1 - 2 * kShare));
  CHECK(three.labels == std::vector<Letter>{Letter::one, Letter::two, Letter::one});
}

TEST_CASE("fractal points agree with an explicit prefix walk") {
  const auto u = fib_u();
  const Word w = limit_word_prefix(fibonacci_sequence(), Letter::one, 500);
  const auto a = fractal_points(fibonacci_sequence(), u, 500);
  const auto b = fractal_points_of_word(w, u);
  REQUIRE(b.pi0.size() == 500);
  int ones = 0;
  for (std::size_t n = 0; n < 500; ++n) {
    CHECK(a.pi0[n] == doctest::Approx(ones - static_cast<double>(n) * kShare));
    CHECK(a.pi0[n] == b.pi0[n]);
    CHECK(a.labels[n] == w[n]);
    if (w[n] == Letter::one) ++ones;
  }
}

TEST_CASE("exchange translations") {
  const auto m = ExchangeMap::from_direction(fib_u());
  CHECK(static_cast<double>(m.t1) == doctest::Approx(1 - kShare));
  CHECK(static_cast<double>(m.t2) == doctest::Approx(-kShare));
  CHECK(m.t1 - m.t2 == 1);
  CHECK(static_cast<double>(exchange(m, Real(0), Letter::one)) == doctest::Approx(1 - kShare));
  CHECK(static_cast<double>(exchange(m, Real(0), Letter::two)) == doctest::Approx(-kShare));

  Gen gen(3);
  for (int t = 0; t < 200; ++t) {
    const double s = static_cast<double>(gen.integer(1, 999)) / 1000;
    const auto e = ExchangeMap::from_share(Real(s));
    CHECK(e.t1 - e.t2 == 1);
    CHECK(static_cast<double>(e.t1) == doctest::Approx(1 - s));
  }
}

TEST_CASE("exchange steps follow the prefix walk") {
  const auto u = fib_u();
  const auto m = ExchangeMap::from_direction(u);
  const auto pts = fractal_points(fibonacci_sequence(), u, 200);
  Real x = 0;
  for (std::size_t n = 0; n + 1 < pts.pi0.size(); ++n) {
    x = exchange(m, x, pts.labels[n]);
    CHECK(static_cast<double>(x) == doctest::Approx(pts.pi0[n + 1]));
  }
}

TEST_CASE("rotation factor") {
  const auto r = rotation_factor(fib_u());
  CHECK(static_cast<double>(r.angle) == doctest::Approx((3 - std::sqrt(5.0)) / 2));
  CHECK_FALSE(r.rational);

  const auto half = rotation_factor(DirectionVec::from_reals(1, 1));
  CHECK(half.angle == Real("0.5"));
  CHECK(half.rational);

  const auto third = rotation_factor(DirectionVec::from_reals(1, 2));
  CHECK(static_cast<double>(third.angle) == doctest::Approx(2.0 / 3));
  CHECK(third.rational);

  CHECK_THROWS_AS(rotation_factor(DirectionVec::from_reals(1, 0)), std::invalid_argument);
}

TEST_CASE("orbit of the exchange reproduces the limit word") {
  const auto r = orbit_vs_shift(fibonacci_sequence(), fib_u(), 10000);
  CHECK(r.steps == 10000);
  CHECK(r.mismatches == 0);
  CHECK_FALSE(r.first_mismatch);
  CHECK_FALSE(r.warning);

  const auto single = orbit_vs_shift(fibonacci_sequence(), fib_u(), 1);
  CHECK(single.mismatches == 0);

  OrbitOptions off;
  off.perturbation = 0.01;
  const auto bad = orbit_vs_shift(fibonacci_sequence(), fib_u(), 1000, off);
  CHECK(bad.mismatches > 0);
  REQUIRE(bad.first_mismatch);
  CHECK(bad.positions.front() == *bad.first_mismatch);
  CHECK(bad.positions.size() <= 100);

  OrbitOptions unproven;
  unproven.coincidence_verified = false;
  CHECK(orbit_vs_shift(fibonacci_sequence(), fib_u(), 10, unproven).warning);
}

TEST_CASE("subtile overlap") {
  const auto u = fib_u();
  const auto one = fractal_points(fibonacci_sequence(), u, 1);
  const auto e1 = subtile_overlap(one, 1e-3, 1);
  CHECK(e1.overlap == 0);
  CHECK(e1.outside == 0);
  CHECK(e1.bins == 2000);

  auto merged = fractal_points(fibonacci_sequence(), u, 2000);
  const std::size_t n = merged.pi0.size();
  for (std::size_t j = 0; j < n; ++j) {
    merged.pi0.push_back(merged.pi0[j]);
    merged.labels.push_back(other(merged.labels[j]));
  }
  const auto full = subtile_overlap(merged, 1e-3, 1);
  CHECK(full.overlap == doctest::Approx(full.support));
  CHECK(full.support > 0);

  const auto pts = fractal_points(fibonacci_sequence(), u, 100000);
  const auto coarse = subtile_overlap(pts, 2e-3, 1);
  const auto fine = subtile_overlap(pts, 1e-3, 1);
  CHECK(fine.outside == 0);
  CHECK(fine.overlap < 1e-2);
  CHECK(fine.overlap <= coarse.overlap);

  CHECK_THROWS_AS(subtile_overlap(RauzyApprox{}, 1e-3, 1), std::invalid_argument);
  CHECK_THROWS_AS(subtile_overlap(one, 0, 1), std::invalid_argument);
}

TEST_CASE("fractal points cover their hull densely") {
  auto pts = fractal_points(fibonacci_sequence(), fib_u(), 10000).pi0;
  std::sort(pts.begin(), pts.end());
  double gap = 0;
  for (std::size_t j = 1; j < pts.size(); ++j) gap = std::max(gap, pts[j] - pts[j - 1]);
  CHECK(gap < 1e-2);
  CHECK(pts.front() > -1);
  CHECK(pts.back() < 1);
}

TEST_CASE("zwalk on Fibonacci factors") {
  const auto u = fib_u();
  const Word w = limit_word_prefix(fibonacci_sequence(), Letter::one, 5000);

  const auto same = zwalk(w, w, u, 1000, 1);
  CHECK(same.max_abs == 0);
  CHECK(same.z.size() == 1001);
  CHECK(same.sign_changes == 0);
  CHECK_FALSE(same.first_return);

  Gen gen(8);
  for (int t = 0; t < 100; ++t) {
    const auto a = w.substr(static_cast<std::size_t>(gen.integer(0, 3000)), 1000);
    const auto b = w.substr(static_cast<std::size_t>(gen.integer(0, 3000)), 1000);
    const auto z = zwalk(a, b, u, 1000, 1);
    CHECK(z.step_violations == 0);
    CHECK(z.bound_violations == 0);
    CHECK(z.max_abs <= 1);
    std::int64_t ones = 0;
    for (std::size_t n = 0; n < 1000; ++n) {
      CHECK(z.z[n] == ones);
      ones += (a[n] == Letter::one) - (b[n] == Letter::one);
    }
  }

  const auto shifted = zwalk(w, w.substr(1, 2000), u, 1000);
  CHECK(shifted.max_abs <= 1);

  const Word ones(std::vector<Letter>(50, Letter::one));
  const Word twos(std::vector<Letter>(50, Letter::two));
  const auto wild = zwalk(ones, twos, u, 50, 1);
  CHECK(wild.max_abs == 50);
  CHECK(wild.bound_violations == 49);
  CHECK_THROWS_AS(zwalk(ones, twos, u, 51), std::length_error);
}

#include <doctest.h>

#include <cstdlib>
#include <numeric>

#include "sadic/directive.hpp"
#include "sadic/errors.hpp"
#include "support.hpp"

using namespace sadic;
using sadic::testing::fibonacci;
using sadic::testing::fibonacci_sequence;
using sadic::testing::Gen;

namespace {

/// Rational root search over divisors of the constant term (monic quadratic).
bool has_rational_root(const BigInt& trace, const BigInt& det) {
  auto value = [&](const BigInt& x) { return x * x - trace * x + det; };
  if (det == 0) return true;
  const BigInt d = det < 0 ? BigInt(-det) : det;
  for (BigInt q = 1; q * q <= d; ++q) {
    if (d % q != 0) continue;
    for (const BigInt& r : {q, BigInt(d / q)})
      if (value(r) == 0 || value(-r) == 0) return true;
  }
  return false;
}

Mat2 naive_product(const DirectiveSequence& seq, std::size_t k, std::size_t l) {
  Mat2 m = Mat2::identity();
  for (std::size_t j = k; j < l; ++j) m = m * seq.at(j).incidence();
  return m;
}

}  // namespace

TEST_CASE("Fibonacci partial products") {
  const auto seq = fibonacci_sequence();
  CHECK(seq.product(0, 2) == Mat2(2, 1, 1, 1));
  CHECK(seq.product(0, 10) == Mat2(89, 55, 55, 34));
  CHECK(seq.product(3, 3) == Mat2::identity());
  CHECK(seq.product(5, 5) == Mat2::identity());
}

TEST_CASE("products match the naive left-to-right product") {
  Gen gen(5);
  for (int t = 0; t < 20; ++t) {
    std::vector<Substitution> pre{gen.substitution(3)};
    std::vector<Substitution> cyc{gen.substitution(3), gen.substitution(3), gen.substitution(3)};
    const auto seq = DirectiveSequence::eventually_periodic(pre, cyc);
    for (int q = 0; q < 10; ++q) {
      const auto k = static_cast<std::size_t>(gen.integer(0, 12));
      const auto l = k + static_cast<std::size_t>(gen.integer(0, 12));
      CHECK(seq.product(k, l) == naive_product(seq, k, l));
    }
  }
}

TEST_CASE("product cache is coherent under splitting") {
  Gen gen(9);
  const auto seq = DirectiveSequence::periodic({gen.substitution(3), gen.substitution(3)});
  for (int t = 0; t < 200; ++t) {
    const auto k = static_cast<std::size_t>(gen.integer(0, 15));
    const auto m = k + static_cast<std::size_t>(gen.integer(0, 10));
    const auto l = m + static_cast<std::size_t>(gen.integer(0, 10));
    CHECK(seq.product(k, l) == seq.product(k, m) * seq.product(m, l));
  }
}

TEST_CASE("finite windows refuse queries past the horizon") {
  const auto seq = DirectiveSequence::finite_window({fibonacci(), fibonacci()});
  CHECK(seq.horizon() == 2);
  CHECK(seq.product(0, 2) == Mat2(2, 1, 1, 1));
  CHECK_THROWS_AS(seq.product(0, 3), HorizonExceeded);
  CHECK_THROWS_AS(seq.at(2), HorizonExceeded);
  CHECK_THROWS_AS(DirectiveSequence::periodic({}), std::invalid_argument);
  CHECK_THROWS_AS(DirectiveSequence::finite_window({}), std::invalid_argument);
}

TEST_CASE("normalization finds the minimal period") {
  const auto f = fibonacci();
  const auto t = sadic::testing::thue_morse();
  const auto seq = DirectiveSequence::eventually_periodic({t, f}, {t, f, t, f});
  CHECK(seq.mode() == DirectiveSequence::Mode::periodic);
  CHECK(seq.cycle_length() == 2);
  CHECK(seq.preperiod_length() == 0);
}

TEST_CASE("images are generated lazily and agree with composition") {
  const auto seq = fibonacci_sequence();
  CHECK(seq.image(0, 5, Letter::one, 100).str() == "1211212112112");
  CHECK(seq.image_length(0, 10, Letter::one) == 144);
  CHECK(seq.image_prefix(0, 30, Letter::one, 8).str() == "12112121");
  CHECK_THROWS_AS(seq.image(0, 40, Letter::one, 1000), std::length_error);

  Gen gen(3);
  const auto mixed = DirectiveSequence::periodic({gen.substitution(3), gen.substitution(3), gen.substitution(3)});
  Substitution composed = Substitution::identity();
  for (std::size_t j = 0; j < 5; ++j) composed = compose(composed, mixed.at(j));
  for (Letter a : kLetters) {
    CHECK(mixed.image(0, 5, a, 1u << 20) == composed.image(a));
    ImageCursor cursor(mixed, 0, 5, a);
    Word streamed;
    while (auto x = cursor.next()) streamed.push_back(*x);
    CHECK(streamed == composed.image(a));
  }
}

TEST_CASE("primitivity") {
  const auto fib = fibonacci_sequence();
  auto r = is_primitive(fib, 0, 10);
  REQUIRE(r.positive_at);
  CHECK(*r.positive_at == 2);
  CHECK(r.holds_for_all_k);

  const auto lower = DirectiveSequence::periodic({Substitution::parse("1->12, 2->2")});
  CHECK_FALSE(is_primitive(lower, 0, 40).positive_at);

  const auto window = DirectiveSequence::finite_window({fibonacci(), Substitution::parse("1->112, 2->12")});
  auto single = is_primitive(window, 1, 2);
  REQUIRE(single.positive_at);
  CHECK(*single.positive_at == 2);

  CHECK_THROWS_AS(is_primitive(fib, 4, 4), std::invalid_argument);
}

TEST_CASE("primitivity verdict is invariant under shifting by the period") {
  Gen gen(41);
  for (int t = 0; t < 30; ++t) {
    const auto seq = DirectiveSequence::periodic({gen.substitution(3), gen.substitution(3)});
    const std::size_t p = seq.cycle_length();
    for (std::size_t k = 0; k < 3; ++k) {
      auto a = is_primitive(seq, k, k + 20);
      auto b = is_primitive(seq, k + p, k + p + 20);
      CHECK(a.positive_at.has_value() == b.positive_at.has_value());
      if (a.positive_at && b.positive_at) CHECK(*a.positive_at + p == *b.positive_at);
    }
  }
}

TEST_CASE("algebraic irreducibility") {
  const auto fib = fibonacci_sequence();
  auto r = is_algebraically_irreducible(fib, 0, 1, 50);
  CHECK(r.verdict == WindowVerdict::verified_on_window);
  CHECK(r.reducible_at.empty());
  CHECK(is_algebraically_irreducible(fib, 0, 1, 1).last_discriminant == 5);

  const auto tm = DirectiveSequence::periodic({sadic::testing::thue_morse()});
  auto t = is_algebraically_irreducible(tm, 0, 1, 50);
  CHECK(t.verdict == WindowVerdict::refuted);
  CHECK(t.reducible_at.size() == 50);
  CHECK(is_algebraically_irreducible(tm, 0, 1, 1).last_discriminant == 4);

  // l = k is excluded, so a window holding only l = k checks nothing.
  CHECK(is_algebraically_irreducible(fib, 3, 3, 3).verdict == WindowVerdict::unknown);
}

TEST_CASE("perfect-square test agrees with rational root search") {
  Gen gen(500);
  for (int t = 0; t < 500; ++t) {
    const Mat2 m(gen.integer(-30, 30), gen.integer(-30, 30), gen.integer(-30, 30), gen.integer(-30, 30));
    CHECK(has_irreducible_charpoly(m) == !has_rational_root(m.trace(), m.det()));
  }
}

TEST_CASE("recurrence windows") {
  const auto fib = fibonacci_sequence();
  auto r = recurrence_windows(fib, 3, 10);
  std::vector<std::size_t> expected(7);
  std::iota(expected.begin(), expected.end(), std::size_t{1});
  CHECK(r == expected);

  const auto two = DirectiveSequence::periodic({fibonacci(), sadic::testing::thue_morse()});
  CHECK(recurrence_windows(two, 2, 9) == std::vector<std::size_t>{2, 4, 6});

  const auto once = DirectiveSequence::finite_window({fibonacci(), sadic::testing::thue_morse(), sadic::testing::thue_morse()});
  CHECK(recurrence_windows(once, 2, 3).empty());
  CHECK_THROWS_AS(recurrence_windows(fib, 0, 5), std::invalid_argument);
}

#include <doctest.h>

#include <algorithm>
#include <set>

#include "sadic/coincidence.hpp"
#include "support.hpp"

using namespace sadic;
using sadic::testing::fibonacci;
using sadic::testing::fibonacci_sequence;
using sadic::testing::Gen;

namespace {

std::set<GeomSegment> as_set(const std::vector<GeomSegment>& v) { return {v.begin(), v.end()}; }

GeomSegment seg(std::int64_t x, std::int64_t y, int i) { return {Vec2i{x, y}, letter_from_int(i)}; }

DirectionVec fib_u() { return *exact_right_eigenvector(fibonacci_sequence()); }

}  // namespace

TEST_CASE("E1 images of the Fibonacci substitution") {
  const auto fib = fibonacci();
  CHECK(e1_image(fib, seg(0, 0, 1)) == std::vector<GeomSegment>{seg(0, 0, 1), seg(1, 0, 2)});
  CHECK(e1_image(fib, seg(0, 0, 2)) == std::vector<GeomSegment>{seg(0, 0, 1)});
}

TEST_CASE("E1 images: cardinality, broken lines, translation equivariance") {
  Gen gen(404);
  for (int t = 0; t < 1000; ++t) {
    const auto sigma = gen.substitution(6);
    const GeomSegment s{Vec2i{gen.integer(-50, 50), gen.integer(-50, 50)}, gen.letter()};
    const auto image = e1_image(sigma, s);
    CHECK(image.size() == sigma.image(s.i).size());

    const Mat2 m = sigma.incidence();
    CHECK(image.front().x == m.apply(s.x));
    for (std::size_t j = 1; j < image.size(); ++j) CHECK(image[j].x == image[j - 1].x + unit(image[j - 1].i));
    CHECK(image.back().end() == m.apply(s.end()));

    const auto at_origin = e1_image(sigma, {Vec2i{}, s.i});
    for (std::size_t j = 0; j < image.size(); ++j) {
      CHECK(image[j].x == at_origin[j].x + m.apply(s.x));
      CHECK(image[j].i == at_origin[j].i);
    }
  }
}

TEST_CASE("E1 is a cocycle: E1(σ∘τ) = E1(σ)E1(τ)") {
  Gen gen(55);
  for (int t = 0; t < 300; ++t) {
    const auto sigma = gen.substitution(4);
    const auto tau = gen.substitution(4);
    for (Letter i : kLetters) {
      std::vector<GeomSegment> flat;
      for (const auto& s : e1_image(tau, {Vec2i{}, i})) {
        auto part = e1_image(sigma, s);
        flat.insert(flat.end(), part.begin(), part.end());
      }
      CHECK(as_set(flat) == as_set(e1_image(compose(sigma, tau), {Vec2i{}, i})));
    }
  }
}

TEST_CASE("strong coincidence examples") {
  const auto v = strong_coincidence(fibonacci_sequence(), 10);
  CHECK(v.coincident);
  REQUIRE(v.witness);
  CHECK(v.witness->n == 1);
  CHECK(v.witness->y == Vec2i{0, 0});
  CHECK(v.witness->letter == Letter::one);
  CHECK(v.witness->p1 == std::string());
  CHECK(v.witness->p2 == std::string());

  const auto tm = strong_coincidence(DirectiveSequence::periodic({sadic::testing::thue_morse()}), 10);
  CHECK_FALSE(tm.coincident);
  CHECK(tm.cap == 10);
  CHECK(tm.truncated_levels.empty());

  const auto none = strong_coincidence(fibonacci_sequence(), 0);
  CHECK_FALSE(none.coincident);
  CHECK(none.cap == 0);
}

TEST_CASE("coincidence witnesses satisfy the defining property") {
  Gen gen(90);
  for (int t = 0; t < 40; ++t) {
    const auto seq = DirectiveSequence::periodic({gen.substitution(3), gen.substitution(3)});
    const auto v = strong_coincidence(seq, 6);
    if (!v.witness) continue;
    const auto& w = *v.witness;
    const Word a = seq.image(0, w.n, Letter::one, 1u << 20);
    const Word b = seq.image(0, w.n, Letter::two, 1u << 20);
    CHECK(abelianize(a.prefix(w.prefix_length)) == w.y);
    CHECK(abelianize(b.prefix(w.prefix_length)) == w.y);
    CHECK(a[w.prefix_length] == w.letter);
    CHECK(b[w.prefix_length] == w.letter);
  }
}

TEST_CASE("lockstep search agrees with literal E1 set intersection") {
  Gen gen(2718);
  for (int t = 0; t < 50; ++t) {
    const auto seq = DirectiveSequence::periodic({gen.substitution(3), gen.substitution(3)});
    CoincidenceOptions all;
    all.all_levels = true;
    const auto v = strong_coincidence(seq, 8, all);
    std::vector<std::size_t> literal;
    for (std::size_t n = 1; n <= 8; ++n)
      if (e1_sets_intersect(seq, n)) literal.push_back(n);
    CHECK(v.coincident_levels == literal);
  }
}

TEST_CASE("threaded search reports the same levels") {
  Gen gen(6);
  for (int t = 0; t < 10; ++t) {
    const auto seq = DirectiveSequence::periodic({gen.substitution(3), gen.substitution(3)});
    CoincidenceOptions one, many;
    one.all_levels = many.all_levels = true;
    many.threads = 4;
    CHECK(strong_coincidence(seq, 8, one).coincident_levels == strong_coincidence(seq, 8, many).coincident_levels);
    many.all_levels = false;
    const auto first = strong_coincidence(seq, 8, many);
    const auto serial = strong_coincidence(seq, 8);
    CHECK(first.coincident == serial.coincident);
    if (first.witness) CHECK(first.witness->n == serial.witness->n);
  }
}

TEST_CASE("configuration iterates") {
  const auto fib = fibonacci_sequence();
  const std::vector<GeomSegment> k{seg(0, 0, 1), seg(0, 0, 2)};
  const auto it = configuration_iterate(fib, k, 1);
  REQUIRE(it.size() == 3);
  CHECK(it[0].segment == seg(0, 0, 1));
  CHECK(it[0].source == 0);
  CHECK(it[1].segment == seg(1, 0, 2));
  CHECK(it[1].source == 0);
  CHECK(it[2].segment == seg(0, 0, 1));
  CHECK(it[2].source == 1);

  const auto zero = configuration_iterate(fib, k, 0);
  REQUIRE(zero.size() == 2);
  CHECK(zero[0].segment == k[0]);
  CHECK(zero[1].segment == k[1]);

  const auto single = configuration_iterate(fib, {seg(2, -1, 1)}, 4);
  CHECK(single.size() == e1_iterate(fib, 0, 4, seg(2, -1, 1)).size());
}

TEST_CASE("configurations are validated") {
  const auto u = fib_u();
  const auto w = ones_direction();
  CHECK_NOTHROW(Configuration({seg(0, 0, 1), seg(0, 0, 2)}, u, w));
  CHECK_THROWS_AS(Configuration({seg(0, 0, 1), seg(0, 0, 1)}, u, w), std::invalid_argument);
  CHECK_THROWS_AS(Configuration({seg(0, 0, 1), seg(5, 5, 2)}, u, w), std::invalid_argument);
}

TEST_CASE("stripe slices") {
  const auto u = fib_u();
  const auto v = ones_direction();
  const std::vector<TaggedSegment> one{{seg(0, 0, 1), 0}};
  const auto [lo, hi] = height_interval(seg(0, 0, 1), u, v);
  CHECK(stripe_slice(one, v, u, (lo + hi) / 2).size() == 1);
  CHECK(stripe_slice(one, v, u, hi + 1).empty());
  CHECK_THROWS_AS(stripe_slice(one, DirectionVec::from_reals(0, 1), DirectionVec::from_reals(1, 0), 0),
                  std::domain_error);

  const auto fib = fibonacci_sequence();
  const std::vector<GeomSegment> k{seg(0, 0, 1), seg(0, 0, 2)};
  const auto it = configuration_iterate(fib, k, 2);
  // Every broken line spans [H(M x), H(M(x+e_i))]; pick t where both are present.
  Real a = 0, b = 0;
  {
    const auto i1 = e1_iterate(fib, 0, 2, k[0]);
    const auto i2 = e1_iterate(fib, 0, 2, k[1]);
    const Real top1 = height_interval(i1.back(), u, v).second;
    const Real top2 = height_interval(i2.back(), u, v).second;
    a = 0;
    b = top1 < top2 ? top1 : top2;
  }
  const auto slice = stripe_slice(it, v, u, (a + b) / 3);
  CHECK(slice.size() == 2);
  CHECK(slice[0].source != slice[1].source);
}

TEST_CASE("truncation domain") {
  const auto u = fib_u();
  const TruncationDomain t(u, 1);
  CHECK(t.contains({0, 0}));
  CHECK_FALSE(t.contains({5, -5}));
  CHECK(static_cast<double>(t.norm({5, -5})) == doctest::Approx(5.0));
  // Integer points near the u line stay inside: (F_{n+1}, F_n).
  CHECK(t.contains({89, 55}));
  CHECK(t.contains({144, 89}));
  CHECK_FALSE(t.contains({144, 80}));
  CHECK_THROWS_AS(TruncationDomain(DirectionVec::from_reals(1, 0), 1), std::invalid_argument);
}

TEST_CASE("J-coincidence is invariant under translation") {
  Gen gen(1);
  const auto u = fib_u();
  const TruncationDomain dom(u, 1);
  for (int t = 0; t < 30; ++t) {
    const auto seq = DirectiveSequence::periodic({gen.substitution(3), gen.substitution(3)});
    std::vector<GeomSegment> k{seg(0, 0, 1), seg(0, 0, 2)};
    const Vec2i shift{gen.integer(-3, 3), gen.integer(-3, 3)};
    std::vector<GeomSegment> moved;
    for (auto s : k) moved.push_back({s.x + shift, s.i});
    if (!dom.contains(shift) || !dom.contains(shift + Vec2i{1, 0}) || !dom.contains(shift + Vec2i{0, 1})) continue;
    const std::vector<std::size_t> levels{1, 2, 3, 4, 5};
    CHECK(first_coincidence(seq, k, levels) == first_coincidence(seq, moved, levels));
  }
  const auto fib = fibonacci_sequence();
  CHECK(first_coincidence(fib, {seg(0, 0, 1), seg(0, 0, 2)}, {1, 2}) == std::optional<std::size_t>(1));
}

TEST_CASE("configuration explorer") {
  const auto u = fib_u();
  const auto v = *perron_direction(Mat2(2, 1, 1, 1));
  const Configuration k({seg(0, 0, 1), seg(0, 0, 2)}, u, v);
  const auto r = explore_configuration(fibonacci_sequence(), k, 4);
  CHECK(r.iterate.size() == 8 + 5);
  CHECK(r.equal_heights.empty());
  CHECK(r.stripe.first < r.stripe.second);
  for (std::size_t j = 1; j < r.vertices.size(); ++j) CHECK(r.vertices[j - 1].second < r.vertices[j].second);
  // Each broken line is monotone in height, so each slice meets every source once.
  for (const auto& s : r.slices) {
    CHECK(s.segments.size() == 2);
    std::set<std::size_t> sources;
    for (const auto& g : s.segments) sources.insert(g.source);
    CHECK(sources.size() == 2);
  }
}

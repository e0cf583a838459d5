#include <doctest.h>

#include "sadic/price.hpp"
#include "support.hpp"

using namespace sadic;
using sadic::testing::fibonacci;
using sadic::testing::fibonacci_sequence;

TEST_CASE("Fibonacci satisfies every condition") {
  PriceParams params;
  params.horizon = 20;
  const auto r = price_report(fibonacci_sequence(), params);

  CHECK(r.primitivity.status == ConditionStatus::verified);
  REQUIRE(r.primitivity.block);
  CHECK(*r.primitivity.block == Mat2(2, 1, 1, 1));
  CHECK(r.primitivity.h == 2);
  CHECK(r.primitivity.ends.front() == 2);

  CHECK(r.recurrence.status == ConditionStatus::verified);
  REQUIRE(r.recurrence.pairs.size() == params.pairs);
  for (std::size_t k = 1; k < r.recurrence.pairs.size(); ++k) {
    CHECK(r.recurrence.pairs[k].first > r.recurrence.pairs[k - 1].first);
    CHECK(r.recurrence.pairs[k].second > r.recurrence.pairs[k - 1].second);
  }

  CHECK(r.irreducibility.status == ConditionStatus::verified_on_window);
  CHECK(r.balance.status == ConditionStatus::verified_on_window);
  CHECK(r.balance.constant == 1);
  CHECK(r.eigenvector.status == ConditionStatus::verified_on_window);
  CHECK(r.eigenvector.v_source == "left-perron-of-block");
}

TEST_CASE("recurrence pairs really are recurrences") {
  const auto seq = DirectiveSequence::periodic({fibonacci(), Substitution::parse("1->112, 2->12"), fibonacci()});
  const auto r = price_report(seq);
  REQUIRE(r.primitivity.block);
  for (std::size_t k = 0; k < r.primitivity.ends.size(); ++k) {
    const std::size_t l = r.primitivity.ends[k];
    CHECK(seq.product(l - r.primitivity.h, l) == *r.primitivity.block);
  }
  for (auto [n, l] : r.recurrence.pairs)
    for (std::size_t j = 0; j < l; ++j) CHECK(seq.id(n + j) == seq.id(j));
}

TEST_CASE("a single known letter leaves everything open") {
  const auto r = price_report(DirectiveSequence::finite_window({fibonacci()}));
  CHECK(r.primitivity.status == ConditionStatus::unknown);
  CHECK(r.recurrence.status == ConditionStatus::unknown);
  CHECK(r.balance.status == ConditionStatus::unknown);
  CHECK(r.eigenvector.status == ConditionStatus::unknown);
  CHECK(r.irreducibility.status != ConditionStatus::refuted);
  CHECK(r.irreducibility.per_start.front().l_max == 1);
}

TEST_CASE("Thue-Morse fails irreducibility") {
  const auto r = price_report(DirectiveSequence::periodic({sadic::testing::thue_morse()}));
  CHECK(r.irreducibility.status == ConditionStatus::refuted);
  CHECK_FALSE(r.irreducibility.per_start.front().reducible_at.empty());
}

TEST_CASE("a preperiod that never returns refutes recurrence") {
  const auto tm = sadic::testing::thue_morse();
  const auto seq = DirectiveSequence::eventually_periodic({tm}, {fibonacci()});
  const auto r = price_report(seq);
  CHECK(r.recurrence.status == ConditionStatus::refuted);
  REQUIRE(r.recurrence.counterexample);
  CHECK(*r.recurrence.counterexample == 1);
}

TEST_CASE("finite windows verify recurrence only on the window") {
  std::vector<Substitution> window(12, fibonacci());
  const auto r = price_report(DirectiveSequence::finite_window(window));
  CHECK(r.primitivity.status == ConditionStatus::verified_on_window);
  CHECK(r.recurrence.status == ConditionStatus::verified_on_window);
  for (auto [n, l] : r.recurrence.pairs) CHECK(n + l <= 12);
}

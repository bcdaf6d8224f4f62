// Copyright 2026 The CompLog Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "complog/inference.hpp"

#include <cmath>

#include "doctest.h"
#include "oracle.hpp"
#include "support.hpp"

using namespace complog;

namespace {

SignedBits whole(std::int64_t b) { return SignedBits::of(Bits::whole(b)); }

const DescriptionCandidate& candidate(const DescriptionVerdict& v, const std::string& name) {
  for (const auto& c : v.candidates) {
    if (c.atom.name == name) return c;
  }
  FAIL("no candidate " << name);
  return v.candidates.front();
}

// Selection rule restated independently: admissible candidates first, then
// smallest u (largest u when none is admissible), then hops, then name.
Atom select(const std::vector<DescriptionCandidate>& cs) {
  bool any = false;
  for (const auto& c : cs) any = any || c.u >= Bits{};
  const DescriptionCandidate* best = nullptr;
  for (const auto& c : cs) {
    if (any && c.u < Bits{}) continue;
    if (!best) {
      best = &c;
      continue;
    }
    const bool better_u = any ? c.u < best->u : c.u > best->u;
    if (better_u || (c.u == best->u && (c.hops < best->hops ||
                                        (c.hops == best->hops && c.atom < best->atom)))) {
      best = &c;
    }
  }
  return best->atom;
}

}  // namespace

TEST_SUITE("inference") {

TEST_CASE("unexpectedness of the colouring example") {
  const Program fig1 = testing::fixture("fig1.complog");
  const auto xy = unexpectedness(fig1, parse_goal("<x, y>"));
  CHECK(xy.augmented);
  CHECK(xy.cw == Cost(Bits::whole(7)));
  CHECK(xy.cd == Cost(Bits::whole(6)));
  CHECK(xy.u == whole(1));
  CHECK(xy.u_clamped == whole(1));
  CHECK(xy.ex_ante == Cost(Bits::whole(7)));
  CHECK(xy.productive_query == parse_goal("+x, +y"));

  const auto x = unexpectedness(fig1, parse_goal("<x>"));
  CHECK(x.cw == Cost(Bits::whole(4)));
  CHECK(x.cd == Cost(Bits::whole(4)));
  CHECK(x.u == whole(0));

  QueryOptions cat;
  cat.augment_mode = AugmentMode::catalyst;
  CHECK(unexpectedness(fig1, parse_goal("<x, y>"), cat).u == whole(0));
}

TEST_CASE("generation through an event fact") {
  const auto r = unexpectedness(testing::fixture("eagle.complog"), parse_goal("<eagle>"));
  CHECK_FALSE(r.augmented);
  CHECK(r.productive_query == parse_goal("#eagle"));
  CHECK(r.u == whole(8));
}

TEST_CASE("empty goals") {
  const auto r = unexpectedness(testing::fixture("fig1.complog"), GoalSet{});
  CHECK(r.cw == Cost(Bits::whole(0)));
  CHECK(r.cd == Cost(Bits::whole(0)));
  CHECK(r.u == whole(0));
}

TEST_CASE("infinite sides are flagged, never subtracted") {
  // Describable but not producible.
  const auto plus = unexpectedness(parse_program("2 :: x. 3 :: #y."), parse_goal("<x>"));
  CHECK(plus.cw.is_infinite());
  CHECK(plus.u.state == SignedBits::State::plus_infinite);
  CHECK(plus.u.str() == "inf");
  CHECK(plus.ex_ante.is_infinite());
  // Not describable at all.
  const auto undef = unexpectedness(parse_program("y -> x. 3 :: +x."), parse_goal("<x>"));
  CHECK(undef.cd.is_infinite());
  CHECK(undef.u.state == SignedBits::State::undefined);
  CHECK(clamp_nonnegative(undef.u) == undef.u);
}

TEST_CASE("clamping is idempotent") {
  for (std::int64_t m : {-5'000'000LL, -1LL, 0LL, 1LL, 7'000'000LL}) {
    const SignedBits u = SignedBits::of(Bits::from_micro(m));
    const SignedBits c = clamp_nonnegative(u);
    CHECK(c.value == std::max(u.value, Bits{}));
    CHECK(clamp_nonnegative(c) == c);
  }
}

TEST_CASE("ex-ante equals the world cost when both sides are finite") {
  testing::Rng rng(404);
  for (int i = 0; i < 150; ++i) {
    const Program p = testing::random_mental_program(rng, 6);
    const GoalSet goals = testing::random_condition_goals(rng, testing::atom_count(p), 2);
    QueryOptions o;
    o.depth_bound = 6;
    const auto r = unexpectedness(p, goals, o);
    if (r.cw.finite() && r.cd.finite()) {
      CHECK(r.ex_ante == r.cw);
      CHECK(r.u.value == r.cw.bits() - r.cd.bits());
      CHECK(r.u.value >= Bits{});  // race dominance
    }
  }
}

TEST_CASE("query routing") {
  const Models m = build_models(testing::fixture("fig1.complog"));
  CHECK(productive_counterpart(m, {"x"}) == initiate("x"));
  const Models fauna = build_models(testing::fixture("fauna.complog"));
  CHECK(productive_counterpart(fauna, {"dog"}) == named("dog"));
  CHECK(epistemic_goals(parse_goal("#dog, +x")).conditions == std::set<Atom>{{"dog"}, {"x"}});
  CHECK_THROWS_AS(epistemic_goals(parse_goal("-x")), QueryError);
}

TEST_CASE("describe picks the most informative affordable description") {
  const Program fauna = testing::fixture("fauna.complog");
  const auto pigeon = describe(fauna, named("pigeon"));
  CHECK(pigeon.chosen.name == "bird");
  CHECK(candidate(pigeon, "bird").u == Bits::whole(0));
  CHECK(candidate(pigeon, "pigeon").u == Bits::whole(-1));
  CHECK_FALSE(candidate(pigeon, "pigeon").admissible);

  const auto eagle = describe(fauna, named("eagle"));
  CHECK(eagle.chosen.name == "eagle");
  CHECK(candidate(eagle, "eagle").u == Bits::whole(8));
  CHECK(candidate(eagle, "bird").u == Bits::whole(9));

  const auto dog = describe(fauna, named("dog"));
  CHECK(dog.chosen.name == "dog");
  for (const char* n : {"dog", "mammal", "pet"}) CHECK(candidate(dog, n).u == Bits::whole(0));

  for (const char* e : {"pigeon", "eagle", "dog", "cat", "canary", "tiger"}) {
    const auto v = describe(fauna, named(e));
    CHECK(v.chosen == select(v.candidates));
  }
}

TEST_CASE("describe falls back to the least violating candidate") {
  // Every description costs more than the observation.
  const auto v = describe(parse_program("9 :: a. 6 :: b. a -> b. 1 :: #a."), named("a"));
  CHECK(v.chosen.name == "b");
  for (const auto& c : v.candidates) CHECK_FALSE(c.admissible);
}

TEST_CASE("describe errors") {
  const Program fauna = testing::fixture("fauna.complog");
  try {
    describe(fauna, named("unicorn"));
    FAIL("no error");
  } catch (const QueryError& e) {
    CHECK(e.code() == QueryError::Code::unknown_event);
  }
  try {
    describe(parse_program("1 :: x. 2 :: #y."), named("y"));
    FAIL("no error");
  } catch (const QueryError& e) {
    CHECK(e.code() == QueryError::Code::no_candidates);
  }
}

TEST_CASE("describe is invariant under a uniform description shift") {
  // Adding k bits to every fact raises every cd by k (all cds route through
  // exactly one fact). k = 0.5 keeps every u's sign on this fixture.
  const Program fauna = testing::fixture("fauna.complog");
  Program shifted;
  for (const Statement& s : fauna.statements) {
    if (const auto* f = std::get_if<ConditionFact>(&s)) {
      shifted.add(ConditionFact{f->cond, f->weight + Bits::from_micro(500'000)});
    } else {
      shifted.add(s);
    }
  }
  for (const char* e : {"pigeon", "eagle", "cat", "canary", "tiger"}) {
    CAPTURE(e);
    const auto a = describe(fauna, named(e));
    const auto b = describe(shifted, named(e));
    REQUIRE(a.candidates.size() == b.candidates.size());
    bool signs_kept = true;
    for (std::size_t i = 0; i < a.candidates.size(); ++i) {
      CHECK(b.candidates[i].u == a.candidates[i].u - Bits::from_micro(500'000));
      signs_kept = signs_kept && a.candidates[i].admissible == b.candidates[i].admissible;
    }
    if (signs_kept) CHECK(a.chosen == b.chosen);
  }
}

TEST_CASE("negation of a die face") {
  const Program die = testing::fixture("die.complog");
  const double expected = oracle::complement_of(2.0);
  for (Machine m : {Machine::epistemic, Machine::productive}) {
    const auto r = negate(die, m == Machine::epistemic ? "die1" : "+die1", m, std::nullopt,
                          NegationThresholds::exhaustive());
    REQUIRE(r.examined.size() == 3);
    CHECK(r.target_cost == Bits::whole(2));
    for (const auto& a : r.examined) CHECK(a.cost == Bits::whole(2));
    CHECK(std::abs(r.aggregated - expected) < 1e-9);
    CHECK(std::abs(r.aggregated - (2.0 - std::log2(3.0))) < 1e-9);
    CHECK(r.stop_reason == NegationReport::StopReason::exhausted);
  }
  // Default thresholds stop once the aggregate is a bit below the target.
  const auto d = negate(die, "die1", Machine::epistemic);
  CHECK(d.examined.size() == 2);
  CHECK(d.stop_reason == NegationReport::StopReason::low_aggregate);
  CHECK(d.aggregated == doctest::Approx(1.0));
}

TEST_CASE("negation stopping rules") {
  const Program p = parse_program("2 :: t. 3 :: s.");
  const auto high = negate(p, "t", Machine::epistemic);
  REQUIRE(high.examined.size() == 1);
  CHECK(high.stop_reason == NegationReport::StopReason::high_alternative);
  CHECK(high.aggregated == doctest::Approx(3.0));

  const auto lonely = negate(parse_program("2 :: t."), "t", Machine::epistemic);
  CHECK(lonely.examined.empty());
  CHECK(std::isinf(lonely.aggregated));
  CHECK(lonely.stop_reason == NegationReport::StopReason::exhausted);

  const auto picked = negate(testing::fixture("fauna.complog"), "dog", Machine::epistemic,
                             std::set<std::string>{"cat", "tiger"},
                             NegationThresholds::exhaustive());
  CHECK(picked.candidates == std::vector<std::string>{"cat", "tiger"});
  REQUIRE(picked.examined.size() == 2);
  CHECK(picked.examined[0].node == "cat");
}

TEST_CASE("uniform lotteries match the probability complement") {
  for (int n : {2, 4, 8, 16}) {
    Program p;
    const Bits c = Bits::whole(static_cast<std::int64_t>(std::log2(n)));
    for (int i = 0; i < n; ++i) p.add(ConditionFact{{"o" + std::to_string(i)}, c});
    const auto r = negate(p, "o0", Machine::epistemic, std::nullopt,
                          NegationThresholds::exhaustive());
    CHECK(r.examined.size() == static_cast<std::size_t>(n - 1));
    CHECK(std::abs(r.aggregated - oracle::complement_of(c.to_double())) < 1e-9);
  }
}

TEST_CASE("aggregation decreases and stays below every examined cost") {
  testing::Rng rng(55);
  for (int i = 0; i < 100; ++i) {
    const Program p = testing::random_mental_program(rng, 8);
    const int n = testing::atom_count(p);
    const std::string target = testing::atom_name(testing::uniform(rng, 0, n - 1));
    NegationReport r;
    try {
      r = negate(p, target, Machine::epistemic, std::nullopt, NegationThresholds::exhaustive());
    } catch (const QueryError&) {
      continue;  // target not describable
    }
    std::vector<double> costs;
    double prev = INFINITY;
    for (const auto& a : r.examined) {
      costs.push_back(a.cost.to_double());
      const double agg = aggregate_complexities(costs);
      CHECK(agg < prev);
      CHECK(agg <= *std::min_element(costs.begin(), costs.end()) + 1e-12);
      CHECK(agg == doctest::Approx(oracle::prob_complement(costs)).epsilon(1e-12));
      prev = agg;
    }
    if (!r.examined.empty()) CHECK(r.aggregated == doctest::Approx(prev).epsilon(1e-12));
  }
}

TEST_CASE("aggregation matches the closed forms") {
  CHECK(aggregate_complexities({2, 2, 2}) == doctest::Approx(2.0 - std::log2(3.0)));
  CHECK(aggregate_complexities({5}) == doctest::Approx(5.0));
  CHECK(aggregate_complexities({1, 1}) == doctest::Approx(0.0));
  CHECK(std::isinf(aggregate_complexities({})));
  // Large costs do not underflow.
  CHECK(aggregate_complexities({2000, 2000}) == doctest::Approx(1999.0));
}

}  // TEST_SUITE

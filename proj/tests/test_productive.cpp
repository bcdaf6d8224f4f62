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


#include "complog/productive.hpp"

#include "complog/epistemic.hpp"
#include "doctest.h"
#include "oracle.hpp"
#include "support.hpp"

using namespace complog;

namespace {

GoalSet events(std::initializer_list<EventRef> es) {
  GoalSet g;
  g.events.insert(es.begin(), es.end());
  return g;
}

CwResult run_cw(const Program& p, const GoalSet& g, int depth = 10, int cap = 1) {
  return cw(build_world_base(split(p).active, depth, cap), initial_state(p), g);
}

GoalSet initiations_of(const GoalSet& conds) {
  GoalSet out;
  for (const Atom& a : conds.conditions) out.events.insert(initiate(a.name));
  return out;
}

bool acyclic(const MentalGraph& g) {
  // Kahn's algorithm over atom nodes.
  std::vector<int> indeg(g.node_count(), 0);
  for (const auto& e : g.edges()) {
    if (e.src != MentalGraph::kStart) ++indeg[e.dst];
  }
  std::vector<std::size_t> ready;
  for (std::size_t v = 1; v < g.node_count(); ++v) {
    if (indeg[v] == 0) ready.push_back(v);
  }
  std::size_t seen = 0;
  while (!ready.empty()) {
    const std::size_t v = ready.back();
    ready.pop_back();
    ++seen;
    for (std::size_t ei : g.out_edges(v)) {
      if (--indeg[g.edges()[ei].dst] == 0) ready.push_back(g.edges()[ei].dst);
    }
  }
  return seen == g.node_count() - 1;
}

}  // namespace

TEST_SUITE("productive") {

TEST_CASE("race augmentation of the colouring example") {
  const Program race = testing::fixture("fig1_race.complog");
  CHECK(run_cw(race, events({initiate("x")})).cost == Cost(Bits::whole(4)));
  const CwResult xy = run_cw(race, events({initiate("x"), initiate("y")}));
  CHECK(xy.cost == Cost(Bits::whole(7)));
  REQUIRE(xy.witness.steps.size() == 2);
  CHECK(xy.witness.steps[0].what.label == "=> +x");
  CHECK(xy.witness.steps[1].what.label == "+x => +y");
  CHECK(xy.witness.total == Bits::whole(7));
  CHECK(render_trace(xy.witness) ==
        "1. => +x  [4 bits, total 4]\n2. +x => +y  [3 bits, total 7]\n");
}

TEST_CASE("catalyst augmentation reaches the description cost") {
  const CwResult xy = run_cw(testing::fixture("fig1_catalyst.complog"),
                             events({initiate("x"), initiate("y")}));
  CHECK(xy.cost == Cost(Bits::whole(6)));
  REQUIRE(xy.witness.steps.size() == 3);
  CHECK(xy.witness.steps[0].what.label == "=> +z");
}

TEST_CASE("empty goals cost nothing") {
  const CwResult r = run_cw(testing::fixture("fig1_race.complog"), GoalSet{});
  CHECK(r.cost == Cost(Bits::whole(0)));
  CHECK(r.witness.steps.empty());
}

TEST_CASE("die faces are exclusive without a disjunction construct") {
  const Program die = testing::fixture("die.complog");
  CHECK(run_cw(die, events({initiate("die1")})).cost == Cost(Bits::whole(2)));
  const CwResult two = run_cw(die, events({initiate("die1"), initiate("die2")}));
  CHECK(two.cost == Cost(Bits::whole(4)));
  CHECK(two.witness.steps.size() == 2);
}

TEST_CASE("a single token triggers only one of two racing rules") {
  Program p = testing::fixture("race.complog");
  p.add(GivenEvent{initiate("x")});
  CHECK(run_cw(p, events({initiate("y")})).cost == Cost(Bits::whole(0)));
  const CwResult both = run_cw(p, events({initiate("y"), initiate("z")}));
  CHECK(both.cost.is_infinite());
  CHECK_FALSE(both.structurally_unreachable);
  CHECK_FALSE(both.depth_exhausted);

  // A held condition is not consumed, so both rules fire.
  CHECK(run_cw(testing::fixture("no_race.complog"), events({initiate("y"), initiate("z")})).cost ==
        Cost(Bits::whole(0)));
}

TEST_CASE("consumed goal events still count as occurred") {
  const CwResult r = run_cw(parse_program("1 :: +x. 1 :: +x => +y."),
                            events({initiate("x"), initiate("y")}));
  CHECK(r.cost == Cost(Bits::whole(2)));
  CHECK(r.witness.steps.size() == 2);
}

TEST_CASE("effects apply left to right") {
  const Program on_off = parse_program("given: #go. #go => +x, -x.");
  const Program off_on = parse_program("given: #go. #go => -x, +x.");
  GoalSet held;
  held.conditions.insert({"x"});
  CHECK(run_cw(on_off, held).cost.is_infinite());
  CHECK(run_cw(off_on, held).cost == Cost(Bits::whole(0)));
  // Both orders record both events.
  CHECK(run_cw(on_off, events({initiate("x"), terminate("x")})).cost == Cost(Bits::whole(0)));
}

TEST_CASE("condition goals are checked in the final state") {
  const Program p = parse_program("1 :: +x. 5 :: -x. 2 :: +x => +y.");
  GoalSet g;
  g.conditions.insert({"y"});
  g.events.insert(terminate("x"));
  CHECK(run_cw(p, g).cost == Cost(Bits::whole(8)));
}

TEST_CASE("trigger-less rules are capped per execution") {
  const Program p = parse_program("given: z. 1 :: : z => #t. #t => +a. #t => +b.");
  const GoalSet ab = events({initiate("a"), initiate("b")});
  CHECK(run_cw(p, ab, 10, 1).cost.is_infinite());
  CHECK(run_cw(p, ab, 10, 2).cost == Cost(Bits::whole(2)));
}

TEST_CASE("unreachable versus depth-exhausted") {
  const Program chain = parse_program("1 :: +a. +a => +b. +b => +c.");
  const CwResult shallow = run_cw(chain, events({initiate("c")}), 2);
  CHECK(shallow.cost.is_infinite());
  CHECK(shallow.depth_exhausted);
  CHECK_FALSE(shallow.structurally_unreachable);
  CHECK(shallow.depth_bound == 2);
  CHECK(run_cw(chain, events({initiate("c")}), 3).cost == Cost(Bits::whole(1)));

  const CwResult never = run_cw(chain, events({initiate("q"), initiate("b")}));
  CHECK(never.cost.is_infinite());
  CHECK(never.structurally_unreachable);
  CHECK(never.unproducible == std::vector<std::string>{"+q"});
}

TEST_CASE("minimal alternatives") {
  const Program die = testing::fixture("die.complog");
  const WorldRuleBase base = build_world_base(split(die).active);
  const WorldState init = initial_state(die);
  const auto alts = enumerate_min_alternatives(
      base, init, {initiate("die2"), initiate("die3"), initiate("die4")}, {initiate("die1")});
  CHECK(alts == std::vector<Alternative>{{initiate("die2"), Bits::whole(2)},
                                         {initiate("die3"), Bits::whole(2)},
                                         {initiate("die4"), Bits::whole(2)}});
  CHECK(enumerate_min_alternatives(base, init, {}, {}).empty());

  const Program fauna = testing::fixture("fauna.complog");
  const WorldRuleBase fb = build_world_base(split(fauna).active);
  const auto animals = enumerate_min_alternatives(fb, initial_state(fauna), fb.events(),
                                                  {named("dog")});
  REQUIRE_FALSE(animals.empty());
  // Independent check: the cheapest remaining single-goal cost.
  Cost cheapest = Cost::infinite();
  for (const SpontaneousEvent& s : fb.spontaneous) {
    if (!(s.event == named("dog"))) cheapest = std::min(cheapest, Cost(s.cost));
  }
  CHECK(animals.front().cost == cheapest);
  CHECK(animals.front().cost == Cost(Bits::whole(3)));
  CHECK(animals.front().event == named("bird"));
  for (const Alternative& a : animals) CHECK_FALSE(a.event == named("dog"));
}

TEST_CASE("equal to the brute-force oracle") {
  testing::Rng rng(2026);
  for (int i = 0; i < 300; ++i) {
    const Program p = testing::random_world_program(rng);
    const int depth = testing::uniform(rng, 1, 5);
    const WorldRuleBase base = build_world_base(split(p).active, depth);
    const WorldState init = initial_state(p);
    const GoalSet goals = testing::random_world_goals(rng, base.events());
    CAPTURE(render_program(p));
    CAPTURE(render_goal(goals));
    const CwResult r = cw(base, init, goals);
    CHECK(r.cost == oracle::brute_cw(base, init, goals));
    if (r.cost.finite()) {
      Bits sum;
      for (const FiringStep& s : r.witness.steps) sum += s.cost;
      CHECK(sum == r.witness.total);
      CHECK(static_cast<int>(r.witness.steps.size()) <= depth);
    }
  }
}

TEST_CASE("deeper search never costs more") {
  testing::Rng rng(8);
  for (int i = 0; i < 200; ++i) {
    const Program p = testing::random_world_program(rng);
    const GoalSet goals = testing::random_world_goals(rng, build_world_base(split(p).active).events());
    Cost prev = Cost::infinite();
    for (int d = 1; d <= 6; ++d) {
      const Cost c = run_cw(p, goals, d).cost;
      CHECK(c <= prev);
      prev = c;
    }
  }
}

TEST_CASE("race augmentation never undercuts the description cost") {
  testing::Rng rng(313);
  for (int i = 0; i < 200; ++i) {
    const Program p = testing::random_mental_program(rng, 7);
    const MentalGraph g = build_mental_graph(p);
    const WorldRuleBase base = build_world_base(augment(p, AugmentMode::race), 8);
    const GoalSet goals = testing::random_condition_goals(rng, testing::atom_count(p), 3);
    CHECK(cw(base, WorldState{}, initiations_of(goals)).cost >= cd(g, goals).cost);
  }
}

TEST_CASE("catalyst augmentation equals the description cost on acyclic graphs") {
  testing::Rng rng(17);
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    const Program p = testing::random_mental_program(rng, 7, /*acyclic=*/true);
    const MentalGraph g = build_mental_graph(p);
    REQUIRE(acyclic(g));
    const int n = testing::atom_count(p);
    const WorldRuleBase base = build_world_base(augment(p, AugmentMode::catalyst), n);
    const GoalSet goals = testing::random_condition_goals(rng, n, 3);
    CHECK(cw(base, WorldState{}, initiations_of(goals)).cost == cd(g, goals).cost);
    ++checked;
  }
  CHECK(checked == 200);
}

TEST_CASE("excluded events are removed from the model") {
  const WorldRuleBase base = build_world_base(parse_program("1 :: +a. +a => +b. 5 :: +b."));
  const WorldRuleBase cut = without_event(base, initiate("a"));
  CHECK(cut.spontaneous.size() == 1);
  CHECK(cut.rules.empty());
  const auto alts = enumerate_min_alternatives(base, WorldState{}, {initiate("b")},
                                               {initiate("a")});
  CHECK(alts == std::vector<Alternative>{{initiate("b"), Bits::whole(5)}});
}

}  // TEST_SUITE

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


#include "complog/export.hpp"

#include "doctest.h"
#include "support.hpp"

using namespace complog;

namespace {

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_SUITE("export") {

TEST_CASE("epistemic ASP export matches the reviewed golden file") {
  const std::string got = export_asp(testing::fixture("fig1.complog"), parse_goal("<x, y>"),
                                     Machine::epistemic);
  CHECK(got == testing::read_text(std::string(COMPLOG_GOLDEN) + "/fig1_epistemic.lp"));
  CHECK(contains(got, "cost(z, x, 1).\n"));
  CHECK(contains(got, "goal(x).\ngoal(y).\n"));
}

TEST_CASE("productive ASP export carries the step rule and interleaving") {
  QueryOptions o;
  o.depth_bound = 7;
  const std::string got = export_asp(testing::fixture("fig1.complog"), parse_goal("<x, y>"),
                                     Machine::productive, o);
  CHECK(contains(got, "cost(init(z), init(x), 1).\n"));
  CHECK(contains(got, "goal(init(x)).\n"));
  CHECK(contains(got, "reached(Y, N + 1) :- path(X, Y), reached(X, N), N < 7.\n"));
  CHECK(contains(got, ":- reached(X, N), reached(Y, N), X != Y.\n"));
}

TEST_CASE("empty goals emit no goal facts") {
  const std::string got = export_asp(testing::fixture("fig1.complog"), GoalSet{},
                                     Machine::epistemic);
  CHECK_FALSE(contains(got, "\ngoal("));
  CHECK(contains(got, "#minimize"));
}

TEST_CASE("fractional costs are scaled to integers") {
  const std::string got = export_asp(parse_program("0.25 :: x. 1.5 :: x -> y."),
                                     parse_goal("<y>"), Machine::epistemic);
  CHECK(contains(got, "% costs in bits, scaled by 100\n"));
  CHECK(contains(got, "cost(s, x, 25).\n"));
  CHECK(contains(got, "cost(x, y, 150).\n"));
}

TEST_CASE("start constant avoids atom names") {
  const std::string got = export_asp(parse_program("1 :: s. s -> t."), parse_goal("<t>"),
                                     Machine::epistemic);
  CHECK(contains(got, "start(s0).\n"));
  CHECK(contains(got, "cost(s0, s, 1).\n"));
}

TEST_CASE("mental graph DOT highlights the colouring") {
  const MentalGraph g = build_mental_graph(testing::fixture("fig1.complog"));
  const std::string plain = mental_graph_dot(g);
  CHECK(plain.rfind("digraph mental {", 0) == 0);
  CHECK_FALSE(contains(plain, "color=red"));
  const CdResult r = cd(g, parse_goal("<x, y>"));
  const std::string lit = mental_graph_dot(g, &r.witness);
  CHECK(contains(lit, "n3 -> n1 [label=\"1\", color=red, penwidth=2];"));
  CHECK(contains(lit, "n1 [label=\"x\", style=filled, fillcolor=black, fontcolor=white];"));
  CHECK_FALSE(contains(lit, "n1 -> n2 [label=\"3\", color=red"));
  CHECK(mental_graph_dot(g, &r.witness) == lit);  // stable
}

TEST_CASE("world graph and execution DOT") {
  const WorldRuleBase base = build_world_base(testing::fixture("fig1_race.complog"));
  const std::string w = world_graph_dot(base);
  CHECK(contains(w, "start -> e2 [label=\"4\"];"));
  CHECK(contains(w, "e2 -> e0 [label=\"r0: 1\"];"));
  const CwResult r = cw(base, WorldState{}, parse_goal("+x, +y"));
  const std::string t = execution_dot(r.witness);
  CHECK(contains(t, "t2 [label=\"2. +x => +y\\ntotal 7\"];"));
  CHECK(contains(t, "t1 -> t2 [label=\"+3\"];"));
}

TEST_CASE("context edges are dashed") {
  const std::string w = world_graph_dot(build_world_base(testing::fixture("active_rules.complog")));
  CHECK(contains(w, "style=dashed"));
}

}  // TEST_SUITE

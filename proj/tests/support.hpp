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

// Fixture loading and seeded random program generators shared by the unit
// tests and the acceptance binary.

#ifndef COMPLOG_TESTS_SUPPORT_HPP
#define COMPLOG_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iterator>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "complog/syntax.hpp"

namespace complog::testing {

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string fixture_path(const std::string& name) {
  return std::string(COMPLOG_FIXTURES) + "/" + name;
}

inline Program fixture(const std::string& name) {
  return parse_program(read_text(fixture_path(name)));
}

/// Every .complog fixture shipped with the tests.
inline const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {
      "fig1.complog",         "fig1_race.complog",      "fig1_catalyst.complog",
      "eagle.complog",        "fauna.complog",          "die.complog",
      "race.complog",         "no_race.complog",        "augment_input.complog",
      "augment_race.complog", "augment_catalyst.complog", "active_rules.complog",
      "empty.complog"};
  return names;
}

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline bool coin(Rng& rng, double p) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

inline std::string atom_name(int i) { return "a" + std::to_string(i); }

/// Declarative program over up to `max_nodes` atoms with whole-bit costs in
/// 0..8. Every atom is mentioned by at least one statement.
inline Program random_mental_program(Rng& rng, int max_nodes = 10,
                                     bool acyclic = false) {
  const int n = uniform(rng, 1, max_nodes);
  Program p;
  std::vector<bool> mentioned(n, false);
  for (int i = 0; i < n; ++i) {
    if (coin(rng, 0.45)) {
      p.add(ConditionFact{{atom_name(i)}, Bits::whole(uniform(rng, 0, 8))});
      mentioned[i] = true;
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j || (acyclic && j < i)) continue;
      if (coin(rng, 2.0 / n)) {
        p.add(DeclRule{{atom_name(i)}, {atom_name(j)}, Bits::whole(uniform(rng, 0, 8))});
        mentioned[i] = mentioned[j] = true;
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    if (!mentioned[i]) p.add(ConditionFact{{atom_name(i)}, Bits::whole(uniform(rng, 0, 8))});
  }
  return p;
}

/// Non-empty subset of the atoms a0..a(n-1) that `p` mentions.
inline GoalSet random_condition_goals(Rng& rng, int atoms, int max_size = 4) {
  GoalSet g;
  const int k = uniform(rng, 1, std::min(max_size, atoms));
  while (static_cast<int>(g.conditions.size()) < k) {
    g.conditions.insert({atom_name(uniform(rng, 0, atoms - 1))});
  }
  return g;
}

inline int atom_count(const Program& p) {
  int n = 0;
  auto bump = [&](const Atom& a) { n = std::max(n, std::stoi(a.name.substr(1)) + 1); };
  for (const Statement& s : p.statements) {
    if (const auto* f = std::get_if<ConditionFact>(&s)) bump(f->cond);
    if (const auto* r = std::get_if<DeclRule>(&s)) {
      bump(r->body);
      bump(r->head);
    }
  }
  return n;
}

inline EventRef random_event(Rng& rng, int conds) {
  const int k = uniform(rng, 0, 9);
  const std::string base = atom_name(uniform(rng, 0, conds - 1));
  if (k < 6) return initiate(base);
  if (k < 8) return terminate(base);
  return named("e" + base.substr(1));
}

/// Active program with at most five rules plus a few spontaneous events
/// over three conditions.
inline Program random_world_program(Rng& rng) {
  const int conds = 3;
  Program p;
  const int facts = uniform(rng, 2, 4);
  for (int i = 0; i < facts; ++i) {
    EventFact f{initiate(atom_name(uniform(rng, 0, conds - 1))),
                Bits::whole(uniform(rng, 0, 8))};
    if (coin(rng, 0.25)) f.event = named("e" + std::to_string(uniform(rng, 0, conds - 1)));
    p.add(f);
  }
  const int rules = uniform(rng, 0, 5);
  for (int i = 0; i < rules; ++i) {
    ActiveRule r;
    if (coin(rng, 0.7)) r.trigger = random_event(rng, conds);
    if (coin(rng, 0.4) || !r.trigger) r.context.insert({atom_name(uniform(rng, 0, conds - 1))});
    const int effects = uniform(rng, 1, 2);
    for (int e = 0; e < effects; ++e) r.effects.push_back(random_event(rng, conds));
    r.weight = Bits::whole(uniform(rng, 0, 8));
    p.add(r);
  }
  if (coin(rng, 0.2)) p.add(Given{{atom_name(uniform(rng, 0, conds - 1))}});
  return p;
}

/// One or two goals, mostly events the base mentions so that a good share
/// of queries is satisfiable.
inline GoalSet random_world_goals(Rng& rng, const std::set<EventRef>& known = {}) {
  GoalSet g;
  const int k = uniform(rng, 1, 2);
  for (int i = 0; i < k; ++i) {
    if (!known.empty() && coin(rng, 0.7)) {
      auto it = known.begin();
      std::advance(it, uniform(rng, 0, static_cast<int>(known.size()) - 1));
      g.events.insert(*it);
    } else if (coin(rng, 0.6)) {
      g.events.insert(random_event(rng, 3));
    } else {
      g.conditions.insert({atom_name(uniform(rng, 0, 2))});
    }
  }
  return g;
}

inline Bits random_weight(Rng& rng) {
  switch (uniform(rng, 0, 3)) {
    case 0: return Bits::whole(0);
    case 1: return Bits::whole(uniform(rng, 1, 20));
    case 2: return Bits::from_micro(uniform(rng, 1, 99) * 10'000);
    default: return Bits::from_micro(static_cast<std::int64_t>(uniform(rng, 1, 5'000'000)));
  }
}

/// Any valid program: all statement kinds, fractional weights, multi-effect
/// rules. Duplicates are avoided by construction (distinct rendered text).
inline Program random_fuzz_program(Rng& rng) {
  static const char* kNames[] = {"x", "y", "z", "bird", "dog", "die_1", "light",
                                 "push", "aB9", "q"};
  auto atom = [&] { return Atom{kNames[uniform(rng, 0, 9)]}; };
  auto event = [&]() -> EventRef {
    const Atom a = atom();
    switch (uniform(rng, 0, 2)) {
      case 0: return initiate(a.name);
      case 1: return terminate(a.name);
      default: return named(a.name);
    }
  };
  Program p;
  std::vector<std::string> seen;
  const int n = uniform(rng, 0, 14);
  for (int i = 0; i < n; ++i) {
    Statement s;
    switch (uniform(rng, 0, 5)) {
      case 0: s = ConditionFact{atom(), random_weight(rng)}; break;
      case 1: s = EventFact{event(), random_weight(rng)}; break;
      case 2: {
        const Atom body = atom();
        Atom head = atom();
        if (head == body) head.name += "_h";  // self-loops are rejected
        s = DeclRule{body, head, random_weight(rng)};
        break;
      }
      case 3: {
        ActiveRule r;
        if (coin(rng, 0.6)) r.trigger = event();
        const int ctx = uniform(rng, 0, 2);
        for (int c = 0; c < ctx; ++c) r.context.insert(atom());
        const int eff = uniform(rng, 1, 3);
        for (int e = 0; e < eff; ++e) r.effects.push_back(event());
        r.weight = random_weight(rng);
        s = r;
        break;
      }
      case 4: s = Given{atom()}; break;
      default: s = GivenEvent{event()}; break;
    }
    const std::string text = render_statement(s);
    if (std::find(seen.begin(), seen.end(), text) != seen.end()) continue;
    seen.push_back(text);
    p.add(s);
  }
  return p;
}

}  // namespace complog::testing

#endif  // COMPLOG_TESTS_SUPPORT_HPP

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

#ifndef COMPLOG_SYNTAX_HPP
#define COMPLOG_SYNTAX_HPP

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "complog/bits.hpp"
#include "complog/error.hpp"

namespace complog {

/// A propositional name: a condition, or the base of an event family.
struct Atom {
  std::string name;

  auto operator<=>(const Atom&) const = default;
};

/// Whether `s` is a valid atom name: a letter, then letters/digits/'_'.
bool is_identifier(std::string_view s);

enum class EventKind { named, initiate, terminate };

/// `#base`, `+base` or `-base`. Ordered like its rendered label.
struct EventRef {
  EventKind kind = EventKind::named;
  Atom base;

  std::string label() const;
  auto operator<=>(const EventRef&) const = default;
};

EventRef named(std::string base);
EventRef initiate(std::string base);
EventRef terminate(std::string base);

// ---- statements -----------------------------------------------------------

/// `w :: x.`
struct ConditionFact {
  Atom cond;
  Bits weight;
  bool operator==(const ConditionFact&) const = default;
};

/// `w :: #x.`, `w :: +x.`, `w :: -x.`
struct EventFact {
  EventRef event;
  Bits weight;
  bool operator==(const EventFact&) const = default;
};

/// `w :: body -> head.`
struct DeclRule {
  Atom body;
  Atom head;
  Bits weight;
  bool operator==(const DeclRule&) const = default;
};

/// `w :: [trigger] [: ctx, ...] => effect, ....`
struct ActiveRule {
  std::optional<EventRef> trigger;
  std::set<Atom> context;
  std::vector<EventRef> effects;
  Bits weight;
  bool operator==(const ActiveRule&) const = default;
};

/// `given: x.` A condition available at no cost.
struct Given {
  Atom cond;
  bool operator==(const Given&) const = default;
};

/// `given: +x.` An event token available at no cost.
struct GivenEvent {
  EventRef event;
  bool operator==(const GivenEvent&) const = default;
};

using Statement = std::variant<ConditionFact, EventFact, DeclRule, ActiveRule,
                               Given, GivenEvent>;

/// True for statements belonging to the mental (declarative) model.
bool is_declarative(const Statement& s);

struct SourceSpan {
  int line = 0;
  int column = 0;
};

struct Program {
  std::vector<Statement> statements;
  /// Parallel to `statements`; zeroed for synthesized statements.
  std::vector<SourceSpan> spans;

  void add(Statement s, SourceSpan span = {});
  std::size_t size() const { return statements.size(); }
  bool empty() const { return statements.empty(); }
};

/// Structural equality: same statements in the same order; spans ignored.
bool operator==(const Program& a, const Program& b);

struct GoalSet {
  std::set<Atom> conditions;
  std::set<EventRef> events;

  bool empty() const { return conditions.empty() && events.empty(); }
  std::size_t size() const { return conditions.size() + events.size(); }
  bool operator==(const GoalSet&) const = default;
};

// ---- operations -----------------------------------------------------------

/// Parses a whole program. Throws ParseError; never returns a partial program.
Program parse_program(std::string_view text);

/// Parses `a, +b` with optional `<...>` or `⟨...⟩` delimiters.
GoalSet parse_goal(std::string_view text);

std::string render_statement(const Statement& s);

/// Canonical text, one statement per line. Zero weights are omitted.
std::string render_program(const Program& p);

/// `<a, b, +c>`; conditions first, each group sorted.
std::string render_goal(const GoalSet& g);

}  // namespace complog

#endif  // COMPLOG_SYNTAX_HPP

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

#ifndef COMPLOG_MODELS_HPP
#define COMPLOG_MODELS_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "complog/bits.hpp"
#include "complog/syntax.hpp"

namespace complog {

/// Raised when a program is handed to a model builder it does not fit.
class ModelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SplitProgram {
  Program declarative;  // condition facts, declarative rules, given conditions
  Program active;       // event facts, active rules, given events
};

SplitProgram split(const Program& p);

/// Concatenation, `a` first. split(merge(d, a)) recovers (d, a).
Program merge(const Program& a, const Program& b);

enum class AugmentMode { race, catalyst };

const char* to_string(AugmentMode m);

/// Reads a declarative program as an active one.
///
///   w :: x.       ->  w :: +x.
///   w :: x -> y.  ->  w :: +x => +y.     (race)
///                     w :: : x => +y.    (catalyst)
///   given: x.     ->  given: +x.
///
/// Throws ModelError if `declarative` holds an active statement.
Program augment(const Program& declarative, AugmentMode mode);

// ---- mental model ---------------------------------------------------------

/// Weighted digraph over conditions plus a virtual START node (index 0).
/// Condition nodes are indexed in name order; parallel edges keep the
/// cheapest cost.
class MentalGraph {
 public:
  static constexpr std::size_t kStart = 0;
  static constexpr const char* kStartName = "START";

  struct Edge {
    std::size_t src;
    std::size_t dst;
    Bits cost;
    bool operator==(const Edge&) const = default;
  };

  MentalGraph() : names_{kStartName}, out_(1), in_(1) {}

  /// Builds from named edges; an empty `src` name denotes START.
  static MentalGraph from_edges(
      const std::set<std::string>& atoms,
      const std::map<std::pair<std::string, std::string>, Bits>& edges);

  std::size_t node_count() const { return names_.size(); }
  const std::string& name(std::size_t v) const { return names_[v]; }
  std::optional<std::size_t> find(const Atom& a) const;

  /// All edges ordered by (src, dst).
  const std::vector<Edge>& edges() const { return edges_; }
  /// Indices into edges(), ordered by dst.
  const std::vector<std::size_t>& out_edges(std::size_t v) const { return out_[v]; }
  /// Indices into edges(), ordered by src.
  const std::vector<std::size_t>& in_edges(std::size_t v) const { return in_[v]; }
  std::optional<Bits> edge_cost(std::size_t src, std::size_t dst) const;

  /// Copy with `a` and its incident edges removed.
  MentalGraph without(const Atom& a) const;

  bool operator==(const MentalGraph& o) const {
    return names_ == o.names_ && edges_ == o.edges_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
};

/// Throws ModelError on active statements.
MentalGraph build_mental_graph(const Program& declarative);

// ---- world model ----------------------------------------------------------

struct SpontaneousEvent {
  EventRef event;
  Bits cost;
  bool operator==(const SpontaneousEvent&) const = default;
};

struct WorldRule {
  std::size_t id = 0;
  std::optional<EventRef> trigger;
  std::vector<Atom> context;  // sorted
  std::vector<EventRef> effects;
  Bits cost;
  /// Firings allowed per execution; 0 means unlimited. Trigger-less rules are
  /// capped, triggered rules are bounded by their tokens instead.
  int fire_cap = 0;

  /// Rule text without weight, e.g. "+x => +y, -x".
  std::string label() const;
  bool operator==(const WorldRule&) const = default;
};

struct WorldRuleBase {
  static constexpr int kDefaultDepth = 10;

  /// One entry per event, at its cheapest cost, ordered by event.
  std::vector<SpontaneousEvent> spontaneous;
  /// In program order; `rules[i].id == i`.
  std::vector<WorldRule> rules;
  int depth_bound = kDefaultDepth;

  bool empty() const { return spontaneous.empty() && rules.empty(); }
  /// Every event produced, triggering or appearing anywhere in the base.
  std::set<EventRef> events() const;
  /// Events some firing can produce.
  std::set<EventRef> producible_events() const;
  std::set<Atom> conditions() const;
};

/// Throws ModelError on declarative statements or depth_bound < 1.
/// `trigger_less_cap` (>= 1) bounds how often a trigger-less rule may fire.
WorldRuleBase build_world_base(const Program& active,
                               int depth_bound = WorldRuleBase::kDefaultDepth,
                               int trigger_less_cap = 1);

/// A point in an execution of the world model.
struct WorldState {
  std::set<Atom> held;
  std::map<EventRef, int> tokens;    // produced, not yet consumed as trigger
  std::map<EventRef, int> occurred;  // never decremented
  std::map<std::size_t, int> fired;  // firings of capped rules
  int step = 0;
  Bits cost;

  /// Records an occurrence of `e` and applies its effect on `held`.
  void produce(const EventRef& e);

  bool operator==(const WorldState&) const = default;
};

/// Initial resources: `given:` conditions are held, `given:` events are
/// available tokens. Reads both halves of a program.
WorldState initial_state(const Program& program);

}  // namespace complog

#endif  // COMPLOG_MODELS_HPP

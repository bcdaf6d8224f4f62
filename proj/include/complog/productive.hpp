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

#ifndef COMPLOG_PRODUCTIVE_HPP
#define COMPLOG_PRODUCTIVE_HPP

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "complog/bits.hpp"
#include "complog/models.hpp"
#include "complog/syntax.hpp"

namespace complog {

/// One firing: a spontaneous event or an active rule.
struct Firing {
  enum class Kind { spontaneous, rule };
  Kind kind = Kind::spontaneous;
  EventRef event;           // spontaneous only
  std::size_t rule_id = 0;  // rule only
  std::string label;        // "=> +x" or the rule text

  bool operator==(const Firing&) const = default;
};

struct FiringStep {
  Firing what;
  Bits cost;
  /// FNV-1a digest of the state after the firing (held, tokens, caps).
  std::uint64_t state_digest = 0;

  bool operator==(const FiringStep&) const = default;
};

struct ExecutionWitness {
  std::vector<FiringStep> steps;
  Bits total;

  bool operator==(const ExecutionWitness&) const = default;
};

struct CwResult {
  Cost cost;
  ExecutionWitness witness;
  int depth_bound = 0;
  /// No execution of any length can satisfy the goals.
  bool structurally_unreachable = false;
  /// The search was cut by the depth bound; a longer execution may exist.
  bool depth_exhausted = false;
  /// Goals that no firing can ever produce (subset of the query).
  std::vector<std::string> unproducible;
  std::size_t states_expanded = 0;
};

/// Causal complexity: cheapest interleaved execution (one firing per step,
/// at most `base.depth_bound` steps) after which every goal event has
/// occurred and every goal condition holds.
///
/// A rule consumes one token of its trigger; context conditions are only
/// read. Unreachable goals yield an infinite cost, never an exception.
CwResult cw(const WorldRuleBase& base, const WorldState& initial,
            const GoalSet& goals);

struct Alternative {
  EventRef event;
  Cost cost;
  bool operator==(const Alternative&) const = default;
};

/// Single-goal cw of every candidate not in `excluded`, computed on the base
/// with the excluded events removed. Sorted by cost, then event.
std::vector<Alternative> enumerate_min_alternatives(
    const WorldRuleBase& base, const WorldState& initial,
    const std::set<EventRef>& candidates, const std::set<EventRef>& excluded);

/// Copy of `base` in which `e` can no longer occur: spontaneous entries for
/// `e` and rules producing or triggered by `e` are dropped. Rule ids are
/// renumbered.
WorldRuleBase without_event(const WorldRuleBase& base, const EventRef& e);

/// Copy of `s` with every token and occurrence of `e` removed.
WorldState without_event(const WorldState& s, const EventRef& e);

/// Numbered firing trace, one step per line.
std::string render_trace(const ExecutionWitness& w);

}  // namespace complog

#endif  // COMPLOG_PRODUCTIVE_HPP

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

#ifndef COMPLOG_INFERENCE_HPP
#define COMPLOG_INFERENCE_HPP

#include <limits>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "complog/bits.hpp"
#include "complog/epistemic.hpp"
#include "complog/models.hpp"
#include "complog/productive.hpp"
#include "complog/syntax.hpp"

namespace complog {

struct QueryOptions {
  AugmentMode augment_mode = AugmentMode::race;
  int depth_bound = WorldRuleBase::kDefaultDepth;
  int trigger_less_cap = 1;
  Kernel kernel = Kernel::parallel;
};

/// Both machines built from one program. A purely declarative program is
/// augmented to obtain its world model; otherwise the active part is used
/// as written.
struct Models {
  MentalGraph mental;
  WorldRuleBase world;
  WorldState initial;
  bool augmented = false;
};

Models build_models(const Program& program, const QueryOptions& options = {});

/// Event standing for condition `x` on the productive side: `+x` when the
/// world model was augmented or mentions `+x`, else `#x` if mentioned, else
/// `+x`.
EventRef productive_counterpart(const Models& m, const Atom& x);

/// Goal routing: conditions stay on the mental side, events are described
/// by the condition they name. Throws QueryError for termination events.
GoalSet epistemic_goals(const GoalSet& g);
GoalSet productive_goals(const Models& m, const GoalSet& g);

/// A complexity difference: finite, +infinity (world side unattainable), or
/// undefined (description side unattainable).
struct SignedBits {
  enum class State { finite, plus_infinite, undefined };
  State state = State::undefined;
  Bits value;

  static SignedBits of(Bits b) { return {State::finite, b}; }
  bool finite() const { return state == State::finite; }
  std::string str() const;
  bool operator==(const SignedBits&) const = default;
};

/// max(u, 0); infinite and undefined values pass through.
SignedBits clamp_nonnegative(const SignedBits& u);

struct UnexpectednessReport {
  GoalSet goals;
  GoalSet epistemic_query;
  GoalSet productive_query;
  Cost cw;
  Cost cd;
  SignedBits u;
  SignedBits u_clamped;
  /// u + cd; equals cw whenever both sides are finite.
  Cost ex_ante;
  CdResult description;
  CwResult execution;
  bool augmented = false;
};

UnexpectednessReport unexpectedness(const Program& program, const GoalSet& goals,
                                    const QueryOptions& options = {});

struct DescriptionCandidate {
  Atom atom;
  Bits cd;
  Bits u;
  bool admissible = false;
  int hops = 0;
  bool operator==(const DescriptionCandidate&) const = default;
};

struct DescriptionVerdict {
  EventRef observed;
  Bits observed_cw;
  Atom chosen;
  std::vector<DescriptionCandidate> candidates;
};

/// Picks the condition that best describes an observed event.
///
/// Candidates are the conditions derivable from the event's namesake. Each
/// gets u = cw(observed) - cd(candidate). Among candidates with u >= 0 the
/// smallest u wins; if there are none, the largest u. Ties go to fewer rule
/// hops, then to the name.
DescriptionVerdict describe(const Program& program, const EventRef& observed,
                            const QueryOptions& options = {});

struct NegationThresholds {
  double high = 1.0;
  double low = 1.0;

  static NegationThresholds exhaustive() {
    return {std::numeric_limits<double>::infinity(),
            std::numeric_limits<double>::infinity()};
  }
};

struct NegationReport {
  enum class StopReason { high_alternative, low_aggregate, exhausted };

  struct Alternative {
    std::string node;
    Bits cost;
    bool operator==(const Alternative&) const = default;
  };

  Machine machine = Machine::epistemic;
  std::string target;
  Bits target_cost;
  std::vector<std::string> candidates;
  std::vector<Alternative> examined;
  /// -log2(sum of 2^-cost over examined); +inf when nothing was examined.
  double aggregated = std::numeric_limits<double>::infinity();
  StopReason stop_reason = StopReason::exhausted;
};

const char* to_string(NegationReport::StopReason r);

/// -log2(sum_i 2^-c_i), computed around the minimum for stability.
/// Empty input gives +inf.
double aggregate_complexities(const std::vector<double>& costs);

/// Proxy complexity for "not `target`": remove the target, then repeatedly
/// take the cheapest remaining alternative, remove it and fold its cost
/// into the aggregate. Stops once an alternative is `thresholds.high` bits
/// above the target, once the aggregate is `thresholds.low` bits below it,
/// or when candidates run out.
///
/// `target` and `candidates` use goal syntax (`die1`, `+die1`, `#dog`).
/// Default candidates are the target's race siblings (nodes fed by one of
/// its sources), falling back to every other node.
NegationReport negate(const Program& program, const std::string& target,
                      Machine machine,
                      const std::optional<std::set<std::string>>& candidates = {},
                      NegationThresholds thresholds = {},
                      const QueryOptions& options = {});

}  // namespace complog

#endif  // COMPLOG_INFERENCE_HPP

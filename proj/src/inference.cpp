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

#include <algorithm>
#include <cmath>
#include <tuple>

#include "complog/error.hpp"

namespace complog {

Models build_models(const Program& program, const QueryOptions& options) {
  SplitProgram parts = split(program);
  Models m;
  m.mental = build_mental_graph(parts.declarative);
  if (parts.active.empty() && !parts.declarative.empty()) {
    parts.active = augment(parts.declarative, options.augment_mode);
    m.augmented = true;
  }
  m.world = build_world_base(parts.active, options.depth_bound,
                             options.trigger_less_cap);
  m.initial = initial_state(merge(parts.declarative, parts.active));
  return m;
}

EventRef productive_counterpart(const Models& m, const Atom& x) {
  const EventRef plus = initiate(x.name);
  if (m.augmented) return plus;
  const std::set<EventRef> known = m.world.events();
  if (known.count(plus)) return plus;
  const EventRef hash = named(x.name);
  if (known.count(hash)) return hash;
  return plus;
}

GoalSet epistemic_goals(const GoalSet& g) {
  GoalSet out;
  out.conditions = g.conditions;
  for (const EventRef& e : g.events) {
    if (e.kind == EventKind::terminate) {
      throw QueryError(QueryError::Code::invalid_argument, Machine::epistemic,
                       "termination event '" + e.label() +
                           "' has no condition to describe",
                       {e.label()});
    }
    out.conditions.insert(e.base);
  }
  return out;
}

GoalSet productive_goals(const Models& m, const GoalSet& g) {
  GoalSet out;
  out.events = g.events;
  for (const Atom& a : g.conditions) out.events.insert(productive_counterpart(m, a));
  return out;
}

std::string SignedBits::str() const {
  switch (state) {
    case State::finite: return value.str();
    case State::plus_infinite: return "inf";
    case State::undefined: return "undefined";
  }
  return "undefined";
}

SignedBits clamp_nonnegative(const SignedBits& u) {
  if (!u.finite()) return u;
  return SignedBits::of(std::max(u.value, Bits{}));
}

UnexpectednessReport unexpectedness(const Program& program, const GoalSet& goals,
                                    const QueryOptions& options) {
  const Models m = build_models(program, options);
  UnexpectednessReport r;
  r.goals = goals;
  r.augmented = m.augmented;
  r.epistemic_query = epistemic_goals(goals);
  r.productive_query = productive_goals(m, goals);
  r.description = cd(m.mental, r.epistemic_query, options.kernel);
  r.execution = complog::cw(m.world, m.initial, r.productive_query);
  r.cd = r.description.cost;
  r.cw = r.execution.cost;
  if (r.cd.is_infinite()) {
    r.u = {SignedBits::State::undefined, Bits{}};
  } else if (r.cw.is_infinite()) {
    r.u = {SignedBits::State::plus_infinite, Bits{}};
  } else {
    r.u = SignedBits::of(r.cw.bits() - r.cd.bits());
  }
  r.u_clamped = clamp_nonnegative(r.u);
  r.ex_ante = r.u.finite() ? Cost(r.u.value + r.cd.bits()) : Cost::infinite();
  return r;
}

DescriptionVerdict describe(const Program& program, const EventRef& observed,
                            const QueryOptions& options) {
  const Models m = build_models(program, options);
  if (!m.world.events().count(observed)) {
    throw QueryError(QueryError::Code::unknown_event, Machine::productive,
                     "unknown event '" + observed.label() + "'", {observed.label()});
  }
  GoalSet g;
  g.events.insert(observed);
  const CwResult world = complog::cw(m.world, m.initial, g);
  if (world.cost.is_infinite()) {
    throw QueryError(QueryError::Code::invalid_argument, Machine::productive,
                     "event '" + observed.label() + "' cannot occur",
                     {observed.label()});
  }
  if (!m.mental.find(observed.base)) {
    throw QueryError(QueryError::Code::no_candidates, Machine::epistemic,
                     "no condition '" + observed.base.name + "' to describe '" +
                         observed.label() + "'",
                     {observed.base.name});
  }

  DescriptionVerdict v;
  v.observed = observed;
  v.observed_cw = world.cost.bits();
  for (const Descriptor& d : reachable_descriptors(m.mental, observed.base)) {
    GoalSet one;
    one.conditions.insert(d.atom);
    const Cost c = cd(m.mental, one, options.kernel).cost;
    if (c.is_infinite()) continue;  // cannot be described at all
    const Bits u = v.observed_cw - c.bits();
    v.candidates.push_back({d.atom, c.bits(), u, u >= Bits{}, d.hops});
  }
  if (v.candidates.empty()) {
    throw QueryError(QueryError::Code::no_candidates, Machine::epistemic,
                     "no describable condition for '" + observed.label() + "'",
                     {observed.label()});
  }
  const bool any_admissible =
      std::any_of(v.candidates.begin(), v.candidates.end(),
                  [](const DescriptionCandidate& c) { return c.admissible; });
  auto key = [any_admissible](const DescriptionCandidate& c) {
    // Admissible: minimise u. Otherwise: maximise u.
    const Bits score = any_admissible ? c.u : -c.u;
    return std::make_tuple(any_admissible && !c.admissible, score, c.hops, c.atom);
  };
  const auto best = std::min_element(
      v.candidates.begin(), v.candidates.end(),
      [&](const DescriptionCandidate& a, const DescriptionCandidate& b) {
        return key(a) < key(b);
      });
  v.chosen = best->atom;
  return v;
}

const char* to_string(NegationReport::StopReason r) {
  switch (r) {
    case NegationReport::StopReason::high_alternative: return "high_alternative";
    case NegationReport::StopReason::low_aggregate: return "low_aggregate";
    case NegationReport::StopReason::exhausted: return "exhausted";
  }
  return "?";
}

double aggregate_complexities(const std::vector<double>& costs) {
  if (costs.empty()) return std::numeric_limits<double>::infinity();
  const double lo = *std::min_element(costs.begin(), costs.end());
  if (std::isinf(lo)) return lo;
  double sum = 0.0;
  for (double c : costs) sum += std::exp2(lo - c);
  return lo - std::log2(sum);
}

namespace {

// A goal-syntax node name resolved against one machine.
struct Node {
  GoalSet goal;
  std::string label;
};

Node resolve(const Models& m, const std::string& text, Machine machine) {
  const GoalSet g = parse_goal(text);
  if (g.size() != 1) {
    throw QueryError(QueryError::Code::invalid_argument, machine,
                     "expected a single node, got '" + text + "'", {text});
  }
  Node n;
  if (machine == Machine::epistemic) {
    n.goal = epistemic_goals(g);
    n.label = n.goal.conditions.begin()->name;
  } else {
    n.goal = productive_goals(m, g);
    n.label = n.goal.events.begin()->label();
  }
  return n;
}

class NegationModel {
 public:
  NegationModel(const Models& m, Machine machine)
      : machine_(machine), mental_(m.mental), world_(m.world), initial_(m.initial),
        kernel_(Kernel::serial) {}

  Cost cost(const GoalSet& g) const {
    if (machine_ == Machine::epistemic) {
      for (const Atom& a : g.conditions) {
        if (!mental_.find(a)) return Cost::infinite();  // removed earlier
      }
      return cd(mental_, g, kernel_).cost;
    }
    return complog::cw(world_, initial_, g).cost;
  }

  void remove(const GoalSet& g) {
    if (machine_ == Machine::epistemic) {
      for (const Atom& a : g.conditions) {
        if (mental_.find(a)) mental_ = mental_.without(a);
      }
    } else {
      for (const EventRef& e : g.events) {
        world_ = without_event(world_, e);
        initial_ = without_event(initial_, e);
      }
    }
  }

 private:
  Machine machine_;
  MentalGraph mental_;
  WorldRuleBase world_;
  WorldState initial_;
  Kernel kernel_;
};

std::set<std::string> race_siblings(const Models& m, const Node& target,
                                    Machine machine) {
  std::set<std::string> out;
  if (machine == Machine::epistemic) {
    const MentalGraph& g = m.mental;
    const std::size_t t = *g.find(*target.goal.conditions.begin());
    for (std::size_t ei : g.in_edges(t)) {
      for (std::size_t ej : g.out_edges(g.edges()[ei].src)) {
        const std::size_t s = g.edges()[ej].dst;
        if (s != t) out.insert(g.name(s));
      }
    }
    if (out.empty()) {
      for (std::size_t v = 1; v < g.node_count(); ++v) {
        if (v != t) out.insert(g.name(v));
      }
    }
    return out;
  }
  const EventRef e = *target.goal.events.begin();
  bool spontaneous = false;
  for (const auto& s : m.world.spontaneous) spontaneous = spontaneous || s.event == e;
  std::set<std::optional<EventRef>> triggers;
  for (const WorldRule& r : m.world.rules) {
    if (std::find(r.effects.begin(), r.effects.end(), e) != r.effects.end() &&
        r.trigger) {
      triggers.insert(r.trigger);
    }
  }
  if (spontaneous) {
    for (const auto& s : m.world.spontaneous) out.insert(s.event.label());
  }
  for (const WorldRule& r : m.world.rules) {
    if (r.trigger && triggers.count(r.trigger)) {
      for (const EventRef& x : r.effects) out.insert(x.label());
    }
  }
  out.erase(e.label());
  if (out.empty()) {
    for (const EventRef& x : m.world.producible_events()) {
      if (!(x == e)) out.insert(x.label());
    }
  }
  return out;
}

}  // namespace

NegationReport negate(const Program& program, const std::string& target,
                      Machine machine,
                      const std::optional<std::set<std::string>>& candidates,
                      NegationThresholds thresholds, const QueryOptions& options) {
  const Models m = build_models(program, options);
  const Node t = resolve(m, target, machine);
  NegationModel model(m, machine);

  NegationReport r;
  r.machine = machine;
  r.target = t.label;
  if (machine == Machine::epistemic && !m.mental.find(*t.goal.conditions.begin())) {
    throw QueryError(QueryError::Code::unknown_atom, machine,
                     "unknown condition '" + t.label + "'", {t.label});
  }
  const Cost c0 = model.cost(t.goal);
  if (c0.is_infinite()) {
    throw QueryError(QueryError::Code::invalid_argument, machine,
                     "target '" + t.label + "' has no finite complexity", {t.label});
  }
  r.target_cost = c0.bits();

  std::vector<Node> pool;
  {
    std::set<std::string> names = candidates ? *candidates : race_siblings(m, t, machine);
    std::set<std::string> labels;
    for (const std::string& n : names) {
      Node node = resolve(m, n, machine);
      if (node.label == t.label || !labels.insert(node.label).second) continue;
      pool.push_back(std::move(node));
    }
  }
  for (const Node& n : pool) r.candidates.push_back(n.label);

  model.remove(t.goal);
  std::vector<double> costs;
  while (!pool.empty()) {
    std::size_t best = 0;
    Cost best_cost = Cost::infinite();
    for (std::size_t i = 0; i < pool.size(); ++i) {
      const Cost c = model.cost(pool[i].goal);
      if (c < best_cost || (c == best_cost && c.finite() &&
                            pool[i].label < pool[best].label)) {
        best = i;
        best_cost = c;
      }
    }
    if (best_cost.is_infinite()) break;
    r.examined.push_back({pool[best].label, best_cost.bits()});
    costs.push_back(best_cost.to_double());
    model.remove(pool[best].goal);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(best));
    r.aggregated = aggregate_complexities(costs);

    const double c0d = c0.to_double();
    if (best_cost.to_double() - c0d >= thresholds.high) {
      r.stop_reason = NegationReport::StopReason::high_alternative;
      return r;
    }
    if (c0d - r.aggregated >= thresholds.low) {
      r.stop_reason = NegationReport::StopReason::low_aggregate;
      return r;
    }
  }
  r.stop_reason = NegationReport::StopReason::exhausted;
  return r;
}

}  // namespace complog

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

#include "complog/models.hpp"

#include <algorithm>

namespace complog {

SplitProgram split(const Program& p) {
  SplitProgram out;
  for (std::size_t i = 0; i < p.statements.size(); ++i) {
    const SourceSpan span = i < p.spans.size() ? p.spans[i] : SourceSpan{};
    Program& dst = is_declarative(p.statements[i]) ? out.declarative : out.active;
    dst.add(p.statements[i], span);
  }
  return out;
}

Program merge(const Program& a, const Program& b) {
  Program out = a;
  out.spans.resize(out.statements.size());
  for (std::size_t i = 0; i < b.statements.size(); ++i) {
    out.add(b.statements[i], i < b.spans.size() ? b.spans[i] : SourceSpan{});
  }
  return out;
}

const char* to_string(AugmentMode m) {
  return m == AugmentMode::race ? "race" : "catalyst";
}

Program augment(const Program& declarative, AugmentMode mode) {
  Program out;
  for (std::size_t i = 0; i < declarative.statements.size(); ++i) {
    const Statement& s = declarative.statements[i];
    const SourceSpan span =
        i < declarative.spans.size() ? declarative.spans[i] : SourceSpan{};
    if (const auto* f = std::get_if<ConditionFact>(&s)) {
      out.add(EventFact{initiate(f->cond.name), f->weight}, span);
    } else if (const auto* r = std::get_if<DeclRule>(&s)) {
      ActiveRule a;
      a.weight = r->weight;
      a.effects.push_back(initiate(r->head.name));
      if (mode == AugmentMode::race) {
        a.trigger = initiate(r->body.name);
      } else {
        a.context.insert(r->body);
      }
      out.add(std::move(a), span);
    } else if (const auto* g = std::get_if<Given>(&s)) {
      out.add(GivenEvent{initiate(g->cond.name)}, span);
    } else {
      throw ModelError("augment: active statement '" + render_statement(s) +
                       "' in declarative input");
    }
  }
  return out;
}

// ---- MentalGraph ----------------------------------------------------------

MentalGraph MentalGraph::from_edges(
    const std::set<std::string>& atoms,
    const std::map<std::pair<std::string, std::string>, Bits>& edges) {
  MentalGraph g;
  std::set<std::string> all = atoms;
  for (const auto& [key, cost] : edges) {
    if (!key.first.empty()) all.insert(key.first);
    all.insert(key.second);
  }
  g.names_.insert(g.names_.end(), all.begin(), all.end());
  g.out_.assign(g.names_.size(), {});
  g.in_.assign(g.names_.size(), {});
  auto index_of = [&](const std::string& n) -> std::size_t {
    if (n.empty()) return kStart;
    auto it = std::lower_bound(g.names_.begin() + 1, g.names_.end(), n);
    return static_cast<std::size_t>(it - g.names_.begin());
  };
  for (const auto& [key, cost] : edges) {
    g.edges_.push_back({index_of(key.first), index_of(key.second), cost});
  }
  std::sort(g.edges_.begin(), g.edges_.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.src, a.dst) < std::tie(b.src, b.dst);
  });
  for (std::size_t i = 0; i < g.edges_.size(); ++i) {
    g.out_[g.edges_[i].src].push_back(i);
    g.in_[g.edges_[i].dst].push_back(i);
  }
  // edges_ is sorted by (src, dst): out_ lists come out ordered by dst and
  // in_ lists ordered by src.
  return g;
}

std::optional<std::size_t> MentalGraph::find(const Atom& a) const {
  auto it = std::lower_bound(names_.begin() + 1, names_.end(), a.name);
  if (it == names_.end() || *it != a.name) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::optional<Bits> MentalGraph::edge_cost(std::size_t src, std::size_t dst) const {
  for (std::size_t e : out_[src]) {
    if (edges_[e].dst == dst) return edges_[e].cost;
  }
  return std::nullopt;
}

MentalGraph MentalGraph::without(const Atom& a) const {
  std::set<std::string> atoms;
  for (std::size_t v = 1; v < names_.size(); ++v) {
    if (names_[v] != a.name) atoms.insert(names_[v]);
  }
  std::map<std::pair<std::string, std::string>, Bits> edges;
  for (const Edge& e : edges_) {
    if (names_[e.src] == a.name || names_[e.dst] == a.name) continue;
    edges[{e.src == kStart ? std::string() : names_[e.src], names_[e.dst]}] = e.cost;
  }
  return from_edges(atoms, edges);
}

MentalGraph build_mental_graph(const Program& declarative) {
  std::set<std::string> atoms;
  std::map<std::pair<std::string, std::string>, Bits> edges;
  auto add_edge = [&](std::string src, const std::string& dst, Bits cost) {
    auto [it, fresh] = edges.try_emplace({std::move(src), dst}, cost);
    if (!fresh) it->second = std::min(it->second, cost);
  };
  for (const Statement& s : declarative.statements) {
    if (const auto* f = std::get_if<ConditionFact>(&s)) {
      add_edge("", f->cond.name, f->weight);
    } else if (const auto* r = std::get_if<DeclRule>(&s)) {
      add_edge(r->body.name, r->head.name, r->weight);
    } else if (const auto* g = std::get_if<Given>(&s)) {
      add_edge("", g->cond.name, Bits{});
    } else {
      throw ModelError("mental graph: active statement '" + render_statement(s) +
                       "' in declarative input");
    }
  }
  return MentalGraph::from_edges(atoms, edges);
}

// ---- world model ----------------------------------------------------------

std::string WorldRule::label() const {
  std::string out;
  if (trigger) out += trigger->label() + " ";
  if (!context.empty()) {
    out += ": ";
    for (std::size_t i = 0; i < context.size(); ++i) {
      if (i) out += ", ";
      out += context[i].name;
    }
    out += " ";
  }
  out += "=> ";
  for (std::size_t i = 0; i < effects.size(); ++i) {
    if (i) out += ", ";
    out += effects[i].label();
  }
  return out;
}

std::set<EventRef> WorldRuleBase::events() const {
  std::set<EventRef> out;
  for (const auto& s : spontaneous) out.insert(s.event);
  for (const auto& r : rules) {
    if (r.trigger) out.insert(*r.trigger);
    out.insert(r.effects.begin(), r.effects.end());
  }
  return out;
}

std::set<EventRef> WorldRuleBase::producible_events() const {
  std::set<EventRef> out;
  for (const auto& s : spontaneous) out.insert(s.event);
  for (const auto& r : rules) out.insert(r.effects.begin(), r.effects.end());
  return out;
}

std::set<Atom> WorldRuleBase::conditions() const {
  std::set<Atom> out;
  for (const EventRef& e : events()) {
    if (e.kind != EventKind::named) out.insert(e.base);
  }
  for (const auto& r : rules) out.insert(r.context.begin(), r.context.end());
  return out;
}

WorldRuleBase build_world_base(const Program& active, int depth_bound,
                               int trigger_less_cap) {
  if (depth_bound < 1) throw ModelError("depth bound must be at least 1");
  if (trigger_less_cap < 1) throw ModelError("trigger-less cap must be at least 1");
  WorldRuleBase base;
  base.depth_bound = depth_bound;
  std::map<EventRef, Bits> spontaneous;
  auto add_spontaneous = [&](const EventRef& e, Bits cost) {
    auto [it, fresh] = spontaneous.try_emplace(e, cost);
    if (!fresh) it->second = std::min(it->second, cost);
  };
  for (const Statement& s : active.statements) {
    if (const auto* f = std::get_if<EventFact>(&s)) {
      add_spontaneous(f->event, f->weight);
    } else if (const auto* r = std::get_if<ActiveRule>(&s)) {
      if (!r->trigger && r->context.empty() && r->effects.size() == 1) {
        add_spontaneous(r->effects.front(), r->weight);
        continue;
      }
      WorldRule w;
      w.id = base.rules.size();
      w.trigger = r->trigger;
      w.context.assign(r->context.begin(), r->context.end());
      w.effects = r->effects;
      w.cost = r->weight;
      w.fire_cap = r->trigger ? 0 : trigger_less_cap;
      base.rules.push_back(std::move(w));
    } else if (std::holds_alternative<GivenEvent>(s)) {
      // Initial resource; see initial_state().
    } else {
      throw ModelError("world base: declarative statement '" +
                       render_statement(s) + "' in active input");
    }
  }
  for (const auto& [e, c] : spontaneous) base.spontaneous.push_back({e, c});
  return base;
}

void WorldState::produce(const EventRef& e) {
  ++tokens[e];
  ++occurred[e];
  if (e.kind == EventKind::initiate) held.insert(e.base);
  if (e.kind == EventKind::terminate) held.erase(e.base);
}

WorldState initial_state(const Program& program) {
  WorldState s;
  for (const Statement& st : program.statements) {
    if (const auto* g = std::get_if<Given>(&st)) s.held.insert(g->cond);
  }
  for (const Statement& st : program.statements) {
    if (const auto* g = std::get_if<GivenEvent>(&st)) s.produce(g->event);
  }
  return s;
}

}  // namespace complog

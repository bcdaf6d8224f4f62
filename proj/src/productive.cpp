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

#include <algorithm>
#include <cstring>
#include <queue>
#include <tuple>
#include <unordered_map>

#include "complog/error.hpp"

namespace complog {
namespace {

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

template <typename T>
int index_in(const std::vector<T>& sorted, const T& x) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
  if (it == sorted.end() || !(*it == x)) return -1;
  return static_cast<int>(it - sorted.begin());
}

struct CompiledFiring {
  Firing firing;
  Bits cost;
  int trigger = -1;
  std::vector<int> context;
  std::vector<int> effects;
  int cap_slot = -1;
  int cap = 0;
  std::uint32_t rank = 0;
};

// A world state packed into one string, which doubles as its hash key:
//   [held: one byte per condition][tokens: uint16 per event]
//   [fired: one byte per capped rule][occurred goal events: uint64 mask]
class Layout {
 public:
  Layout(std::size_t conds, std::size_t events, std::size_t capped)
      : conds_(conds), events_(events), capped_(capped) {}

  std::size_t size() const { return conds_ + 2 * events_ + capped_ + 8; }

  bool held(const std::string& s, int c) const { return s[c] != 0; }
  void set_held(std::string& s, int c, bool v) const { s[c] = v ? 1 : 0; }

  std::uint16_t tokens(const std::string& s, int e) const {
    std::uint16_t v;
    std::memcpy(&v, s.data() + conds_ + 2 * e, 2);
    return v;
  }
  void set_tokens(std::string& s, int e, std::uint16_t v) const {
    std::memcpy(s.data() + conds_ + 2 * e, &v, 2);
  }

  unsigned char fired(const std::string& s, int slot) const {
    return static_cast<unsigned char>(s[conds_ + 2 * events_ + slot]);
  }
  void set_fired(std::string& s, int slot, unsigned char v) const {
    s[conds_ + 2 * events_ + slot] = static_cast<char>(v);
  }

  std::uint64_t mask(const std::string& s) const {
    std::uint64_t m;
    std::memcpy(&m, s.data() + conds_ + 2 * events_ + capped_, 8);
    return m;
  }
  void set_mask(std::string& s, std::uint64_t m) const {
    std::memcpy(s.data() + conds_ + 2 * events_ + capped_, &m, 8);
  }

 private:
  std::size_t conds_;
  std::size_t events_;
  std::size_t capped_;
};

class Search {
 public:
  Search(const WorldRuleBase& base, const WorldState& initial,
         const GoalSet& goals)
      : base_(base), initial_(initial), goals_(goals),
        layout_(0, 0, 0) {
    intern();
    compile();
  }

  CwResult run();

 private:
  struct Node {
    Bits cost;
    int step;
    std::vector<std::uint32_t> ranks;
    std::int64_t parent;
    int firing;
    std::string state;
  };

  void intern();
  void compile();
  std::string initial_packed() const;
  bool enabled(const CompiledFiring& f, const std::string& s) const;
  std::string apply(const CompiledFiring& f, const std::string& s) const;
  void produce(std::string& s, int e) const;
  bool satisfied(const std::string& s) const;
  void relaxed_check(CwResult& out) const;

  const WorldRuleBase& base_;
  const WorldState& initial_;
  const GoalSet& goals_;

  std::vector<EventRef> events_;
  std::vector<Atom> conds_;
  std::vector<int> event_cond_;  // condition touched by event, or -1
  std::vector<int> goal_bit_;    // bit in the occurred mask, or -1
  std::uint64_t goal_mask_ = 0;
  std::vector<int> goal_conds_;
  std::vector<CompiledFiring> firings_;
  Layout layout_;
};

void Search::intern() {
  std::set<EventRef> evs = base_.events();
  for (const auto& [e, n] : initial_.tokens) evs.insert(e);
  for (const auto& [e, n] : initial_.occurred) evs.insert(e);
  evs.insert(goals_.events.begin(), goals_.events.end());
  events_.assign(evs.begin(), evs.end());

  std::set<Atom> cs = base_.conditions();
  cs.insert(initial_.held.begin(), initial_.held.end());
  cs.insert(goals_.conditions.begin(), goals_.conditions.end());
  for (const EventRef& e : events_) {
    if (e.kind != EventKind::named) cs.insert(e.base);
  }
  conds_.assign(cs.begin(), cs.end());

  event_cond_.assign(events_.size(), -1);
  for (std::size_t i = 0; i < events_.size(); ++i) {
    if (events_[i].kind != EventKind::named) {
      event_cond_[i] = index_in(conds_, events_[i].base);
    }
  }
  if (goals_.events.size() > 64) {
    throw QueryError(QueryError::Code::too_many_goals, Machine::productive,
                     "at most 64 goal events per query");
  }
  goal_bit_.assign(events_.size(), -1);
  int bit = 0;
  for (const EventRef& e : goals_.events) {
    goal_bit_[index_in(events_, e)] = bit;
    goal_mask_ |= std::uint64_t{1} << bit;
    ++bit;
  }
  for (const Atom& a : goals_.conditions) goal_conds_.push_back(index_in(conds_, a));
}

void Search::compile() {
  int capped = 0;
  for (const SpontaneousEvent& s : base_.spontaneous) {
    CompiledFiring f;
    f.firing.kind = Firing::Kind::spontaneous;
    f.firing.event = s.event;
    f.firing.label = "=> " + s.event.label();
    f.cost = s.cost;
    f.effects.push_back(index_in(events_, s.event));
    firings_.push_back(std::move(f));
  }
  for (const WorldRule& r : base_.rules) {
    CompiledFiring f;
    f.firing.kind = Firing::Kind::rule;
    f.firing.rule_id = r.id;
    f.firing.label = r.label();
    f.cost = r.cost;
    if (r.trigger) f.trigger = index_in(events_, *r.trigger);
    for (const Atom& a : r.context) f.context.push_back(index_in(conds_, a));
    for (const EventRef& e : r.effects) f.effects.push_back(index_in(events_, e));
    if (r.fire_cap > 0) {
      f.cap_slot = capped++;
      f.cap = std::min(r.fire_cap, 255);
    }
    firings_.push_back(std::move(f));
  }
  // Ranks order firings by label for deterministic tie-breaking.
  std::vector<std::size_t> order(firings_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::tie(firings_[a].firing.label, a) <
           std::tie(firings_[b].firing.label, b);
  });
  for (std::size_t r = 0; r < order.size(); ++r) {
    firings_[order[r]].rank = static_cast<std::uint32_t>(r);
  }
  layout_ = Layout(conds_.size(), events_.size(), static_cast<std::size_t>(capped));
}

std::string Search::initial_packed() const {
  std::string s(layout_.size(), '\0');
  for (const Atom& a : initial_.held) layout_.set_held(s, index_in(conds_, a), true);
  for (const auto& [e, n] : initial_.tokens) {
    layout_.set_tokens(s, index_in(events_, e), static_cast<std::uint16_t>(n));
  }
  std::uint64_t m = 0;
  for (const auto& [e, n] : initial_.occurred) {
    const int b = goal_bit_[index_in(events_, e)];
    if (n > 0 && b >= 0) m |= std::uint64_t{1} << b;
  }
  layout_.set_mask(s, m);
  // `fired` counts from the initial state are carried over for capped rules.
  for (const CompiledFiring& f : firings_) {
    if (f.cap_slot < 0) continue;
    auto it = initial_.fired.find(f.firing.rule_id);
    if (it != initial_.fired.end()) {
      layout_.set_fired(s, f.cap_slot, static_cast<unsigned char>(
                                           std::min(it->second, 255)));
    }
  }
  return s;
}

bool Search::enabled(const CompiledFiring& f, const std::string& s) const {
  if (f.trigger >= 0 && layout_.tokens(s, f.trigger) == 0) return false;
  for (int c : f.context) {
    if (!layout_.held(s, c)) return false;
  }
  if (f.cap_slot >= 0 && layout_.fired(s, f.cap_slot) >= f.cap) return false;
  return true;
}

void Search::produce(std::string& s, int e) const {
  const std::uint16_t t = layout_.tokens(s, e);
  if (t < 0xFFFF) layout_.set_tokens(s, e, static_cast<std::uint16_t>(t + 1));
  if (goal_bit_[e] >= 0) {
    layout_.set_mask(s, layout_.mask(s) | (std::uint64_t{1} << goal_bit_[e]));
  }
  const int c = event_cond_[e];
  if (c >= 0) layout_.set_held(s, c, events_[e].kind == EventKind::initiate);
}

std::string Search::apply(const CompiledFiring& f, const std::string& s) const {
  std::string next = s;
  if (f.trigger >= 0) {
    layout_.set_tokens(next, f.trigger,
                       static_cast<std::uint16_t>(layout_.tokens(next, f.trigger) - 1));
  }
  if (f.cap_slot >= 0) {
    layout_.set_fired(next, f.cap_slot,
                      static_cast<unsigned char>(layout_.fired(next, f.cap_slot) + 1));
  }
  // Left to right: "+x, -x" leaves x not held.
  for (int e : f.effects) produce(next, e);
  return next;
}

bool Search::satisfied(const std::string& s) const {
  if ((layout_.mask(s) & goal_mask_) != goal_mask_) return false;
  for (int c : goal_conds_) {
    if (!layout_.held(s, c)) return false;
  }
  return true;
}

// Over-approximates what any execution could produce, ignoring consumption,
// caps and the depth bound.
void Search::relaxed_check(CwResult& out) const {
  std::vector<char> ev(events_.size(), 0);
  std::vector<char> cond(conds_.size(), 0);
  for (const Atom& a : initial_.held) cond[index_in(conds_, a)] = 1;
  for (const auto& [e, n] : initial_.tokens) {
    if (n > 0) ev[index_in(events_, e)] = 1;
  }
  std::vector<char> occurred = ev;
  for (const auto& [e, n] : initial_.occurred) {
    if (n > 0) occurred[index_in(events_, e)] = 1;
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (const CompiledFiring& f : firings_) {
      if (f.trigger >= 0 && !ev[f.trigger]) continue;
      bool ok = true;
      for (int c : f.context) ok = ok && cond[c];
      if (!ok) continue;
      for (int e : f.effects) {
        if (!ev[e]) {
          ev[e] = occurred[e] = 1;
          changed = true;
        }
        const int c = event_cond_[e];
        if (c >= 0 && events_[e].kind == EventKind::initiate && !cond[c]) {
          cond[c] = 1;
          changed = true;
        }
      }
    }
  }
  for (const EventRef& e : goals_.events) {
    if (!occurred[index_in(events_, e)]) out.unproducible.push_back(e.label());
  }
  for (const Atom& a : goals_.conditions) {
    if (!cond[index_in(conds_, a)]) out.unproducible.push_back(a.name);
  }
  out.structurally_unreachable = !out.unproducible.empty();
}

CwResult Search::run() {
  CwResult out;
  out.depth_bound = base_.depth_bound;
  relaxed_check(out);
  if (out.structurally_unreachable) {
    out.cost = Cost::infinite();
    return out;
  }

  std::vector<Node> nodes;
  nodes.push_back({Bits{}, 0, {}, -1, -1, initial_packed()});
  auto worse = [&nodes](std::size_t a, std::size_t b) {
    const Node& x = nodes[a];
    const Node& y = nodes[b];
    return std::tie(x.cost, x.step, x.ranks, a) > std::tie(y.cost, y.step, y.ranks, b);
  };
  std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(worse)> open(worse);
  open.push(0);
  // Smallest step at which each packed state has been expanded. A later pop
  // of the same state is dominated unless it arrives in fewer steps.
  std::unordered_map<std::string, int> settled;
  bool truncated = false;

  while (!open.empty()) {
    const std::size_t idx = open.top();
    open.pop();
    auto [it, fresh] = settled.try_emplace(nodes[idx].state, nodes[idx].step);
    if (!fresh) {
      if (it->second <= nodes[idx].step) continue;
      it->second = nodes[idx].step;
    }
    ++out.states_expanded;
    if (satisfied(nodes[idx].state)) {
      std::vector<FiringStep> rev;
      for (std::int64_t i = static_cast<std::int64_t>(idx); nodes[i].parent >= 0;
           i = nodes[i].parent) {
        const CompiledFiring& f = firings_[nodes[i].firing];
        rev.push_back({f.firing, f.cost, fnv1a(nodes[i].state)});
      }
      out.witness.steps.assign(rev.rbegin(), rev.rend());
      out.witness.total = nodes[idx].cost;
      out.cost = nodes[idx].cost;
      return out;
    }
    if (nodes[idx].step >= base_.depth_bound) {
      for (const CompiledFiring& f : firings_) {
        if (enabled(f, nodes[idx].state)) {
          truncated = true;
          break;
        }
      }
      continue;
    }
    for (std::size_t fi = 0; fi < firings_.size(); ++fi) {
      const CompiledFiring& f = firings_[fi];
      if (!enabled(f, nodes[idx].state)) continue;
      Node child;
      child.cost = nodes[idx].cost + f.cost;
      child.step = nodes[idx].step + 1;
      child.ranks = nodes[idx].ranks;
      child.ranks.push_back(f.rank);
      child.parent = static_cast<std::int64_t>(idx);
      child.firing = static_cast<int>(fi);
      child.state = apply(f, nodes[idx].state);
      auto s = settled.find(child.state);
      if (s != settled.end() && s->second <= child.step) continue;
      nodes.push_back(std::move(child));
      open.push(nodes.size() - 1);
    }
  }
  out.cost = Cost::infinite();
  out.depth_exhausted = truncated;
  return out;
}

}  // namespace

CwResult cw(const WorldRuleBase& base, const WorldState& initial,
            const GoalSet& goals) {
  return Search(base, initial, goals).run();
}

WorldRuleBase without_event(const WorldRuleBase& base, const EventRef& e) {
  WorldRuleBase out;
  out.depth_bound = base.depth_bound;
  for (const auto& s : base.spontaneous) {
    if (!(s.event == e)) out.spontaneous.push_back(s);
  }
  for (const WorldRule& r : base.rules) {
    if (r.trigger && *r.trigger == e) continue;
    if (std::find(r.effects.begin(), r.effects.end(), e) != r.effects.end()) continue;
    WorldRule copy = r;
    copy.id = out.rules.size();
    out.rules.push_back(std::move(copy));
  }
  return out;
}

WorldState without_event(const WorldState& s, const EventRef& e) {
  WorldState out = s;
  out.tokens.erase(e);
  out.occurred.erase(e);
  return out;
}

std::vector<Alternative> enumerate_min_alternatives(
    const WorldRuleBase& base, const WorldState& initial,
    const std::set<EventRef>& candidates, const std::set<EventRef>& excluded) {
  WorldRuleBase reduced = base;
  WorldState start = initial;
  for (const EventRef& e : excluded) {
    reduced = without_event(reduced, e);
    start = without_event(start, e);
  }
  std::vector<Alternative> out;
  for (const EventRef& c : candidates) {
    if (excluded.count(c)) continue;
    GoalSet g;
    g.events.insert(c);
    out.push_back({c, cw(reduced, start, g).cost});
  }
  std::sort(out.begin(), out.end(), [](const Alternative& a, const Alternative& b) {
    if (a.cost != b.cost) return a.cost < b.cost;
    return a.event < b.event;
  });
  return out;
}

std::string render_trace(const ExecutionWitness& w) {
  std::string out;
  Bits running{};
  for (std::size_t i = 0; i < w.steps.size(); ++i) {
    running += w.steps[i].cost;
    out += std::to_string(i + 1) + ". " + w.steps[i].what.label + "  [" +
           w.steps[i].cost.str() + " bits, total " + running.str() + "]\n";
  }
  return out;
}

}  // namespace complog

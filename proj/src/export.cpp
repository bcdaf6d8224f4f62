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

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace complog {
namespace {

// ---- ASP ------------------------------------------------------------------

// Lowercase identifiers are ASP constants; anything else is quoted.
std::string asp_constant(const std::string& name) {
  if (!name.empty() && std::islower(static_cast<unsigned char>(name[0])) &&
      name != "not") {
    return name;
  }
  return "\"" + name + "\"";
}

std::string asp_event(const EventRef& e) {
  const std::string base = asp_constant(e.base.name);
  switch (e.kind) {
    case EventKind::named: return "occ(" + base + ")";
    case EventKind::initiate: return "init(" + base + ")";
    case EventKind::terminate: return "term(" + base + ")";
  }
  return base;
}

struct AspEdge {
  std::string src;
  std::string dst;
  Bits cost;
  std::string note;  // non-empty when the rule is approximated
};

std::int64_t pow10(int d) {
  std::int64_t p = 1;
  while (d-- > 0) p *= 10;
  return p;
}

std::string scaled(Bits b, int decimals) {
  // Exact: b has at most `decimals` fractional digits.
  return std::to_string(b.micro() / pow10(Bits::kMaxDecimals - decimals));
}

const char* const kExploration =
    "% exploration\n"
    "edge(X, Y) :- cost(X, Y, _).\n"
    "{ path(X, Y) } :- reached(X, _), edge(X, Y).\n"
    "reached(X, 0) :- start(X).\n"
    ":- goal(Y), not reached(Y, _).\n";

const char* const kOptimization =
    "% optimization\n"
    "totalcost(T) :- T = #sum{C,X,Y : path(X, Y), cost(X, Y, C)}.\n"
    "#minimize {T: totalcost(T)}.\n";

}  // namespace

std::string export_asp(const Program& program, const GoalSet& goals,
                       Machine machine, const QueryOptions& options) {
  const Models m = build_models(program, options);
  std::vector<AspEdge> edges;
  std::vector<std::string> goal_terms;
  std::string start = "s";

  if (machine == Machine::epistemic) {
    const MentalGraph& g = m.mental;
    for (int i = 0; g.find(Atom{start}); ++i) start = "s" + std::to_string(i);
    auto node = [&](std::size_t v) {
      return v == MentalGraph::kStart ? start : asp_constant(g.name(v));
    };
    for (const auto& e : g.edges()) edges.push_back({node(e.src), node(e.dst), e.cost, ""});
    for (const Atom& a : epistemic_goals(goals).conditions) {
      goal_terms.push_back(asp_constant(a.name));
    }
  } else {
    for (const auto& s : m.world.spontaneous) {
      edges.push_back({start, asp_event(s.event), s.cost, ""});
    }
    for (const WorldRule& r : m.world.rules) {
      std::vector<std::string> sources;
      if (r.trigger) {
        sources.push_back(asp_event(*r.trigger));
      } else if (!r.context.empty()) {
        sources.push_back(asp_event(initiate(r.context.front().name)));
      } else {
        sources.push_back(start);
      }
      std::string note;
      if (r.effects.size() > 1 || r.context.size() > 1 ||
          (r.trigger && !r.context.empty())) {
        note = "% approximated: " + r.label();
      }
      for (std::size_t i = 0; i < r.effects.size(); ++i) {
        edges.push_back({sources.front(), asp_event(r.effects[i]),
                         i == 0 ? r.cost : Bits{}, i == 0 ? note : ""});
      }
    }
    for (const EventRef& e : productive_goals(m, goals).events) {
      goal_terms.push_back(asp_event(e));
    }
  }

  int decimals = 0;
  for (const AspEdge& e : edges) decimals = std::max(decimals, e.cost.decimals());

  std::ostringstream out;
  out << "% CompLog ASP encoding, " << to_string(machine) << " machine\n";
  out << "% costs in bits, scaled by " << pow10(decimals) << "\n";
  if (machine == Machine::productive) {
    out << "% world model" << (m.augmented ? " (augmented, " : " (")
        << (m.augmented ? to_string(options.augment_mode) : "as written")
        << "), depth bound " << m.world.depth_bound << "\n";
  }
  out << "% model\n";
  for (const AspEdge& e : edges) {
    if (!e.note.empty()) out << e.note << "\n";
    out << "cost(" << e.src << ", " << e.dst << ", " << scaled(e.cost, decimals)
        << ").\n";
  }
  out << "start(" << start << ").\n";
  for (const std::string& gt : goal_terms) out << "goal(" << gt << ").\n";
  out << kExploration;
  if (machine == Machine::epistemic) {
    out << "% epistemic: a node is coloured at the time of its source\n"
           "reached(Y, N) :- path(X, Y), reached(X, N).\n";
  } else {
    out << "% productive: every firing takes one step\n"
           "reached(Y, N + 1) :- path(X, Y), reached(X, N), N < "
        << m.world.depth_bound
        << ".\n"
           "% interleaving: one event per step\n"
           ":- reached(X, N), reached(Y, N), X != Y.\n";
  }
  out << kOptimization;
  return out.str();
}

// ---- DOT ------------------------------------------------------------------

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string mental_graph_dot(const MentalGraph& g, const ColouringWitness* witness) {
  std::ostringstream out;
  out << "digraph mental {\n  rankdir=LR;\n  node [shape=ellipse];\n";
  for (std::size_t v = 0; v < g.node_count(); ++v) {
    out << "  n" << v << " [label=" << dot_quote(g.name(v));
    if (v == MentalGraph::kStart) {
      out << ", shape=box, style=filled, fillcolor=black, fontcolor=white";
    } else if (witness && witness->coloured.count(Atom{g.name(v)})) {
      out << ", style=filled, fillcolor=black, fontcolor=white";
    }
    out << "];\n";
  }
  for (const auto& e : g.edges()) {
    out << "  n" << e.src << " -> n" << e.dst << " [label=" << dot_quote(e.cost.str());
    if (witness) {
      auto it = witness->chosen_in_edge.find(Atom{g.name(e.dst)});
      if (it != witness->chosen_in_edge.end() && it->second.src == g.name(e.src)) {
        out << ", color=red, penwidth=2";
      }
    }
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string world_graph_dot(const WorldRuleBase& base) {
  const std::set<EventRef> evs = base.events();
  std::map<EventRef, std::size_t> eid;
  std::set<Atom> ctx;
  for (const auto& r : base.rules) ctx.insert(r.context.begin(), r.context.end());
  std::map<Atom, std::size_t> cid;

  std::ostringstream out;
  out << "digraph world {\n  rankdir=LR;\n  node [shape=ellipse];\n";
  out << "  start [label=\"START\", shape=box, style=filled, fillcolor=black, "
         "fontcolor=white];\n";
  for (const EventRef& e : evs) {
    const std::size_t i = eid.size();
    eid[e] = i;
    out << "  e" << i << " [label=" << dot_quote(e.label()) << "];\n";
  }
  for (const Atom& a : ctx) {
    const std::size_t i = cid.size();
    cid[a] = i;
    out << "  c" << i << " [label=" << dot_quote(a.name) << ", shape=box];\n";
  }
  for (const auto& s : base.spontaneous) {
    out << "  start -> e" << eid[s.event] << " [label=" << dot_quote(s.cost.str())
        << "];\n";
  }
  for (const WorldRule& r : base.rules) {
    const std::string label = dot_quote("r" + std::to_string(r.id) + ": " + r.cost.str());
    for (const EventRef& e : r.effects) {
      if (r.trigger) {
        out << "  e" << eid[*r.trigger] << " -> e" << eid[e] << " [label=" << label
            << "];\n";
      } else if (r.context.empty()) {
        out << "  start -> e" << eid[e] << " [label=" << label << "];\n";
      }
      for (const Atom& a : r.context) {
        out << "  c" << cid[a] << " -> e" << eid[e] << " [label=" << label
            << ", style=dashed];\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

std::string execution_dot(const ExecutionWitness& w) {
  std::ostringstream out;
  out << "digraph execution {\n  rankdir=LR;\n  node [shape=box];\n";
  out << "  t0 [label=\"start\"];\n";
  Bits running{};
  for (std::size_t i = 0; i < w.steps.size(); ++i) {
    running += w.steps[i].cost;
    out << "  t" << i + 1 << " [label="
        << dot_quote(std::to_string(i + 1) + ". " + w.steps[i].what.label +
                     "\\ntotal " + running.str())
        << "];\n";
    out << "  t" << i << " -> t" << i + 1 << " [label="
        << dot_quote("+" + w.steps[i].cost.str()) << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace complog

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

#include "complog/cli.hpp"

#include <array>
#include <fstream>
#include <iostream>
#include <sstream>
#include <utility>

#include "complog/error.hpp"
#include "complog/export.hpp"

namespace complog::cli {
namespace {

constexpr std::array<std::pair<Command, const char*>, 10> kCommands{{
    {Command::check, "check"},
    {Command::cd, "cd"},
    {Command::cw, "cw"},
    {Command::u, "u"},
    {Command::exante, "exante"},
    {Command::describe, "describe"},
    {Command::negate, "negate"},
    {Command::augment, "augment"},
    {Command::export_dot, "export-dot"},
    {Command::export_asp, "export-asp"},
}};

constexpr int kTextDecimals = 5;

// Accumulates `key=value` lines or free text.
class Sink {
 public:
  explicit Sink(OutputFormat f) : format_(f) {}

  bool kv() const { return format_ == OutputFormat::kv; }

  void pair(const std::string& key, const std::string& value) {
    if (kv()) out_ << key << '=' << value << '\n';
  }
  void text(const std::string& line) {
    if (!kv()) out_ << line << '\n';
  }
  std::string str() const { return out_.str(); }

 private:
  OutputFormat format_;
  std::ostringstream out_;
};

std::string join(const std::vector<std::string>& xs, const char* sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += xs[i];
  }
  return out;
}

std::string cd_status(const CdResult& r) {
  return r.cost.finite() ? "finite" : "unreachable";
}

std::string cw_status(const CwResult& r) {
  if (r.cost.finite()) return "finite";
  return r.depth_exhausted ? "depth_exhausted" : "unreachable";
}

std::vector<std::string> atom_names(const std::vector<Atom>& as) {
  std::vector<std::string> out;
  for (const Atom& a : as) out.push_back(a.name);
  return out;
}

void write_cd_witness(Sink& s, const CdResult& r) {
  if (s.kv()) {
    s.pair("witness.size", std::to_string(r.witness.coloured.size()));
    std::size_t i = 0;
    for (const auto& [node, edge] : r.witness.chosen_in_edge) {
      s.pair("witness.edge." + std::to_string(i++),
             edge.src + "->" + node.name + ":" + edge.cost.str());
    }
    return;
  }
  if (r.witness.chosen_in_edge.empty()) return;
  s.text("colouring:");
  for (const auto& [node, edge] : r.witness.chosen_in_edge) {
    s.text("  " + edge.src + " -> " + node.name + "  " + edge.cost.str());
  }
}

void write_cw_witness(Sink& s, const CwResult& r) {
  if (s.kv()) {
    s.pair("witness.steps", std::to_string(r.witness.steps.size()));
    for (std::size_t i = 0; i < r.witness.steps.size(); ++i) {
      s.pair("witness.step." + std::to_string(i),
             r.witness.steps[i].what.label + ":" + r.witness.steps[i].cost.str());
    }
    return;
  }
  if (r.witness.steps.empty()) return;
  s.text("trace:");
  std::istringstream lines(render_trace(r.witness));
  for (std::string line; std::getline(lines, line);) s.text("  " + line);
}

std::string cd_line(const CdResult& r) {
  std::string line = "cd=" + r.cost.str();
  if (!r.unreachable.empty()) {
    line += " (unreachable: " + join(atom_names(r.unreachable)) + ")";
  }
  return line;
}

std::string cw_line(const CwResult& r) {
  std::string line = "cw=" + r.cost.str();
  if (r.structurally_unreachable) {
    line += " (unreachable: " + join(r.unproducible) + ")";
  } else if (r.cost.is_infinite()) {
    line += r.depth_exhausted
                ? " (depth bound " + std::to_string(r.depth_bound) + " exhausted)"
                : " (no execution within depth bound " +
                      std::to_string(r.depth_bound) + ")";
  }
  return line;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::set<std::string> split_list(const std::string& text) {
  std::set<std::string> out;
  std::string cur;
  auto flush = [&] {
    std::size_t b = cur.find_first_not_of(" \t");
    std::size_t e = cur.find_last_not_of(" \t");
    if (b != std::string::npos) out.insert(cur.substr(b, e - b + 1));
    cur.clear();
  };
  for (char c : text) {
    if (c == ',') {
      flush();
    } else {
      cur += c;
    }
  }
  flush();
  return out;
}

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
  for (const auto& [c, n] : kCommands) {
    if (name == n) return c;
  }
  return std::nullopt;
}

const char* to_string(Command c) {
  for (const auto& [cmd, n] : kCommands) {
    if (cmd == c) return n;
  }
  return "?";
}

std::string format_cd(const GoalSet& goals, const CdResult& r, OutputFormat f) {
  Sink s(f);
  s.pair("command", "cd");
  s.pair("goals", render_goal(goals));
  s.pair("cd", r.cost.str());
  s.pair("status", cd_status(r));
  if (!r.unreachable.empty()) s.pair("unreachable", join(atom_names(r.unreachable), ","));
  s.text("goals " + render_goal(goals));
  s.text(cd_line(r));
  write_cd_witness(s, r);
  return s.str();
}

std::string format_cw(const GoalSet& goals, const CwResult& r, OutputFormat f) {
  Sink s(f);
  s.pair("command", "cw");
  s.pair("goals", render_goal(goals));
  s.pair("cw", r.cost.str());
  s.pair("status", cw_status(r));
  s.pair("depth_bound", std::to_string(r.depth_bound));
  if (!r.unproducible.empty()) s.pair("unreachable", join(r.unproducible, ","));
  s.text("goals " + render_goal(goals));
  s.text(cw_line(r));
  write_cw_witness(s, r);
  return s.str();
}

std::string format_unexpectedness(const UnexpectednessReport& r, OutputFormat f) {
  Sink s(f);
  s.pair("command", "u");
  s.pair("goals", render_goal(r.goals));
  s.pair("augmented", r.augmented ? "true" : "false");
  s.pair("cw", r.cw.str());
  s.pair("cd", r.cd.str());
  s.pair("u", r.u.str());
  s.pair("u_clamped", r.u_clamped.str());
  s.pair("ex_ante", r.ex_ante.str());
  s.pair("cw.status", cw_status(r.execution));
  s.pair("cd.status", cd_status(r.description));
  s.text("cw=" + r.cw.str() + " cd=" + r.cd.str() + " u=" + r.u.str() +
         " u_clamped=" + r.u_clamped.str() + " ex_ante=" + r.ex_ante.str());
  s.text("goals " + render_goal(r.goals) +
         (r.augmented ? " (world model augmented)" : ""));
  s.text("productive " + render_goal(r.productive_query) + ": " + cw_line(r.execution));
  write_cw_witness(s, r.execution);
  s.text("epistemic " + render_goal(r.epistemic_query) + ": " + cd_line(r.description));
  write_cd_witness(s, r.description);
  return s.str();
}

std::string format_ex_ante(const UnexpectednessReport& r, OutputFormat f) {
  Sink s(f);
  s.pair("command", "exante");
  s.pair("goals", render_goal(r.goals));
  s.pair("ex_ante", r.ex_ante.str());
  s.pair("u", r.u.str());
  s.pair("cd", r.cd.str());
  s.pair("cw", r.cw.str());
  s.text("ex_ante=" + r.ex_ante.str() + " (u=" + r.u.str() + " + cd=" + r.cd.str() + ")");
  return s.str();
}

std::string format_description(const DescriptionVerdict& v, OutputFormat f) {
  Sink s(f);
  s.pair("command", "describe");
  s.pair("observed", v.observed.label());
  s.pair("observed_cw", v.observed_cw.str());
  s.pair("chosen", v.chosen.name);
  s.pair("candidates", std::to_string(v.candidates.size()));
  s.text(v.chosen.name);
  s.text("observed " + v.observed.label() + " cw=" + v.observed_cw.str());
  for (std::size_t i = 0; i < v.candidates.size(); ++i) {
    const DescriptionCandidate& c = v.candidates[i];
    const std::string p = "candidate." + std::to_string(i) + ".";
    s.pair(p + "atom", c.atom.name);
    s.pair(p + "cd", c.cd.str());
    s.pair(p + "u", c.u.str());
    s.pair(p + "admissible", c.admissible ? "true" : "false");
    s.pair(p + "hops", std::to_string(c.hops));
    s.text("  " + c.atom.name + " cd=" + c.cd.str() + " u=" + c.u.str() +
           (c.admissible ? " admissible" : " inadmissible") +
           " hops=" + std::to_string(c.hops));
  }
  return s.str();
}

std::string format_negation(const NegationReport& r, OutputFormat f) {
  Sink s(f);
  s.pair("command", "negate");
  s.pair("machine", to_string(r.machine));
  s.pair("target", r.target);
  s.pair("target_cost", r.target_cost.str());
  s.pair("candidates", join(r.candidates, ","));
  s.pair("examined", std::to_string(r.examined.size()));
  for (std::size_t i = 0; i < r.examined.size(); ++i) {
    const std::string p = "alternative." + std::to_string(i) + ".";
    s.pair(p + "node", r.examined[i].node);
    s.pair(p + "cost", r.examined[i].cost.str());
  }
  s.pair("aggregated", format_double_exact(r.aggregated));
  s.pair("stop_reason", to_string(r.stop_reason));
  s.text("target " + r.target + " (" + to_string(r.machine) +
         ") cost=" + r.target_cost.str());
  s.text("alternatives:");
  for (const auto& a : r.examined) s.text("  " + a.node + " " + a.cost.str());
  s.text("aggregated=" + format_double(r.aggregated, kTextDecimals));
  s.text(std::string("stop=") + to_string(r.stop_reason));
  return s.str();
}

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
  Program program;
  try {
    program = parse_program(read_file(config.program_path));
  } catch (const ParseError& e) {
    err << "error: " << config.program_path << ":" << e.what() << "\n";
    return kUsageError;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  QueryOptions options;
  options.depth_bound = config.depth_bound;
  options.augment_mode = config.augment_mode;

  std::string result;
  int code = kOk;
  try {
    GoalSet goals;
    try {
      goals = parse_goal(config.goals);
    } catch (const ParseError& e) {
      err << "error: goals:" << e.what() << "\n";
      return kUsageError;
    }
    switch (config.command) {
      case Command::check: {
        const SplitProgram parts = split(program);
        // Builds both models so structural problems surface here.
        build_models(program, options);
        Sink s(config.format);
        s.pair("command", "check");
        s.pair("statements", std::to_string(program.size()));
        s.pair("declarative", std::to_string(parts.declarative.size()));
        s.pair("active", std::to_string(parts.active.size()));
        s.text("ok: " + std::to_string(program.size()) + " statements (" +
               std::to_string(parts.declarative.size()) + " declarative, " +
               std::to_string(parts.active.size()) + " active)");
        result = s.str();
        break;
      }
      case Command::cd: {
        const Models m = build_models(program, options);
        const CdResult r = cd(m.mental, epistemic_goals(goals));
        result = format_cd(goals, r, config.format);
        if (r.cost.is_infinite()) code = kQueryFailure;
        break;
      }
      case Command::cw: {
        const Models m = build_models(program, options);
        const CwResult r = cw(m.world, m.initial, productive_goals(m, goals));
        result = format_cw(goals, r, config.format);
        if (r.cost.is_infinite()) code = kQueryFailure;
        break;
      }
      case Command::u:
      case Command::exante: {
        const UnexpectednessReport r = unexpectedness(program, goals, options);
        result = config.command == Command::u
                     ? format_unexpectedness(r, config.format)
                     : format_ex_ante(r, config.format);
        if (!r.u.finite()) code = kQueryFailure;
        break;
      }
      case Command::describe: {
        const GoalSet ev = parse_goal(config.event);
        if (ev.events.size() != 1 || !ev.conditions.empty()) {
          err << "error: --event expects a single event such as '#pigeon'\n";
          return kUsageError;
        }
        result = format_description(describe(program, *ev.events.begin(), options),
                                    config.format);
        break;
      }
      case Command::negate: {
        if (config.target.empty()) {
          err << "error: negate needs --target\n";
          return kUsageError;
        }
        std::optional<std::set<std::string>> cands;
        if (config.candidates) cands = split_list(*config.candidates);
        result = format_negation(negate(program, config.target, config.machine, cands,
                                        config.thresholds, options),
                                 config.format);
        break;
      }
      case Command::augment: {
        const SplitProgram parts = split(program);
        if (!parts.active.empty()) {
          err << "error: augment expects a purely declarative program\n";
          return kUsageError;
        }
        result = render_program(augment(parts.declarative, config.augment_mode));
        break;
      }
      case Command::export_dot: {
        const Models m = build_models(program, options);
        if (config.machine == Machine::epistemic) {
          if (goals.empty()) {
            result = mental_graph_dot(m.mental);
          } else {
            const CdResult r = cd(m.mental, epistemic_goals(goals));
            result = mental_graph_dot(m.mental, r.cost.finite() ? &r.witness : nullptr);
          }
        } else {
          if (goals.empty()) {
            result = world_graph_dot(m.world);
          } else {
            result = execution_dot(cw(m.world, m.initial, productive_goals(m, goals)).witness);
          }
        }
        break;
      }
      case Command::export_asp:
        result = export_asp(program, goals, config.machine, options);
        break;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const QueryError& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return kQueryFailure;
  } catch (const ModelError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  if (config.output_path.empty()) {
    out << result;
  } else {
    std::ofstream file(config.output_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write '" << config.output_path << "'\n";
      return kUsageError;
    }
    file << result;
  }
  return code;
}

}  // namespace complog::cli

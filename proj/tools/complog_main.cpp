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

// complog <command> <program.complog> [options]

#include <cmath>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "complog/cli.hpp"

namespace {

double parse_threshold(const std::string& s) {
  if (s == "inf") return INFINITY;
  std::size_t used = 0;
  const double v = std::stod(s, &used);
  if (used != s.size()) throw std::invalid_argument(s);
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  using complog::cli::CliConfig;
  CliConfig config;
  std::string command;
  std::string machine = "epistemic";
  std::string mode = "race";
  std::string format = "text";
  std::string theta_high = "1";
  std::string theta_low = "1";
  std::string candidates;

  CLI::App app{"CompLog: complexity-based logic programs"};
  app.add_option("command", command,
                 "check | cd | cw | u | exante | describe | negate | augment | "
                 "export-dot | export-asp")
      ->required();
  app.add_option("program", config.program_path, ".complog program file")->required();
  app.add_option("-g,--goals", config.goals, "goal set, e.g. \"<x, y>\" or \"+x, +y\"");
  app.add_option("-e,--event", config.event, "observed event for describe, e.g. \"#pigeon\"");
  app.add_option("-t,--target", config.target, "node to negate, e.g. die1 or +die1");
  auto* cand = app.add_option("--candidates", candidates,
                              "comma-separated alternatives for negate");
  app.add_option("-m,--machine", machine, "epistemic | productive")
      ->check(CLI::IsMember({"epistemic", "productive"}));
  app.add_option("-d,--depth", config.depth_bound, "productive search depth bound")
      ->check(CLI::Range(1, 64));
  app.add_option("--mode", mode, "augmentation mode: race | catalyst")
      ->check(CLI::IsMember({"race", "catalyst"}));
  app.add_option("--theta-high", theta_high, "negate: stop when an alternative is this many bits above the target (or inf)");
  app.add_option("--theta-low", theta_low, "negate: stop when the aggregate is this many bits below the target (or inf)");
  app.add_option("-f,--format", format, "text | kv")->check(CLI::IsMember({"text", "kv"}));
  app.add_option("-o,--output", config.output_path, "write the result to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : complog::cli::kUsageError;
  }

  const auto cmd = complog::cli::parse_command(command);
  if (!cmd) {
    std::cerr << "error: unknown command '" << command << "'\n";
    return complog::cli::kUsageError;
  }
  config.command = *cmd;
  config.machine = machine == "productive" ? complog::Machine::productive
                                           : complog::Machine::epistemic;
  config.augment_mode =
      mode == "catalyst" ? complog::AugmentMode::catalyst : complog::AugmentMode::race;
  config.format = format == "kv" ? complog::cli::OutputFormat::kv
                                 : complog::cli::OutputFormat::text;
  if (*cand) config.candidates = candidates;
  try {
    config.thresholds.high = parse_threshold(theta_high);
    config.thresholds.low = parse_threshold(theta_low);
  } catch (const std::exception&) {
    std::cerr << "error: thresholds must be numbers or 'inf'\n";
    return complog::cli::kUsageError;
  }
  return complog::cli::run(config, std::cout, std::cerr);
}

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

#ifndef COMPLOG_CLI_HPP
#define COMPLOG_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "complog/inference.hpp"

namespace complog::cli {

enum class Command {
  check,
  cd,
  cw,
  u,
  exante,
  describe,
  negate,
  augment,
  export_dot,
  export_asp,
};

std::optional<Command> parse_command(std::string_view name);
const char* to_string(Command c);

enum class OutputFormat { text, kv };

struct CliConfig {
  std::string program_path;
  Command command = Command::check;
  std::string goals;
  std::string event;   // describe
  std::string target;  // negate
  /// Comma-separated node list for negate; unset means race siblings.
  std::optional<std::string> candidates;
  Machine machine = Machine::epistemic;
  int depth_bound = WorldRuleBase::kDefaultDepth;
  AugmentMode augment_mode = AugmentMode::race;
  NegationThresholds thresholds;
  OutputFormat format = OutputFormat::text;
  /// Write the result here instead of `out`.
  std::string output_path;
};

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kQueryFailure = 1;  // unreachable goal, unknown atom
inline constexpr int kUsageError = 2;    // parse, file or config error

/// Runs one command. Reports go to `out`, diagnostics to `err`.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

// Report formatting, shared with tests. Text output rounds derived real
// values to five decimals; kv output is exact.
std::string format_cd(const GoalSet& goals, const CdResult& r, OutputFormat f);
std::string format_cw(const GoalSet& goals, const CwResult& r, OutputFormat f);
std::string format_unexpectedness(const UnexpectednessReport& r, OutputFormat f);
std::string format_ex_ante(const UnexpectednessReport& r, OutputFormat f);
std::string format_description(const DescriptionVerdict& v, OutputFormat f);
std::string format_negation(const NegationReport& r, OutputFormat f);

}  // namespace complog::cli

#endif  // COMPLOG_CLI_HPP

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

#ifndef COMPLOG_ERROR_HPP
#define COMPLOG_ERROR_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace complog {

/// Malformed program or goal text. Always carries a 1-based line/column.
class ParseError : public std::runtime_error {
 public:
  enum class Kind { lex, syntax, duplicate, negative_weight, bad_weight, invalid };

  ParseError(Kind kind, int line, int column, const std::string& what)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                           ": " + what),
        kind_(kind),
        line_(line),
        column_(column) {}

  Kind kind() const { return kind_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  Kind kind_;
  int line_;
  int column_;
};

enum class Machine { epistemic, productive };

const char* to_string(Machine m);

/// A query that cannot be posed against a model (as opposed to one whose
/// answer is "unreachable", which is a regular result with infinite cost).
class QueryError : public std::runtime_error {
 public:
  enum class Code {
    unknown_atom,
    unknown_event,
    mixed_query,
    no_candidates,
    invalid_argument,
    too_many_goals,
  };

  QueryError(Code code, Machine machine, const std::string& what,
             std::vector<std::string> subjects = {})
      : std::runtime_error(std::string(to_string(machine)) + ": " + what),
        code_(code),
        machine_(machine),
        subjects_(std::move(subjects)) {}

  Code code() const { return code_; }
  Machine machine() const { return machine_; }
  /// Offending atoms or events, when applicable.
  const std::vector<std::string>& subjects() const { return subjects_; }

 private:
  Code code_;
  Machine machine_;
  std::vector<std::string> subjects_;
};

const char* to_string(QueryError::Code c);

}  // namespace complog

#endif  // COMPLOG_ERROR_HPP

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

#ifndef COMPLOG_EXPORT_HPP
#define COMPLOG_EXPORT_HPP

#include <string>

#include "complog/epistemic.hpp"
#include "complog/inference.hpp"
#include "complog/models.hpp"
#include "complog/productive.hpp"

namespace complog {

/// Emits the min-cost search of one machine as an ASP-Core-2 program:
/// `cost/3`, `start/1` and `goal/1` facts for the model, then the
/// exploration axioms, the machine's timing constraints and a `#minimize`
/// directive.
///
/// The productive export follows the graph encoding: it has one step per
/// reached node and forbids two nodes at the same step, but it does not
/// model token consumption, contexts or multi-effect rules. Such rules are
/// approximated and flagged in comments.
///
/// Fractional weights are scaled by a common power of ten (stated in the
/// header) since `#sum` works over integers.
std::string export_asp(const Program& program, const GoalSet& goals,
                       Machine machine, const QueryOptions& options = {});

/// Mental graph; if `witness` is given its colouring is highlighted.
std::string mental_graph_dot(const MentalGraph& g,
                             const ColouringWitness* witness = nullptr);

/// World hypergraph: events and context conditions as nodes, firings as
/// labelled edges.
std::string world_graph_dot(const WorldRuleBase& base);

/// Execution witness as a left-to-right timeline.
std::string execution_dot(const ExecutionWitness& w);

}  // namespace complog

#endif  // COMPLOG_EXPORT_HPP

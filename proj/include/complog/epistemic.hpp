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

#ifndef COMPLOG_EPISTEMIC_HPP
#define COMPLOG_EPISTEMIC_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "complog/bits.hpp"
#include "complog/models.hpp"
#include "complog/syntax.hpp"

namespace complog {

/// Which implementation of the data-parallel search kernels to run. Both
/// produce identical results; `serial` is the reference.
enum class Kernel { serial, parallel };

/// A minimum-cost colouring: every coloured node is paid once through a
/// single in-edge from an already coloured node (or START).
struct ColouringWitness {
  struct InEdge {
    std::string src;  // MentalGraph::kStartName for START
    Bits cost;
    bool operator==(const InEdge&) const = default;
  };

  std::set<Atom> coloured;
  std::map<Atom, InEdge> chosen_in_edge;
  Bits total;

  bool operator==(const ColouringWitness&) const = default;
};

struct CdResult {
  Cost cost;
  ColouringWitness witness;   // empty when cost is infinite
  std::vector<Atom> unreachable;  // goals START cannot reach
};

/// Description complexity of a set of conditions: the cheapest colouring of
/// `g` that contains every goal (a directed Steiner arborescence rooted at
/// START).
///
/// Ties between optimal colourings go to fewer coloured nodes, then to the
/// lexicographically smallest sorted node list.
///
/// Throws QueryError: mixed_query if `goals` holds events, unknown_atom for
/// goals missing from `g`, too_many_goals past the subset-DP limit.
CdResult cd(const MentalGraph& g, const GoalSet& goals,
            Kernel kernel = Kernel::parallel);

struct Descriptor {
  Atom atom;
  Bits cost;  // summed rule cost from the source condition
  int hops = 0;
  bool operator==(const Descriptor&) const = default;
};

/// Conditions derivable from `from` through declarative rules (START edges
/// are not followed), including `from` itself at cost 0. Sorted by cost,
/// then hops, then name. Throws QueryError(unknown_atom).
std::vector<Descriptor> reachable_descriptors(const MentalGraph& g,
                                              const Atom& from);

namespace kernels {

/// Lexicographic (cost, edge count) score with an explicit unreachable state.
struct Score {
  std::int64_t cost = 0;  // micro-bits
  std::int32_t edges = 0;
  bool reachable = false;

  static constexpr Score zero() { return {0, 0, true}; }
  static constexpr Score none() { return {}; }

  friend constexpr Score operator+(const Score& a, const Score& b) {
    if (!a.reachable || !b.reachable) return none();
    return {a.cost + b.cost, a.edges + b.edges, true};
  }
  friend constexpr bool operator<(const Score& a, const Score& b) {
    if (a.reachable != b.reachable) return a.reachable;
    if (!a.reachable) return false;
    if (a.cost != b.cost) return a.cost < b.cost;
    return a.edges < b.edges;
  }
  friend constexpr bool operator==(const Score& a, const Score& b) {
    if (a.reachable != b.reachable) return false;
    return !a.reachable || (a.cost == b.cost && a.edges == b.edges);
  }
};

/// Shortest (cost, hops) paths between every ordered pair of nodes.
struct DistanceMatrix {
  std::size_t n = 0;
  std::vector<Score> dist;        // dist[s * n + t]
  std::vector<std::size_t> pred;  // predecessor of t on the s->t path

  const Score& at(std::size_t s, std::size_t t) const { return dist[s * n + t]; }
  std::size_t pred_of(std::size_t s, std::size_t t) const { return pred[s * n + t]; }
};

DistanceMatrix all_pairs_serial(const MentalGraph& g);
DistanceMatrix all_pairs_parallel(const MentalGraph& g);

/// Subset DP table. best(mask, v) is the cheapest arborescence rooted at v
/// spanning the terminals in `mask`.
struct SteinerTable {
  std::size_t n = 0;
  std::size_t terminals = 0;
  std::vector<Score> best;               // [mask * n + v]
  std::vector<std::uint32_t> split;      // merge choice at the branch node
  std::vector<std::uint32_t> branch;     // node where the tree first branches

  const Score& at(std::uint32_t mask, std::size_t v) const {
    return best[static_cast<std::size_t>(mask) * n + v];
  }
};

SteinerTable steiner_dp_serial(const DistanceMatrix& d,
                               std::span<const std::size_t> terminals);
SteinerTable steiner_dp_parallel(const DistanceMatrix& d,
                                 std::span<const std::size_t> terminals);

/// Largest goal set the subset DP accepts.
inline constexpr std::size_t kMaxSteinerTerminals = 16;

}  // namespace kernels

}  // namespace complog

#endif  // COMPLOG_EPISTEMIC_HPP

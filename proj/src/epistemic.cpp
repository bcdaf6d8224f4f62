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

#include "complog/epistemic.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <queue>
#include <tuple>

#include "complog/error.hpp"

namespace complog {
namespace kernels {
namespace {

constexpr std::size_t kNoPred = std::numeric_limits<std::size_t>::max();

Score edge_score(Bits cost) { return {cost.micro(), 1, true}; }

// Single-source (cost, hops) Dijkstra; writes row `src` of the matrix.
void shortest_row(const MentalGraph& g, std::size_t src, Score* dist,
                  std::size_t* pred) {
  const std::size_t n = g.node_count();
  std::fill(dist, dist + n, Score::none());
  std::fill(pred, pred + n, kNoPred);
  using Item = std::tuple<std::int64_t, std::int32_t, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[src] = Score::zero();
  heap.emplace(0, 0, src);
  std::vector<char> done(n, 0);
  while (!heap.empty()) {
    auto [c, h, v] = heap.top();
    heap.pop();
    if (done[v]) continue;
    done[v] = 1;
    for (std::size_t ei : g.out_edges(v)) {
      const auto& e = g.edges()[ei];
      if (done[e.dst]) continue;
      Score cand = dist[v] + edge_score(e.cost);
      if (cand < dist[e.dst]) {
        dist[e.dst] = cand;
        pred[e.dst] = v;
        heap.emplace(cand.cost, cand.edges, e.dst);
      }
    }
  }
}

// Cheapest split of `mask` into two subtrees joined at `u`.
void merge_at(const SteinerTable& t, std::uint32_t mask, std::size_t u,
              Score& out, std::uint32_t& choice) {
  out = Score::none();
  choice = 0;
  const std::uint32_t low = mask & (~mask + 1);
  for (std::uint32_t s = (mask - 1) & mask; s > 0; s = (s - 1) & mask) {
    if (!(s & low)) continue;
    Score cand = t.at(s, u) + t.at(mask ^ s, u);
    if (cand < out) {
      out = cand;
      choice = s;
    }
  }
}

// Cheapest way to reach a branch node from `v`.
void relax_from(const DistanceMatrix& d, const std::vector<Score>& merged,
                const std::vector<std::size_t>& live, std::size_t v, Score& out,
                std::uint32_t& choice) {
  out = Score::none();
  choice = 0;
  for (std::size_t u : live) {
    Score cand = d.at(v, u) + merged[u];
    if (cand < out) {
      out = cand;
      choice = static_cast<std::uint32_t>(u);
    }
  }
}

SteinerTable make_table(const DistanceMatrix& d, std::size_t k) {
  SteinerTable t;
  t.n = d.n;
  t.terminals = k;
  const std::size_t cells = (std::size_t{1} << k) * d.n;
  t.best.assign(cells, Score::none());
  t.split.assign(cells, 0);
  t.branch.assign(cells, 0);
  return t;
}

void seed_singleton(std::vector<Score>& merged, std::size_t terminal) {
  std::fill(merged.begin(), merged.end(), Score::none());
  merged[terminal] = Score::zero();
}

std::vector<std::size_t> live_nodes(const std::vector<Score>& merged) {
  std::vector<std::size_t> live;
  for (std::size_t u = 0; u < merged.size(); ++u) {
    if (merged[u].reachable) live.push_back(u);
  }
  return live;
}

}  // namespace

DistanceMatrix all_pairs_serial(const MentalGraph& g) {
  DistanceMatrix d;
  d.n = g.node_count();
  d.dist.resize(d.n * d.n);
  d.pred.resize(d.n * d.n);
  for (std::size_t s = 0; s < d.n; ++s) {
    shortest_row(g, s, &d.dist[s * d.n], &d.pred[s * d.n]);
  }
  return d;
}

DistanceMatrix all_pairs_parallel(const MentalGraph& g) {
  DistanceMatrix d;
  d.n = g.node_count();
  d.dist.resize(d.n * d.n);
  d.pred.resize(d.n * d.n);
  const auto n = static_cast<std::int64_t>(d.n);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t s = 0; s < n; ++s) {
    const auto row = static_cast<std::size_t>(s) * d.n;
    shortest_row(g, static_cast<std::size_t>(s), &d.dist[row], &d.pred[row]);
  }
  return d;
}

SteinerTable steiner_dp_serial(const DistanceMatrix& d,
                               std::span<const std::size_t> terminals) {
  const std::size_t k = terminals.size();
  SteinerTable t = make_table(d, k);
  std::vector<Score> merged(d.n);
  const std::uint32_t full = (std::uint32_t{1} << k) - 1;
  for (std::uint32_t mask = 1; mask <= full && k > 0; ++mask) {
    const std::size_t row = static_cast<std::size_t>(mask) * d.n;
    if (std::has_single_bit(mask)) {
      seed_singleton(merged, terminals[std::countr_zero(mask)]);
    } else {
      for (std::size_t u = 0; u < d.n; ++u) {
        merge_at(t, mask, u, merged[u], t.split[row + u]);
      }
    }
    const std::vector<std::size_t> live = live_nodes(merged);
    for (std::size_t v = 0; v < d.n; ++v) {
      relax_from(d, merged, live, v, t.best[row + v], t.branch[row + v]);
    }
  }
  return t;
}

SteinerTable steiner_dp_parallel(const DistanceMatrix& d,
                                 std::span<const std::size_t> terminals) {
  const std::size_t k = terminals.size();
  SteinerTable t = make_table(d, k);
  std::vector<Score> merged(d.n);
  const std::uint32_t full = (std::uint32_t{1} << k) - 1;
  const auto n = static_cast<std::int64_t>(d.n);
  for (std::uint32_t mask = 1; mask <= full && k > 0; ++mask) {
    const std::size_t row = static_cast<std::size_t>(mask) * d.n;
    if (std::has_single_bit(mask)) {
      seed_singleton(merged, terminals[std::countr_zero(mask)]);
    } else {
#pragma omp parallel for schedule(static)
      for (std::int64_t u = 0; u < n; ++u) {
        const auto uu = static_cast<std::size_t>(u);
        merge_at(t, mask, uu, merged[uu], t.split[row + uu]);
      }
    }
    const std::vector<std::size_t> live = live_nodes(merged);
#pragma omp parallel for schedule(static)
    for (std::int64_t v = 0; v < n; ++v) {
      const auto vv = static_cast<std::size_t>(v);
      relax_from(d, merged, live, vv, t.best[row + vv], t.branch[row + vv]);
    }
  }
  return t;
}

}  // namespace kernels

namespace {

using kernels::Score;

struct Tree {
  Score score;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // (src, dst)
};

void append_path(const kernels::DistanceMatrix& d, std::size_t from,
                 std::size_t to, Tree& tree) {
  std::vector<std::pair<std::size_t, std::size_t>> rev;
  for (std::size_t v = to; v != from; v = d.pred_of(from, v)) {
    rev.emplace_back(d.pred_of(from, v), v);
  }
  tree.edges.insert(tree.edges.end(), rev.rbegin(), rev.rend());
}

void unfold(const kernels::DistanceMatrix& d, const kernels::SteinerTable& t,
            std::uint32_t mask, std::size_t v, Tree& tree) {
  const std::size_t row = static_cast<std::size_t>(mask) * t.n;
  const std::size_t u = t.branch[row + v];
  append_path(d, v, u, tree);
  if (std::has_single_bit(mask)) return;
  const std::uint32_t s = t.split[row + u];
  unfold(d, t, s, u, tree);
  unfold(d, t, mask ^ s, u, tree);
}

// Optimal (cost, size) arborescence from START over `terminals`, which must
// all be reachable.
Tree solve(const MentalGraph& g, const std::vector<std::size_t>& terminals,
           Kernel kernel) {
  Tree tree;
  if (terminals.empty()) {
    tree.score = Score::zero();
    return tree;
  }
  const kernels::DistanceMatrix d = kernel == Kernel::serial
                                        ? kernels::all_pairs_serial(g)
                                        : kernels::all_pairs_parallel(g);
  if (terminals.size() == 1) {
    tree.score = d.at(MentalGraph::kStart, terminals[0]);
    if (tree.score.reachable) append_path(d, MentalGraph::kStart, terminals[0], tree);
    return tree;
  }
  const kernels::SteinerTable t = kernel == Kernel::serial
                                      ? kernels::steiner_dp_serial(d, terminals)
                                      : kernels::steiner_dp_parallel(d, terminals);
  const std::uint32_t full = (std::uint32_t{1} << terminals.size()) - 1;
  tree.score = t.at(full, MentalGraph::kStart);
  if (tree.score.reachable) unfold(d, t, full, MentalGraph::kStart, tree);
  return tree;
}

// Restricts `g` to `keep` (plus START) and solves for `mandatory`.
Tree solve_within(const MentalGraph& g, const std::vector<char>& keep,
                  const std::vector<std::size_t>& mandatory, Kernel kernel,
                  std::vector<std::size_t>& back) {
  std::set<std::string> atoms;
  std::map<std::pair<std::string, std::string>, Bits> edges;
  for (std::size_t v = 1; v < g.node_count(); ++v) {
    if (keep[v]) atoms.insert(g.name(v));
  }
  for (const auto& e : g.edges()) {
    if ((e.src != MentalGraph::kStart && !keep[e.src]) || !keep[e.dst]) continue;
    edges[{e.src == MentalGraph::kStart ? std::string() : g.name(e.src),
           g.name(e.dst)}] = e.cost;
  }
  MentalGraph sub = MentalGraph::from_edges(atoms, edges);
  back.assign(sub.node_count(), MentalGraph::kStart);
  for (std::size_t v = 1; v < sub.node_count(); ++v) {
    back[v] = *g.find(Atom{sub.name(v)});
  }
  std::vector<std::size_t> terms;
  for (std::size_t m : mandatory) terms.push_back(*sub.find(Atom{g.name(m)}));
  return solve(sub, terms, kernel);
}

// Among optimal trees, find the one whose sorted node list is smallest:
// fix the node list one position at a time, each time taking the smallest
// node for which an equally good tree still exists.
Tree lexicographic_refine(const MentalGraph& g, const std::vector<std::size_t>& goals,
                          const Tree& best, Kernel kernel) {
  const std::size_t n = g.node_count();
  const auto size = static_cast<std::size_t>(best.score.edges);
  std::vector<char> is_goal(n, 0);
  for (std::size_t t : goals) is_goal[t] = 1;
  std::vector<std::size_t> chosen;
  Tree current = best;
  std::size_t last = 0;
  while (chosen.size() < size) {
    bool advanced = false;
    for (std::size_t a = last + 1; a < n; ++a) {
      std::vector<char> keep(n, 0);
      for (std::size_t c : chosen) keep[c] = 1;
      for (std::size_t v = a; v < n; ++v) keep[v] = 1;
      std::vector<std::size_t> mandatory = chosen;
      mandatory.push_back(a);
      for (std::size_t t : goals) {
        if (t > a) mandatory.push_back(t);
      }
      std::sort(mandatory.begin(), mandatory.end());
      mandatory.erase(std::unique(mandatory.begin(), mandatory.end()),
                      mandatory.end());
      std::vector<std::size_t> back;
      Tree cand = solve_within(g, keep, mandatory, kernel, back);
      if (cand.score == best.score) {
        for (auto& [s, t] : cand.edges) {
          s = back[s];
          t = back[t];
        }
        current = std::move(cand);
        chosen.push_back(a);
        last = a;
        advanced = true;
        break;
      }
      // Skipping a goal leaves it uncoloured: nothing larger can work.
      if (is_goal[a]) break;
    }
    if (!advanced) break;
  }
  return current;
}

// Keeps the refinement to desk-scale instances.
constexpr std::size_t kRefineMaxNodes = 64;
constexpr std::size_t kRefineMaxSize = 12;

}  // namespace

CdResult cd(const MentalGraph& g, const GoalSet& goals, Kernel kernel) {
  if (!goals.events.empty()) {
    std::vector<std::string> evs;
    for (const auto& e : goals.events) evs.push_back(e.label());
    throw QueryError(QueryError::Code::mixed_query, Machine::epistemic,
                     "epistemic queries range over conditions only", evs);
  }
  std::vector<std::string> unknown;
  std::vector<std::size_t> terms;
  for (const Atom& a : goals.conditions) {
    if (auto v = g.find(a)) {
      terms.push_back(*v);
    } else {
      unknown.push_back(a.name);
    }
  }
  if (!unknown.empty()) {
    throw QueryError(QueryError::Code::unknown_atom, Machine::epistemic,
                     "unknown condition '" + unknown.front() + "'", unknown);
  }
  if (terms.size() > kernels::kMaxSteinerTerminals) {
    throw QueryError(QueryError::Code::too_many_goals, Machine::epistemic,
                     "at most " + std::to_string(kernels::kMaxSteinerTerminals) +
                         " goal conditions per query");
  }

  CdResult result;
  if (terms.empty()) {
    result.cost = Bits{};
    return result;
  }

  // Goals START cannot reach make the whole query unreachable.
  {
    std::vector<char> seen(g.node_count(), 0);
    std::vector<std::size_t> stack{MentalGraph::kStart};
    seen[MentalGraph::kStart] = 1;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t ei : g.out_edges(v)) {
        std::size_t w = g.edges()[ei].dst;
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    for (std::size_t t : terms) {
      if (!seen[t]) result.unreachable.push_back(Atom{g.name(t)});
    }
    if (!result.unreachable.empty()) {
      result.cost = Cost::infinite();
      return result;
    }
  }

  Tree tree = solve(g, terms, kernel);
  if (g.node_count() <= kRefineMaxNodes &&
      static_cast<std::size_t>(tree.score.edges) <= kRefineMaxSize) {
    tree = lexicographic_refine(g, terms, tree, kernel);
  }

  ColouringWitness& w = result.witness;
  Bits total{};
  for (const auto& [src, dst] : tree.edges) {
    const Bits c = *g.edge_cost(src, dst);
    const Atom node{g.name(dst)};
    w.coloured.insert(node);
    w.chosen_in_edge[node] = {g.name(src), c};
    total += c;
  }
  w.total = total;
  result.cost = total;
  return result;
}

std::vector<Descriptor> reachable_descriptors(const MentalGraph& g,
                                              const Atom& from) {
  const auto src = g.find(from);
  if (!src) {
    throw QueryError(QueryError::Code::unknown_atom, Machine::epistemic,
                     "unknown condition '" + from.name + "'", {from.name});
  }
  std::vector<Score> dist(g.node_count());
  std::vector<std::size_t> pred(g.node_count());
  // START has no in-edges, so a search from a condition only follows rules.
  kernels::shortest_row(g, *src, dist.data(), pred.data());
  std::vector<Descriptor> out;
  for (std::size_t v = 1; v < g.node_count(); ++v) {
    if (!dist[v].reachable) continue;
    out.push_back({Atom{g.name(v)}, Bits::from_micro(dist[v].cost), dist[v].edges});
  }
  std::sort(out.begin(), out.end(), [](const Descriptor& a, const Descriptor& b) {
    return std::tie(a.cost, a.hops, a.atom) < std::tie(b.cost, b.hops, b.atom);
  });
  return out;
}

}  // namespace complog

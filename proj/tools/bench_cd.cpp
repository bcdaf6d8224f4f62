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

// Times the serial reference kernels against the OpenMP ones on random
// mental graphs and checks that both agree.
//
//   complog_bench [nodes=150] [goals=9] [repeats=3] [seed=7]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "complog/epistemic.hpp"

namespace {

using Clock = std::chrono::steady_clock;

complog::MentalGraph random_graph(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> cost(0, 8);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::set<std::string> atoms;
  std::map<std::pair<std::string, std::string>, complog::Bits> edges;
  auto name = [](int i) { return "n" + std::to_string(i); };
  for (int i = 0; i < n; ++i) {
    atoms.insert(name(i));
    if (coin(rng) < 0.3) edges[{"", name(i)}] = complog::Bits::whole(cost(rng) + 4);
    for (int j = 0; j < n; ++j) {
      if (i != j && coin(rng) < 6.0 / n) {
        edges[{name(i), name(j)}] = complog::Bits::whole(cost(rng));
      }
    }
  }
  return complog::MentalGraph::from_edges(atoms, edges);
}

template <typename F>
double best_of(int repeats, F&& f) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto t0 = Clock::now();
    f();
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    best = std::min(best, ms);
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  const int nodes = argc > 1 ? std::atoi(argv[1]) : 150;
  const int goals = argc > 2 ? std::atoi(argv[2]) : 9;
  const int repeats = argc > 3 ? std::atoi(argv[3]) : 3;
  const unsigned seed = argc > 4 ? static_cast<unsigned>(std::atoi(argv[4])) : 7u;

  std::mt19937_64 rng(seed);
  const complog::MentalGraph g = random_graph(nodes, rng);
  std::vector<std::size_t> terms;
  for (int i = 0; i < goals; ++i) {
    terms.push_back(1 + static_cast<std::size_t>(i) * (g.node_count() - 1) / goals);
  }

  using namespace complog::kernels;
  DistanceMatrix ds, dp;
  const double apsp_s = best_of(repeats, [&] { ds = all_pairs_serial(g); });
  const double apsp_p = best_of(repeats, [&] { dp = all_pairs_parallel(g); });
  SteinerTable ts, tp;
  const double dp_s = best_of(repeats, [&] { ts = steiner_dp_serial(ds, terms); });
  const double dp_p = best_of(repeats, [&] { tp = steiner_dp_parallel(dp, terms); });

  const bool agree = ds.dist == dp.dist && ts.best == tp.best;
  std::printf("graph: %zu nodes, %zu edges, %d goals\n", g.node_count(),
              g.edges().size(), goals);
  std::printf("%-12s %12s %12s %8s\n", "kernel", "serial ms", "parallel ms", "speedup");
  std::printf("%-12s %12.3f %12.3f %8.2f\n", "all-pairs", apsp_s, apsp_p, apsp_s / apsp_p);
  std::printf("%-12s %12.3f %12.3f %8.2f\n", "steiner-dp", dp_s, dp_p, dp_s / dp_p);
  std::printf("results %s\n", agree ? "identical" : "DIFFER");
  return agree ? 0 : 1;
}

// Copyright 2026 The ipcut Authors.
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

// Serial versus OpenMP envelope recursion, and IPC versus the envelope, on
// seeded synthetic graphs with planted dense communities.

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "benchmark/benchmark.h"
#include "ipcut/graph.h"
#include "ipcut/ipc.h"
#include "ipcut/network.h"
#include "ipcut/parametric.h"

namespace ipcut {
namespace {

// Disjoint cliques of random sizes joined by a sparse random backbone.
InputGraph PlantedGraph(int cliques, int max_size, int extra, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size(4, max_size);
  std::vector<Edge> edges;
  int n = 0;
  for (int c = 0; c < cliques; ++c) {
    const int k = size(rng);
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) edges.push_back({n + i, n + j, 1});
    }
    n += k;
  }
  std::uniform_int_distribution<int> node(0, n - 1);
  for (int e = 0; e < extra; ++e) {
    int u = node(rng), v = node(rng);
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    edges.push_back({u, v, 1});
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  std::vector<Edge> unique;
  for (const Edge& e : edges) {
    if (!unique.empty() && unique.back().u == e.u && unique.back().v == e.v) {
      continue;
    }
    unique.push_back(e);
  }
  return InputGraph(n, std::move(unique));
}

const InputGraph& Graph(int64_t cliques) {
  static std::map<int64_t, InputGraph>* graphs =
      new std::map<int64_t, InputGraph>();
  auto it = graphs->find(cliques);
  if (it == graphs->end()) {
    it = graphs
             ->emplace(cliques, PlantedGraph(static_cast<int>(cliques), 60,
                                             static_cast<int>(cliques) * 200,
                                             17))
             .first;
  }
  return it->second;
}

void RunEnvelope(benchmark::State& state, bool parallel) {
  const InputGraph& g = Graph(state.range(0));
  const ParametricNetwork net = BuildDspNetwork(g);
  const auto [lo, hi] = DefaultDspInterval(g, /*full_envelope=*/true);
  FullyParametricOptions options;
  options.parallel = parallel;
  int64_t breakpoints = 0;
  for (auto _ : state) {
    const Envelope env = FullyParametric(net, lo, hi, options);
    breakpoints = static_cast<int64_t>(env.breakpoints.size());
    benchmark::DoNotOptimize(breakpoints);
  }
  state.counters["breakpoints"] = static_cast<double>(breakpoints);
  state.counters["m"] = static_cast<double>(g.m());
}

void BM_EnvelopeSerial(benchmark::State& state) { RunEnvelope(state, false); }
void BM_EnvelopeOpenMP(benchmark::State& state) { RunEnvelope(state, true); }

void BM_Ipc(benchmark::State& state) {
  const InputGraph& g = Graph(state.range(0));
  int64_t explored = 0;
  for (auto _ : state) {
    const RatioResult r = IpcMaximize(g);
    explored = static_cast<int64_t>(r.trace.size());
    benchmark::DoNotOptimize(explored);
  }
  state.counters["explored"] = static_cast<double>(explored);
}

BENCHMARK(BM_EnvelopeSerial)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnvelopeOpenMP)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Ipc)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace ipcut

BENCHMARK_MAIN();

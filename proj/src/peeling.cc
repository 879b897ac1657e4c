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

#include "ipcut/peeling.h"

#include <chrono>
#include <ostream>
#include <queue>

#include "ipcut/errors.h"

namespace ipcut {
namespace {

struct HeapEntry {
  int64_t key;  // load + current degree
  int64_t q;
  int32_t node;
};

// Orders entries so that std::priority_queue pops the smallest key / q,
// then the smallest node id.
struct LaterEntry {
  bool operator()(const HeapEntry& a, const HeapEntry& b) const {
    const Wide lhs = Wide{a.key} * b.q;
    const Wide rhs = Wide{b.key} * a.q;
    if (lhs != rhs) return lhs > rhs;
    return a.node > b.node;
  }
};

// One peeling pass. Updates `loads` and returns the best suffix.
struct PassOutcome {
  Rational density;
  int index = 0;
  std::vector<int> order;
};

PassOutcome PeelPass(const InputGraph& g, std::vector<int64_t>* loads) {
  const int n = g.n();
  std::vector<int64_t> degree(n);
  std::vector<char> removed(n, 0);
  std::priority_queue<HeapEntry, std::vector<HeapEntry>, LaterEntry> heap;
  for (int v = 0; v < n; ++v) {
    degree[v] = g.Degree(v);
    heap.push({(*loads)[v] + degree[v], g.q(v), v});
  }
  Wide internal = g.TotalEdgeWeight();
  Wide weight = g.TotalNodeWeight();
  PassOutcome out;
  out.order.reserve(n);
  out.density = Rational(internal, weight);
  out.index = 0;
  while (!heap.empty()) {
    const HeapEntry top = heap.top();
    heap.pop();
    const int v = top.node;
    if (removed[v] || top.key != (*loads)[v] + degree[v]) continue;
    removed[v] = 1;
    out.order.push_back(v);
    internal -= degree[v];
    weight -= g.q(v);
    (*loads)[v] += degree[v];
    for (const Neighbor& nb : g.Neighbors(v)) {
      if (removed[nb.node]) continue;
      degree[nb.node] -= nb.w;
      heap.push({(*loads)[nb.node] + degree[nb.node], g.q(nb.node), nb.node});
    }
    if (weight > 0) {
      const Rational d(internal, weight);
      if (d > out.density) {
        out.density = d;
        out.index = static_cast<int>(out.order.size());
      }
    }
  }
  return out;
}

}  // namespace

PeelResult GreedyPlusPlus(const InputGraph& g, int iterations) {
  const auto t0 = std::chrono::steady_clock::now();
  if (iterations < 1) throw ContractError("iterations must be at least 1");
  if (g.m() == 0) {
    throw DegenerateInputError("graph has no edges; every density is 0");
  }
  PeelResult result;
  result.loads.assign(g.n(), 0);
  std::vector<int> best_order;
  for (int pass = 0; pass < iterations; ++pass) {
    PassOutcome outcome = PeelPass(g, &result.loads);
    if (pass == 0 || outcome.density > result.best_density) {
      result.best_density = outcome.density;
      result.best_pass = pass;
      result.best_index = outcome.index;
      best_order = outcome.order;
    }
    result.pass_density.push_back(outcome.density);
    result.best_so_far.push_back(result.best_density);
    result.removal_order = std::move(outcome.order);
  }
  result.best_set = NodeSubset::Full(g.n());
  for (int k = 0; k < result.best_index; ++k) {
    result.best_set.Erase(best_order[k]);
  }
  result.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return result;
}

PeelResult CharikarGreedy(const InputGraph& g) { return GreedyPlusPlus(g, 1); }

void WritePeelCsv(std::ostream& out, const PeelResult& result, int precision) {
  out << "iteration,density,density_exact,best_density,best_density_exact\n";
  for (size_t k = 0; k < result.pass_density.size(); ++k) {
    out << k + 1 << "," << result.pass_density[k].ToDecimal(precision) << ","
        << result.pass_density[k].ToString() << ","
        << result.best_so_far[k].ToDecimal(precision) << ","
        << result.best_so_far[k].ToString() << "\n";
  }
}

}  // namespace ipcut

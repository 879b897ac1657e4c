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

// Greedy peeling baselines for the densest subgraph problem: Charikar's
// minimum-degree peeling and its iterated, load-augmented variant Greedy++.

#ifndef IPCUT_PEELING_H_
#define IPCUT_PEELING_H_

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "ipcut/graph.h"
#include "ipcut/rational.h"

namespace ipcut {

struct PeelResult {
  // Best suffix over all passes.
  NodeSubset best_set;
  Rational best_density;
  // Pass (0-based) and position in its removal order where best_set starts.
  int best_pass = 0;
  int best_index = 0;
  // Removal order of the last pass.
  std::vector<int> removal_order;
  // Loads after the last pass (sum of peel-time degrees).
  std::vector<int64_t> loads;
  // Best suffix density found within each pass, and the running best.
  std::vector<Rational> pass_density;
  std::vector<Rational> best_so_far;
  double wall_time_seconds = 0;
};

// Peels a node minimizing d_v / q_v (current weighted degree), smallest id
// first on ties, and returns the densest suffix. Throws DegenerateInputError
// for an edgeless graph.
PeelResult CharikarGreedy(const InputGraph& g);

// `iterations` passes; pass k peels by minimum (load_v + d_v) / q_v and then
// adds each node's peel-time degree to its load. One pass equals
// CharikarGreedy.
PeelResult GreedyPlusPlus(const InputGraph& g, int iterations);

// Header "iteration,density,density_exact,best_density,best_density_exact".
void WritePeelCsv(std::ostream& out, const PeelResult& result, int precision);

}  // namespace ipcut

#endif  // IPCUT_PEELING_H_

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

// Incremental parametric cut: certified optimization of the density ratio
// C(S,S)/q(S) (maximization) and the conductance* ratio C(S, not S)/q(S)
// over subsets of V \ seed (minimization), plus the single lambda-problem
// oracle, an independent certificate check and an exhaustive reference.

#ifndef IPCUT_IPC_H_
#define IPCUT_IPC_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "ipcut/graph.h"
#include "ipcut/network.h"
#include "ipcut/rational.h"

namespace ipcut {

enum class RatioSense { kMaximizeDensity, kMinimizeConductance };

struct TraceEntry {
  Rational lambda;
  // Optimal lambda-problem value at lambda, multiplied by lambda.den().
  Wide improve = 0;
  // |S_k|, the set whose ratio is lambda.
  int set_size = 0;
};

struct RatioResult {
  // Over the graph's nodes.
  NodeSubset optimal_set;
  Rational ratio;
  std::vector<TraceEntry> trace;
  bool certified = false;
  double wall_time_seconds = 0;
  int64_t cut_solve_count = 0;
  // False when the shared sweep scale overflowed and every lambda-problem
  // was solved cold.
  bool warm_started = true;
};

struct LambdaProblemResult {
  // max excess (densest subgraph, s-excess) or min C(S,S') - lambda q(S)
  // (conductance*), multiplied by lambda.den().
  Wide improve = 0;
  // Maximal optimal set, over the network's nodes.
  NodeSubset argset;
};

// Cold solve of the lambda-problem of `net`. A strict improvement exists iff
// improve > 0 for maximization networks and improve < 0 for conductance*.
LambdaProblemResult SolveLambdaProblem(const ParametricNetwork& net,
                                       const Rational& lambda);

struct IpcOptions {
  // Optional starting set (graph node ids). Defaults to V, resp. V \ seed.
  std::optional<NodeSubset> start;
};

// Maximum density subgraph. Throws DegenerateInputError without edges.
RatioResult IpcMaximize(const InputGraph& g, const IpcOptions& options = {});

// Minimum conductance* over nonempty S within V \ seed. Throws DomainError
// for an invalid seed and DegenerateInputError if V \ seed has no weight.
RatioResult IpcMinimize(const InputGraph& g, const NodeSubset& seed,
                        const IpcOptions& options = {});

// Recomputes ratio(S), solves one lambda-problem cold and checks that no
// strictly better set exists.
bool VerifyCertificate(const InputGraph& g, const NodeSubset& s,
                       RatioSense sense,
                       const std::optional<NodeSubset>& seed = std::nullopt);

// Exhaustive search over all nonempty admissible subsets (n <= 20). Ties
// are broken toward the larger set, then toward the lexicographically
// smallest membership bit string. Throws GuardError for n > 20.
RatioResult BruteForceBestRatio(
    const InputGraph& g, RatioSense sense,
    const std::optional<NodeSubset>& seed = std::nullopt);

// Header "k,lambda_exact,lambda_decimal,improve,set_size".
void WriteTraceCsv(std::ostream& out, const RatioResult& result,
                   int precision);

}  // namespace ipcut

#endif  // IPCUT_IPC_H_

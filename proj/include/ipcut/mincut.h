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

// Push-relabel minimum s,t-cut solver with continuation: after a solve the
// terminal capacities may be moved monotonically (source capacities one way,
// sink capacities the other) and the cut recomputed from the retained
// preflow and distance labels instead of from scratch.
//
// The solver runs highest-label push-relabel with global relabeling and the
// gap heuristic. The first phase stops at a maximum preflow, which already
// determines the maximal source set (nodes that cannot reach the sink). A
// second phase returns the remaining excess to the source when a flow, or the
// minimal source set, is needed.
//
// Continuation requires source capacities to be nondecreasing and sink
// capacities nonincreasing. Sweeps in the opposite direction are handled by
// running on the reversed network (source and sink swapped, arcs reversed),
// in which the roles of the two extremal cuts swap as well.

#ifndef IPCUT_MINCUT_H_
#define IPCUT_MINCUT_H_

#include <cstdint>
#include <utility>
#include <vector>

#include "ipcut/graph.h"
#include "ipcut/network.h"
#include "ipcut/rational.h"

namespace ipcut {

enum class ExtremalCut { kMaximalSource, kMinimalSource };

// Direction in which source capacities move between consecutive solves of
// one solver instance.
enum class SweepDirection { kSourceNondecreasing, kSourceNonincreasing };

struct CutSolution {
  // Over the network's non-terminal nodes.
  NodeSubset source_set;
  // Exact capacity of the cut at the instantiated scale.
  Wide cut_value = 0;
  // Lambda of the instantiation, as the (unreduced) pair p / q.
  Wide p = 0;
  Wide q = 1;
  ExtremalCut extremal = ExtremalCut::kMaximalSource;

  Rational lambda() const { return Rational(p, q); }
};

class MinCutSolver {
 public:
  // Builds the solver state and runs the initial (cold) solve.
  explicit MinCutSolver(
      InstantiatedNetwork net,
      SweepDirection direction = SweepDirection::kSourceNondecreasing);

  MinCutSolver(MinCutSolver&&) = default;
  MinCutSolver& operator=(MinCutSolver&&) = default;

  // Cut of the current network.
  CutSolution Cut(ExtremalCut which = ExtremalCut::kMaximalSource);

  // Replaces the network by `next`, which must have the same internal arcs
  // and terminal capacities moved in the declared sweep direction, and
  // returns its cut. Throws ContractError otherwise.
  CutSolution Continue(const InstantiatedNetwork& next,
                       ExtremalCut which = ExtremalCut::kMaximalSource);
  // Same as Continue, but only terminal capacities are given; the scale q of
  // the current network is kept and p is the new lambda numerator.
  CutSolution ContinueTerminals(const std::vector<int64_t>& source_caps,
                                const std::vector<int64_t>& sink_caps, Wide p,
                                ExtremalCut which = ExtremalCut::kMaximalSource);

  // Value of a maximum flow of the current network.
  Wide MaxFlowValue() const { return flow_value_; }

  const InstantiatedNetwork& network() const { return net_; }
  SweepDirection direction() const { return direction_; }
  // Distance labels of the internal engine (non-terminal nodes first, then
  // the engine's source and sink). Exposed for invariant tests.
  const std::vector<int32_t>& labels() const { return label_; }
  // Number of solves (initial plus continuations) performed.
  int64_t solve_count() const { return solve_count_; }

 private:
  bool reversed() const {
    return direction_ == SweepDirection::kSourceNonincreasing;
  }
  void Build();
  void ApplyTerminals(const std::vector<int64_t>& engine_source,
                      const std::vector<int64_t>& engine_sink);
  void RunPhaseOne();
  void RunPhaseTwo();
  void GlobalRelabelToSink();
  void GlobalRelabelToSource();
  void Discharge(int v);
  void DischargeToSource(int v, std::vector<int>* queue);
  void Gap(int empty_label);
  void BucketInsert(int v);
  void BucketRemove(int v);
  void Activate(int v);
  // Engine node sets.
  NodeSubset CannotReachSink() const;
  NodeSubset ReachableFromSource() const;

  InstantiatedNetwork net_;
  SweepDirection direction_;
  bool phase_two_done_ = false;
  int64_t solve_count_ = 0;
  Wide flow_value_ = 0;

  // Engine graph: nodes 0..n-1, source n, sink n+1.
  int num_nodes_ = 0;
  int source_ = 0;
  int sink_ = 0;
  std::vector<int64_t> first_arc_;
  std::vector<int32_t> head_;
  std::vector<int64_t> mate_;
  std::vector<int64_t> residual_;
  std::vector<int64_t> source_arc_;  // Engine source -> i.
  std::vector<int64_t> sink_arc_;    // i -> engine sink.
  std::vector<int64_t> engine_source_cap_;
  std::vector<int64_t> engine_sink_cap_;

  std::vector<int32_t> label_;
  std::vector<int64_t> excess_;
  std::vector<int64_t> current_arc_;

  // Buckets for labels below num_nodes_: active nodes (singly linked) and
  // all nodes (doubly linked, for the gap heuristic).
  std::vector<int32_t> active_head_;
  std::vector<int32_t> active_next_;
  std::vector<int32_t> all_head_;
  std::vector<int32_t> all_next_;
  std::vector<int32_t> all_prev_;
  int max_active_ = -1;
  int max_label_ = -1;
  int64_t work_since_relabel_ = 0;
};

// Cold solve; the returned solver can be continued.
std::pair<CutSolution, MinCutSolver> SolveMinCut(
    const InstantiatedNetwork& net,
    ExtremalCut which = ExtremalCut::kMaximalSource,
    SweepDirection direction = SweepDirection::kSourceNondecreasing);

}  // namespace ipcut

#endif  // IPCUT_MINCUT_H_

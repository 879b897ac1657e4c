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

// Parametric s,t-networks whose terminal capacities are clipped affine
// functions of lambda, the builders for the densest-subgraph, conductance*
// and s-excess problems, and exact integer instantiation at rational lambda.

#ifndef IPCUT_NETWORK_H_
#define IPCUT_NETWORK_H_

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "ipcut/graph.h"
#include "ipcut/rational.h"

namespace ipcut {

// capacity(lambda) = max(0, a + b * lambda).
struct TerminalLine {
  int64_t a = 0;
  int64_t b = 0;
};

struct NetworkArc {
  int32_t tail;
  int32_t head;
  int64_t capacity;
};

// How source capacities move as lambda grows; sink capacities move the
// other way.
enum class SourceTrend { kNonincreasing, kNondecreasing, kConstant };

enum class ProblemKind { kDensest, kConductance, kSExcess };

// Non-terminal nodes are 0..n-1; the source and sink are implicit. Every
// node owns exactly one source arc and one sink arc, possibly of capacity 0,
// so the arc set never depends on lambda.
class ParametricNetwork {
 public:
  // Throws ValidationError on negative internal capacities, out-of-range
  // endpoints or terminal lines that contradict `trend`.
  ParametricNetwork(ProblemKind kind, SourceTrend trend, int n,
                    std::vector<NetworkArc> arcs,
                    std::vector<TerminalLine> source_lines,
                    std::vector<TerminalLine> sink_lines,
                    std::vector<int> graph_nodes = {});

  ProblemKind kind() const { return kind_; }
  SourceTrend trend() const { return trend_; }
  int n() const { return n_; }
  // Internal arcs plus one source and one sink arc per node.
  int64_t NumArcs() const {
    return static_cast<int64_t>(arcs_.size()) + 2 * static_cast<int64_t>(n_);
  }
  const std::vector<NetworkArc>& arcs() const { return arcs_; }
  const TerminalLine& source_line(int i) const { return source_lines_[i]; }
  const TerminalLine& sink_line(int i) const { return sink_lines_[i]; }
  // Graph node represented by network node i.
  int graph_node(int i) const { return graph_nodes_[i]; }
  const std::vector<int>& graph_nodes() const { return graph_nodes_; }

  // True when source(lambda) - sink(lambda) is affine in lambda for every
  // node over the whole real line; otherwise it is affine for lambda >= 0.
  bool excess_affine_everywhere() const { return excess_affine_everywhere_; }

  // For a source set S the cut capacity at lambda is
  //   sum_i source_i(lambda) - (Intercept(S) + Slope(S) * lambda),
  // where Intercept(S) + Slope(S) * lambda is the excess of S: the sum over
  // S of source_i(lambda) - sink_i(lambda), minus u(S -> not S). Valid
  // wherever the excess is affine.
  Wide ExcessIntercept(const NodeSubset& s) const;
  Wide ExcessSlope(const NodeSubset& s) const;
  // Sum over nodes of |net slope|: bounds |Slope(S) - Slope(T)| for nested
  // S, T and hence the denominator of every breakpoint.
  Wide SlopeBudget() const;
  // Excess of S at lambda = p / q, multiplied by q.
  Wide ScaledExcess(const NodeSubset& s, Wide p, Wide q) const;
  // Cut capacity of ({s} + S, rest) at lambda = p / q, multiplied by q,
  // computed directly from the terminal lines.
  Wide ScaledCut(const NodeSubset& s, Wide p, Wide q) const;

 private:
  ProblemKind kind_;
  SourceTrend trend_;
  int n_;
  std::vector<NetworkArc> arcs_;
  std::vector<TerminalLine> source_lines_;
  std::vector<TerminalLine> sink_lines_;
  std::vector<int> graph_nodes_;
  // Per node: source(lambda) - sink(lambda) = net_a + net_b * lambda.
  std::vector<TerminalLine> net_lines_;
  bool excess_affine_everywhere_ = true;
};

// All capacities of a ParametricNetwork at lambda = p / q, multiplied by q.
// Capacities fit in int64 and their grand total stays below 2^62, so no
// flow quantity derived from them can overflow.
struct InstantiatedNetwork {
  int n = 0;
  std::vector<NetworkArc> arcs;
  std::vector<int64_t> source_caps;
  std::vector<int64_t> sink_caps;
  Wide p = 0;
  Wide q = 1;

  Rational lambda() const { return Rational(p, q); }
};

// Lambda given as an explicit (p, q) pair with q > 0; the pair is not
// reduced, so the scale q is exactly the one requested.
InstantiatedNetwork Instantiate(const ParametricNetwork& net, Wide p, Wide q);
InstantiatedNetwork Instantiate(const ParametricNetwork& net,
                                const Rational& lambda);
// Terminal capacities only, written into the given vectors (resized to n).
void InstantiateTerminals(const ParametricNetwork& net, Wide p, Wide q,
                          std::vector<int64_t>* source_caps,
                          std::vector<int64_t>* sink_caps);
// Throws OverflowError unless all capacities of `net` at scale q (and the
// given terminal capacities) stay within the solver budget.
void CheckCapacityBudget(const ParametricNetwork& net, Wide q,
                         const std::vector<int64_t>& source_caps,
                         const std::vector<int64_t>& sink_caps);

// Capacity of the cut ({s} + S, rest).
Wide CutCapacity(const InstantiatedNetwork& net, const NodeSubset& source_set);

// Densest subgraph: internal arc (i, j) of capacity w_ij for every edge with
// i < j, source arc max(0, d_i^+ - lambda q_i), sink arc
// max(0, lambda q_i - d_i^+).
ParametricNetwork BuildDspNetwork(const InputGraph& g);

// Conductance*: nodes of V0 = V \ seed only (ascending graph id), two
// opposite arcs per edge inside V0, source arc lambda q_i and constant sink
// arc equal to the weight between i and the seed. Throws DomainError when
// the seed is empty or covers V.
ParametricNetwork BuildConductanceNetwork(const InputGraph& g,
                                          const NodeSubset& seed);

// Maximum s-excess: s -> i of capacity w_i for w_i > 0, i -> t of capacity
// -w_i for w_i < 0 and the given constraint arcs.
ParametricNetwork BuildSExcessNetwork(const std::vector<int64_t>& weights,
                                      std::vector<NetworkArc> constraints);

// DIMACS max-flow format. Nodes are numbered 1..n, the source is n+1 and the
// sink n+2; zero-capacity terminal arcs are written too.
void WriteDimacs(std::ostream& out, const InstantiatedNetwork& net);

}  // namespace ipcut

#endif  // IPCUT_NETWORK_H_

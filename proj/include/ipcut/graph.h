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

// Undirected weighted graphs with positive integer node weights, the SNAP
// edge-list loader, and exact evaluation of the density and conductance*
// ratios of a node subset.

#ifndef IPCUT_GRAPH_H_
#define IPCUT_GRAPH_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ipcut/rational.h"

namespace ipcut {

// Bitset over the dense node range [0, universe) with a cached cardinality.
class NodeSubset {
 public:
  NodeSubset() = default;
  explicit NodeSubset(int universe);
  static NodeSubset Full(int universe);
  static NodeSubset FromMembers(int universe, std::span<const int> members);

  int universe() const { return universe_; }
  int size() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool Contains(int i) const {
    return (words_[i >> 6] >> (i & 63)) & 1;
  }
  void Insert(int i);
  void Erase(int i);

  // Members in ascending order.
  std::vector<int> Members() const;
  bool IsSubsetOf(const NodeSubset& other) const;
  NodeSubset Complement() const;
  // Number of set bits, recomputed from the words (for invariant checks).
  int RecountBits() const;

  // Lexicographic order on the bit strings b_0 b_1 ... b_{n-1}; the set with
  // the first differing bit equal to 0 is smaller.
  bool LexLess(const NodeSubset& other) const;

  friend bool operator==(const NodeSubset& a, const NodeSubset& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

 private:
  int universe_ = 0;
  int count_ = 0;
  std::vector<uint64_t> words_;
};

struct Edge {
  int32_t u;
  int32_t v;
  int64_t w;
};

struct Neighbor {
  int32_t node;
  int64_t w;
};

// Immutable simple undirected graph on nodes 0..n-1. Edges satisfy u < v,
// are unique per unordered pair and carry positive integer weights; node
// weights are positive. Every node keeps the identifier it had in the input
// file so that results can be reported in original ids.
class InputGraph {
 public:
  InputGraph() = default;
  // Validates the invariants and builds the adjacency index. Edges may be
  // given in either orientation but must be simple. Throws ValidationError.
  // Empty node_weights means q = 1; empty original_ids means identity.
  InputGraph(int n, std::vector<Edge> edges,
             std::vector<int64_t> node_weights = {},
             std::vector<int64_t> original_ids = {});

  int n() const { return n_; }
  int64_t m() const { return static_cast<int64_t>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int64_t>& node_weights() const { return node_weights_; }
  int64_t q(int i) const { return node_weights_[i]; }

  std::span<const Neighbor> Neighbors(int i) const {
    return {adjacency_.data() + offsets_[i],
            adjacency_.data() + offsets_[i + 1]};
  }
  // Weighted degree d_i.
  int64_t Degree(int i) const { return degree_[i]; }
  // Weighted out-degree d_i^+ when every edge is oriented from its lower to
  // its higher endpoint.
  int64_t OutDegree(int i) const { return out_degree_[i]; }
  int64_t MaxDegree() const;
  int64_t TotalEdgeWeight() const { return total_edge_weight_; }
  Wide TotalNodeWeight() const;

  int64_t OriginalId(int i) const { return original_ids_[i]; }
  const std::vector<int64_t>& original_ids() const { return original_ids_; }
  // Dense id of an original identifier, if present.
  std::optional<int> FindNode(int64_t original_id) const;

  // Copies with replaced weights. The adjacency structure is shared by value.
  InputGraph WithNodeWeights(std::vector<int64_t> node_weights) const;
  // q_i := d_i. Throws ValidationError if some node is isolated.
  InputGraph WithDegreeNodeWeights() const;
  // Every edge weight set to 1.
  InputGraph WithUnitEdgeWeights() const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int64_t> node_weights_;
  std::vector<int64_t> original_ids_;
  std::vector<int64_t> offsets_;
  std::vector<Neighbor> adjacency_;
  std::vector<int64_t> degree_;
  std::vector<int64_t> out_degree_;
  int64_t total_edge_weight_ = 0;
  std::vector<std::pair<int64_t, int>> sorted_ids_;
};

// Reads a SNAP-style edge list: one "u v" (or "u v w" when weighted) per
// line, '#' starts a comment line. Self-loops are dropped, direction is
// ignored and parallel edges are merged: unweighted input counts their
// multiplicity, weighted input sums their weights. Dense ids follow the
// order of first appearance, including ids that only occur in self-loops.
// Unweighted mode ignores any columns after the second.
InputGraph LoadEdgeList(std::istream& in, bool weighted);
InputGraph LoadEdgeListFile(const std::string& path, bool weighted);

// Reads "id q" lines ('#' comments allowed). Nodes that are not listed keep
// their current weight. Unknown ids and non-positive weights are rejected.
InputGraph ApplyNodeWeights(const InputGraph& g, std::istream& in);

// Subgraph induced by `nodes`, renumbered in ascending dense-id order and
// keeping original ids and node weights.
InputGraph InducedSubgraph(const InputGraph& g, const NodeSubset& nodes);

// Component label per node (labels in order of smallest member) and count.
std::vector<int> ConnectedComponents(const InputGraph& g, int* count);

// C(S,S): total weight of edges with both ends in S.
Wide InternalWeight(const InputGraph& g, const NodeSubset& s);
// C(S, V \ S).
Wide BoundaryWeight(const InputGraph& g, const NodeSubset& s);
// Total weight of edges between S and T (S and T disjoint).
Wide CrossWeight(const InputGraph& g, const NodeSubset& s,
                 const NodeSubset& t);
// q(S).
Wide NodeWeight(const InputGraph& g, const NodeSubset& s);
// d(S).
Wide DegreeSum(const InputGraph& g, const NodeSubset& s);

// C(S,S) / q(S). Throws UndefinedRatioError for empty S.
Rational Density(const InputGraph& g, const NodeSubset& s);
// C(S, V \ S) / q(S) for nonempty S contained in v0.
Rational ConductanceStarValue(const InputGraph& g, const NodeSubset& s,
                              const NodeSubset& v0);

}  // namespace ipcut

#endif  // IPCUT_GRAPH_H_

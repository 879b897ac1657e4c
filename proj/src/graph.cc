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

#include "ipcut/graph.h"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <queue>
#include <unordered_map>
#include <utility>

#include "ipcut/errors.h"

namespace ipcut {
namespace {

constexpr int64_t kWeightBudget = int64_t{1} << 62;

// Splits `line` into whitespace separated tokens.
std::vector<std::string_view> Tokenize(std::string_view line) {
  std::vector<std::string_view> tokens;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    size_t j = i;
    while (j < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[j])))
      ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

bool IsCommentOrBlank(std::string_view line) {
  for (char c : line) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '#';
  }
  return true;
}

int64_t ParseId(std::string_view token, int64_t line) {
  int64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError("malformed node id '" + std::string(token) + "'", line);
  }
  return value;
}

// Positive integer weight; decimals are accepted only when integral.
int64_t ParseWeight(std::string_view token, int64_t line) {
  Rational value;
  try {
    value = Rational::Parse(std::string(token));
  } catch (const Error&) {
    throw ParseError("malformed weight '" + std::string(token) + "'", line);
  }
  if (value.den() != 1) {
    throw ValidationError("line " + std::to_string(line) +
                          ": fractional weight '" + std::string(token) +
                          "'; scale weights to integers first");
  }
  if (value.num() <= 0) {
    throw ValidationError("line " + std::to_string(line) +
                          ": weight must be positive, got '" +
                          std::string(token) + "'");
  }
  if (value.num() > kWeightBudget) {
    throw OverflowError("line " + std::to_string(line) + ": weight '" +
                        std::string(token) +
                        "' is too large; reduce weight magnitudes");
  }
  return static_cast<int64_t>(value.num());
}

}  // namespace

NodeSubset::NodeSubset(int universe)
    : universe_(universe), count_(0), words_((universe + 63) / 64, 0) {}

NodeSubset NodeSubset::Full(int universe) {
  NodeSubset s(universe);
  for (int i = 0; i < universe; ++i) s.Insert(i);
  return s;
}

NodeSubset NodeSubset::FromMembers(int universe, std::span<const int> members) {
  NodeSubset s(universe);
  for (int i : members) {
    if (i < 0 || i >= universe) {
      throw DomainError("node " + std::to_string(i) + " outside [0, " +
                        std::to_string(universe) + ")");
    }
    s.Insert(i);
  }
  return s;
}

void NodeSubset::Insert(int i) {
  uint64_t& word = words_[i >> 6];
  const uint64_t bit = uint64_t{1} << (i & 63);
  if (!(word & bit)) {
    word |= bit;
    ++count_;
  }
}

void NodeSubset::Erase(int i) {
  uint64_t& word = words_[i >> 6];
  const uint64_t bit = uint64_t{1} << (i & 63);
  if (word & bit) {
    word &= ~bit;
    --count_;
  }
}

std::vector<int> NodeSubset::Members() const {
  std::vector<int> members;
  members.reserve(count_);
  for (size_t w = 0; w < words_.size(); ++w) {
    uint64_t word = words_[w];
    while (word) {
      members.push_back(static_cast<int>(w * 64 + std::countr_zero(word)));
      word &= word - 1;
    }
  }
  return members;
}

bool NodeSubset::IsSubsetOf(const NodeSubset& other) const {
  if (universe_ != other.universe_) return false;
  for (size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] & ~other.words_[w]) return false;
  }
  return true;
}

NodeSubset NodeSubset::Complement() const {
  NodeSubset c(universe_);
  for (int i = 0; i < universe_; ++i) {
    if (!Contains(i)) c.Insert(i);
  }
  return c;
}

int NodeSubset::RecountBits() const {
  int total = 0;
  for (uint64_t word : words_) total += std::popcount(word);
  return total;
}

bool NodeSubset::LexLess(const NodeSubset& other) const {
  for (size_t w = 0; w < words_.size(); ++w) {
    const uint64_t diff = words_[w] ^ other.words_[w];
    if (diff) {
      const uint64_t lowest = diff & (~diff + 1);
      return (words_[w] & lowest) == 0;
    }
  }
  return false;
}

InputGraph::InputGraph(int n, std::vector<Edge> edges,
                       std::vector<int64_t> node_weights,
                       std::vector<int64_t> original_ids)
    : n_(n),
      edges_(std::move(edges)),
      node_weights_(std::move(node_weights)),
      original_ids_(std::move(original_ids)) {
  if (n_ < 0) throw ValidationError("negative node count");
  if (node_weights_.empty()) node_weights_.assign(n_, 1);
  if (original_ids_.empty()) {
    original_ids_.resize(n_);
    for (int i = 0; i < n_; ++i) original_ids_[i] = i;
  }
  if (static_cast<int>(node_weights_.size()) != n_ ||
      static_cast<int>(original_ids_.size()) != n_) {
    throw ValidationError("node weight or id list has the wrong length");
  }
  Wide total_q = 0;
  for (int64_t q : node_weights_) {
    if (q <= 0) throw ValidationError("node weights must be positive");
    total_q += q;
    if (total_q > kWeightBudget) {
      throw OverflowError("total node weight too large; reduce weights");
    }
  }
  Wide total_w = 0;
  for (Edge& e : edges_) {
    if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_) {
      throw ValidationError("edge endpoint out of range");
    }
    if (e.u == e.v) throw ValidationError("self-loops are not allowed");
    if (e.w <= 0) throw ValidationError("edge weights must be positive");
    if (e.u > e.v) std::swap(e.u, e.v);
    total_w += e.w;
    if (total_w > kWeightBudget) {
      throw OverflowError("total edge weight too large; reduce weights");
    }
  }
  total_edge_weight_ = static_cast<int64_t>(total_w);
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  for (size_t k = 1; k < edges_.size(); ++k) {
    if (edges_[k].u == edges_[k - 1].u && edges_[k].v == edges_[k - 1].v) {
      throw ValidationError("parallel edges are not allowed");
    }
  }
  offsets_.assign(n_ + 1, 0);
  degree_.assign(n_, 0);
  out_degree_.assign(n_, 0);
  for (const Edge& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
    degree_[e.u] += e.w;
    degree_[e.v] += e.w;
    out_degree_[e.u] += e.w;
  }
  for (int i = 0; i < n_; ++i) offsets_[i + 1] += offsets_[i];
  adjacency_.resize(2 * edges_.size());
  std::vector<int64_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : edges_) {
    adjacency_[fill[e.u]++] = {e.v, e.w};
    adjacency_[fill[e.v]++] = {e.u, e.w};
  }
  sorted_ids_.resize(n_);
  for (int i = 0; i < n_; ++i) sorted_ids_[i] = {original_ids_[i], i};
  std::sort(sorted_ids_.begin(), sorted_ids_.end());
  for (int i = 1; i < n_; ++i) {
    if (sorted_ids_[i].first == sorted_ids_[i - 1].first) {
      throw ValidationError("duplicate original node id");
    }
  }
}

int64_t InputGraph::MaxDegree() const {
  int64_t best = 0;
  for (int64_t d : degree_) best = std::max(best, d);
  return best;
}

Wide InputGraph::TotalNodeWeight() const {
  Wide total = 0;
  for (int64_t q : node_weights_) total += q;
  return total;
}

std::optional<int> InputGraph::FindNode(int64_t original_id) const {
  auto it = std::lower_bound(sorted_ids_.begin(), sorted_ids_.end(),
                             std::make_pair(original_id, -1));
  if (it == sorted_ids_.end() || it->first != original_id) return std::nullopt;
  return it->second;
}

InputGraph InputGraph::WithNodeWeights(std::vector<int64_t> node_weights) const {
  return InputGraph(n_, edges_, std::move(node_weights), original_ids_);
}

InputGraph InputGraph::WithDegreeNodeWeights() const {
  for (int i = 0; i < n_; ++i) {
    if (degree_[i] == 0) {
      throw ValidationError("node " + std::to_string(original_ids_[i]) +
                            " is isolated; degree node weights need d > 0");
    }
  }
  return WithNodeWeights(degree_);
}

InputGraph InputGraph::WithUnitEdgeWeights() const {
  std::vector<Edge> unit = edges_;
  for (Edge& e : unit) e.w = 1;
  return InputGraph(n_, std::move(unit), node_weights_, original_ids_);
}

InputGraph LoadEdgeList(std::istream& in, bool weighted) {
  std::unordered_map<int64_t, int> dense;
  std::vector<int64_t> original_ids;
  std::vector<Edge> raw;
  auto intern = [&](int64_t id) {
    auto [it, inserted] =
        dense.emplace(id, static_cast<int>(original_ids.size()));
    if (inserted) original_ids.push_back(id);
    return it->second;
  };
  std::string line;
  int64_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (IsCommentOrBlank(line)) continue;
    const std::vector<std::string_view> tokens = Tokenize(line);
    if (tokens.size() < 2 || (weighted && tokens.size() != 3)) {
      throw ParseError(weighted ? "expected 'u v w'" : "expected 'u v'",
                       line_number);
    }
    const int64_t a = ParseId(tokens[0], line_number);
    const int64_t b = ParseId(tokens[1], line_number);
    const int64_t w = weighted ? ParseWeight(tokens[2], line_number) : 1;
    const int u = intern(a);
    const int v = intern(b);
    if (u == v) continue;
    raw.push_back({std::min(u, v), std::max(u, v), w});
  }
  if (in.bad()) throw IoError("read error while loading edge list");
  if (raw.empty()) throw ValidationError("graph has no edges");
  std::sort(raw.begin(), raw.end(), [](const Edge& x, const Edge& y) {
    return x.u != y.u ? x.u < y.u : x.v < y.v;
  });
  std::vector<Edge> edges;
  for (const Edge& e : raw) {
    if (!edges.empty() && edges.back().u == e.u && edges.back().v == e.v) {
      edges.back().w += e.w;
      if (edges.back().w > kWeightBudget) {
        throw OverflowError("merged edge weight too large");
      }
    } else {
      edges.push_back(e);
    }
  }
  const int n = static_cast<int>(original_ids.size());
  return InputGraph(n, std::move(edges), {}, std::move(original_ids));
}

InputGraph LoadEdgeListFile(const std::string& path, bool weighted) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  return LoadEdgeList(in, weighted);
}

InputGraph ApplyNodeWeights(const InputGraph& g, std::istream& in) {
  std::vector<int64_t> q = g.node_weights();
  std::string line;
  int64_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (IsCommentOrBlank(line)) continue;
    const std::vector<std::string_view> tokens = Tokenize(line);
    if (tokens.size() != 2) throw ParseError("expected 'id q'", line_number);
    const int64_t id = ParseId(tokens[0], line_number);
    const int64_t weight = ParseWeight(tokens[1], line_number);
    const std::optional<int> node = g.FindNode(id);
    if (!node) {
      throw ValidationError("line " + std::to_string(line_number) +
                            ": unknown node id " + std::to_string(id));
    }
    q[*node] = weight;
  }
  return g.WithNodeWeights(std::move(q));
}

InputGraph InducedSubgraph(const InputGraph& g, const NodeSubset& nodes) {
  std::vector<int> index(g.n(), -1);
  std::vector<int64_t> q, ids;
  for (int i : nodes.Members()) {
    index[i] = static_cast<int>(q.size());
    q.push_back(g.q(i));
    ids.push_back(g.OriginalId(i));
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (index[e.u] >= 0 && index[e.v] >= 0) {
      edges.push_back({index[e.u], index[e.v], e.w});
    }
  }
  const int n = static_cast<int>(q.size());
  return InputGraph(n, std::move(edges), std::move(q), std::move(ids));
}

std::vector<int> ConnectedComponents(const InputGraph& g, int* count) {
  std::vector<int> label(g.n(), -1);
  int next = 0;
  std::vector<int> queue;
  for (int root = 0; root < g.n(); ++root) {
    if (label[root] >= 0) continue;
    label[root] = next;
    queue.assign(1, root);
    for (size_t head = 0; head < queue.size(); ++head) {
      for (const Neighbor& nb : g.Neighbors(queue[head])) {
        if (label[nb.node] < 0) {
          label[nb.node] = next;
          queue.push_back(nb.node);
        }
      }
    }
    ++next;
  }
  if (count) *count = next;
  return label;
}

Wide InternalWeight(const InputGraph& g, const NodeSubset& s) {
  Wide total = 0;
  for (const Edge& e : g.edges()) {
    if (s.Contains(e.u) && s.Contains(e.v)) total += e.w;
  }
  return total;
}

Wide BoundaryWeight(const InputGraph& g, const NodeSubset& s) {
  Wide total = 0;
  for (const Edge& e : g.edges()) {
    if (s.Contains(e.u) != s.Contains(e.v)) total += e.w;
  }
  return total;
}

Wide CrossWeight(const InputGraph& g, const NodeSubset& s,
                 const NodeSubset& t) {
  Wide total = 0;
  for (const Edge& e : g.edges()) {
    if ((s.Contains(e.u) && t.Contains(e.v)) ||
        (s.Contains(e.v) && t.Contains(e.u))) {
      total += e.w;
    }
  }
  return total;
}

Wide NodeWeight(const InputGraph& g, const NodeSubset& s) {
  Wide total = 0;
  for (int i : s.Members()) total += g.q(i);
  return total;
}

Wide DegreeSum(const InputGraph& g, const NodeSubset& s) {
  Wide total = 0;
  for (int i : s.Members()) total += g.Degree(i);
  return total;
}

Rational Density(const InputGraph& g, const NodeSubset& s) {
  if (s.universe() != g.n()) throw DomainError("subset universe mismatch");
  if (s.empty()) throw UndefinedRatioError("density of the empty set");
  return Rational(InternalWeight(g, s), NodeWeight(g, s));
}

Rational ConductanceStarValue(const InputGraph& g, const NodeSubset& s,
                              const NodeSubset& v0) {
  if (s.universe() != g.n() || v0.universe() != g.n()) {
    throw DomainError("subset universe mismatch");
  }
  if (!s.IsSubsetOf(v0)) throw DomainError("S must be contained in V0");
  if (s.empty()) throw UndefinedRatioError("conductance* of the empty set");
  return Rational(BoundaryWeight(g, s), NodeWeight(g, s));
}

}  // namespace ipcut

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

#include "ipcut/network.h"

#include <algorithm>
#include <ostream>
#include <utility>

#include "ipcut/errors.h"

namespace ipcut {
namespace {

constexpr Wide kCapacityBudget = Wide{1} << 62;

int64_t ClippedCapacity(const TerminalLine& line, Wide p, Wide q) {
  const Wide value = CheckedAdd(CheckedMul(q, line.a), CheckedMul(p, line.b));
  if (value <= 0) return 0;
  if (value > kInt64Max) {
    throw OverflowError("capacity exceeds 64 bits at lambda " +
                        WideToString(p) + "/" + WideToString(q) +
                        "; reduce weight magnitudes");
  }
  return static_cast<int64_t>(value);
}

bool Unclipped(const TerminalLine& line) { return line.a >= 0 && line.b >= 0; }

}  // namespace

ParametricNetwork::ParametricNetwork(ProblemKind kind, SourceTrend trend,
                                     int n, std::vector<NetworkArc> arcs,
                                     std::vector<TerminalLine> source_lines,
                                     std::vector<TerminalLine> sink_lines,
                                     std::vector<int> graph_nodes)
    : kind_(kind),
      trend_(trend),
      n_(n),
      arcs_(std::move(arcs)),
      source_lines_(std::move(source_lines)),
      sink_lines_(std::move(sink_lines)),
      graph_nodes_(std::move(graph_nodes)) {
  if (static_cast<int>(source_lines_.size()) != n_ ||
      static_cast<int>(sink_lines_.size()) != n_) {
    throw ValidationError("one source and one sink line per node required");
  }
  if (graph_nodes_.empty()) {
    graph_nodes_.resize(n_);
    for (int i = 0; i < n_; ++i) graph_nodes_[i] = i;
  }
  if (static_cast<int>(graph_nodes_.size()) != n_) {
    throw ValidationError("graph node map has the wrong length");
  }
  for (const NetworkArc& arc : arcs_) {
    if (arc.tail < 0 || arc.head < 0 || arc.tail >= n_ || arc.head >= n_ ||
        arc.tail == arc.head) {
      throw ValidationError("internal arc endpoint out of range");
    }
    if (arc.capacity < 0) throw ValidationError("negative arc capacity");
  }
  net_lines_.resize(n_);
  for (int i = 0; i < n_; ++i) {
    const TerminalLine& src = source_lines_[i];
    const TerminalLine& snk = sink_lines_[i];
    const bool ok_trend =
        trend_ == SourceTrend::kNonincreasing ? (src.b <= 0 && snk.b >= 0)
        : trend_ == SourceTrend::kNondecreasing ? (src.b >= 0 && snk.b <= 0)
                                                : (src.b == 0 && snk.b == 0);
    if (!ok_trend) {
      throw ValidationError("terminal line of node " + std::to_string(i) +
                            " contradicts the declared trend");
    }
    if (src.a == -snk.a && src.b == -snk.b) {
      net_lines_[i] = src;
    } else if (src.b == 0 && snk.b == 0) {
      net_lines_[i] = {std::max<int64_t>(0, src.a) -
                           std::max<int64_t>(0, snk.a),
                       0};
    } else if (Unclipped(src) && Unclipped(snk)) {
      net_lines_[i] = {src.a - snk.a, src.b - snk.b};
      excess_affine_everywhere_ = false;
    } else {
      throw ValidationError("terminal lines of node " + std::to_string(i) +
                            " are neither complementary nor nonnegative");
    }
  }
}

Wide ParametricNetwork::ExcessIntercept(const NodeSubset& s) const {
  Wide total = 0;
  for (int i : s.Members()) total += net_lines_[i].a;
  for (const NetworkArc& arc : arcs_) {
    if (s.Contains(arc.tail) && !s.Contains(arc.head)) total -= arc.capacity;
  }
  return total;
}

Wide ParametricNetwork::ExcessSlope(const NodeSubset& s) const {
  Wide total = 0;
  for (int i : s.Members()) total += net_lines_[i].b;
  return total;
}

Wide ParametricNetwork::SlopeBudget() const {
  Wide total = 0;
  for (const TerminalLine& line : net_lines_) {
    total += line.b < 0 ? -Wide{line.b} : Wide{line.b};
  }
  return total;
}

Wide ParametricNetwork::ScaledExcess(const NodeSubset& s, Wide p,
                                     Wide q) const {
  return CheckedAdd(CheckedMul(q, ExcessIntercept(s)),
                    CheckedMul(p, ExcessSlope(s)));
}

Wide ParametricNetwork::ScaledCut(const NodeSubset& s, Wide p, Wide q) const {
  Wide total = 0;
  for (int i = 0; i < n_; ++i) {
    const TerminalLine& line = s.Contains(i) ? sink_lines_[i] : source_lines_[i];
    const Wide value =
        CheckedAdd(CheckedMul(q, line.a), CheckedMul(p, line.b));
    if (value > 0) total = CheckedAdd(total, value);
  }
  for (const NetworkArc& arc : arcs_) {
    if (s.Contains(arc.tail) && !s.Contains(arc.head)) {
      total = CheckedAdd(total, CheckedMul(q, arc.capacity));
    }
  }
  return total;
}

void InstantiateTerminals(const ParametricNetwork& net, Wide p, Wide q,
                          std::vector<int64_t>* source_caps,
                          std::vector<int64_t>* sink_caps) {
  if (q <= 0) throw ContractError("lambda scale must be positive");
  source_caps->resize(net.n());
  sink_caps->resize(net.n());
  for (int i = 0; i < net.n(); ++i) {
    (*source_caps)[i] = ClippedCapacity(net.source_line(i), p, q);
    (*sink_caps)[i] = ClippedCapacity(net.sink_line(i), p, q);
  }
}

void CheckCapacityBudget(const ParametricNetwork& net, Wide q,
                         const std::vector<int64_t>& source_caps,
                         const std::vector<int64_t>& sink_caps) {
  Wide total = 0;
  for (const NetworkArc& arc : net.arcs()) {
    total = CheckedAdd(total, CheckedMul(arc.capacity, q));
  }
  for (int64_t c : source_caps) total = CheckedAdd(total, c);
  for (int64_t c : sink_caps) total = CheckedAdd(total, c);
  if (total >= kCapacityBudget) {
    throw OverflowError(
        "total network capacity exceeds 2^62 at scale " + WideToString(q) +
        "; reduce weight magnitudes");
  }
}

InstantiatedNetwork Instantiate(const ParametricNetwork& net, Wide p, Wide q) {
  InstantiatedNetwork out;
  out.n = net.n();
  out.p = p;
  out.q = q;
  InstantiateTerminals(net, p, q, &out.source_caps, &out.sink_caps);
  CheckCapacityBudget(net, q, out.source_caps, out.sink_caps);
  out.arcs = net.arcs();
  for (NetworkArc& arc : out.arcs) {
    arc.capacity = static_cast<int64_t>(Wide{arc.capacity} * q);
  }
  return out;
}

InstantiatedNetwork Instantiate(const ParametricNetwork& net,
                                const Rational& lambda) {
  return Instantiate(net, lambda.num(), lambda.den());
}

Wide CutCapacity(const InstantiatedNetwork& net, const NodeSubset& source_set) {
  Wide total = 0;
  for (int i = 0; i < net.n; ++i) {
    total += source_set.Contains(i) ? net.sink_caps[i] : net.source_caps[i];
  }
  for (const NetworkArc& arc : net.arcs) {
    if (source_set.Contains(arc.tail) && !source_set.Contains(arc.head)) {
      total += arc.capacity;
    }
  }
  return total;
}

ParametricNetwork BuildDspNetwork(const InputGraph& g) {
  std::vector<NetworkArc> arcs;
  arcs.reserve(g.edges().size());
  for (const Edge& e : g.edges()) arcs.push_back({e.u, e.v, e.w});
  std::vector<TerminalLine> source(g.n()), sink(g.n());
  for (int i = 0; i < g.n(); ++i) {
    source[i] = {g.OutDegree(i), -g.q(i)};
    sink[i] = {-g.OutDegree(i), g.q(i)};
  }
  return ParametricNetwork(ProblemKind::kDensest, SourceTrend::kNonincreasing,
                           g.n(), std::move(arcs), std::move(source),
                           std::move(sink));
}

ParametricNetwork BuildConductanceNetwork(const InputGraph& g,
                                          const NodeSubset& seed) {
  if (seed.universe() != g.n()) throw DomainError("seed universe mismatch");
  if (seed.empty()) throw DomainError("seed set must be nonempty");
  if (seed.size() == g.n()) throw DomainError("seed set must not cover V");
  std::vector<int> index(g.n(), -1);
  std::vector<int> graph_nodes;
  for (int i = 0; i < g.n(); ++i) {
    if (!seed.Contains(i)) {
      index[i] = static_cast<int>(graph_nodes.size());
      graph_nodes.push_back(i);
    }
  }
  const int n0 = static_cast<int>(graph_nodes.size());
  std::vector<NetworkArc> arcs;
  std::vector<TerminalLine> source(n0), sink(n0);
  for (int k = 0; k < n0; ++k) source[k] = {0, g.q(graph_nodes[k])};
  for (const Edge& e : g.edges()) {
    const int a = index[e.u];
    const int b = index[e.v];
    if (a >= 0 && b >= 0) {
      arcs.push_back({a, b, e.w});
      arcs.push_back({b, a, e.w});
    } else if (a >= 0) {
      sink[a].a += e.w;
    } else if (b >= 0) {
      sink[b].a += e.w;
    }
  }
  return ParametricNetwork(ProblemKind::kConductance,
                           SourceTrend::kNondecreasing, n0, std::move(arcs),
                           std::move(source), std::move(sink),
                           std::move(graph_nodes));
}

ParametricNetwork BuildSExcessNetwork(const std::vector<int64_t>& weights,
                                      std::vector<NetworkArc> constraints) {
  const int n = static_cast<int>(weights.size());
  std::vector<TerminalLine> source(n), sink(n);
  for (int i = 0; i < n; ++i) {
    if (weights[i] > 0) source[i] = {weights[i], 0};
    if (weights[i] < 0) sink[i] = {-weights[i], 0};
  }
  return ParametricNetwork(ProblemKind::kSExcess, SourceTrend::kConstant, n,
                           std::move(constraints), std::move(source),
                           std::move(sink));
}

void WriteDimacs(std::ostream& out, const InstantiatedNetwork& net) {
  const int s = net.n + 1;
  const int t = net.n + 2;
  const size_t num_arcs = net.arcs.size() + 2 * static_cast<size_t>(net.n);
  out << "c lambda " << WideToString(net.p) << "/" << WideToString(net.q)
      << "\n";
  out << "p max " << net.n + 2 << " " << num_arcs << "\n";
  out << "n " << s << " s\n";
  out << "n " << t << " t\n";
  for (int i = 0; i < net.n; ++i) {
    out << "a " << s << " " << i + 1 << " " << net.source_caps[i] << "\n";
  }
  for (int i = 0; i < net.n; ++i) {
    out << "a " << i + 1 << " " << t << " " << net.sink_caps[i] << "\n";
  }
  for (const NetworkArc& arc : net.arcs) {
    out << "a " << arc.tail + 1 << " " << arc.head + 1 << " " << arc.capacity
        << "\n";
  }
}

}  // namespace ipcut

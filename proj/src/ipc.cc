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

#include "ipcut/ipc.h"

#include <chrono>
#include <ostream>
#include <utility>

#include "ipcut/errors.h"
#include "ipcut/mincut.h"
#include "ipcut/parametric.h"

namespace ipcut {
namespace {

constexpr int kBruteForceLimit = 20;

NodeSubset ToGraphSet(const ParametricNetwork& net, const NodeSubset& s,
                      int graph_n) {
  NodeSubset out(graph_n);
  for (int i : s.Members()) out.Insert(net.graph_node(i));
  return out;
}

NodeSubset ToNetworkSet(const ParametricNetwork& net, const NodeSubset& s) {
  NodeSubset out(net.n());
  for (int i = 0; i < net.n(); ++i) {
    if (s.Contains(net.graph_node(i))) out.Insert(i);
  }
  return out;
}

double SecondsSince(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

// Shared driver. For maximization the lambda-problem value is the excess
// and lambda increases; for minimization it is minus the excess and lambda
// decreases. In both cases the solver returns the maximal optimal set.
RatioResult RunIpc(const InputGraph& g, const ParametricNetwork& net,
                   NodeSubset start, bool maximize,
                   std::chrono::steady_clock::time_point t0) {
  auto ratio_of = [&](const NodeSubset& s) {
    const Wide num = maximize ? net.ExcessIntercept(s) : -net.ExcessIntercept(s);
    const Wide den = maximize ? -net.ExcessSlope(s) : net.ExcessSlope(s);
    return Rational(num, den);
  };
  const Wide scale = ParametricSweep::SafeScale(net, net.SlopeBudget());
  ParametricSweep sweep(net,
                        maximize ? ParametricSweep::Order::kAscending
                                 : ParametricSweep::Order::kDescending,
                        ExtremalCut::kMaximalSource, scale);
  RatioResult result;
  NodeSubset current = std::move(start);
  Rational lambda = ratio_of(current);
  while (true) {
    const CutSolution cut = sweep.SolveAt(lambda);
    const Wide excess = net.ScaledExcess(cut.source_set, lambda.num(),
                                         lambda.den());
    const Wide improve = maximize ? excess : -excess;
    result.trace.push_back({lambda, improve, current.size()});
    const bool better = maximize ? improve > 0 : improve < 0;
    if (!better) break;
    current = cut.source_set;
    lambda = ratio_of(current);
    if (static_cast<int>(result.trace.size()) > net.n() + 1) {
      throw ContractError("internal error: IPC did not terminate");
    }
  }
  result.optimal_set = ToGraphSet(net, current, g.n());
  result.ratio = lambda;
  result.certified = true;
  result.cut_solve_count = sweep.solve_count();
  result.warm_started = sweep.warm();
  result.wall_time_seconds = SecondsSince(t0);
  return result;
}

}  // namespace

LambdaProblemResult SolveLambdaProblem(const ParametricNetwork& net,
                                       const Rational& lambda) {
  MinCutSolver solver(Instantiate(net, lambda));
  LambdaProblemResult out;
  out.argset = solver.Cut(ExtremalCut::kMaximalSource).source_set;
  const Wide excess =
      net.ScaledExcess(out.argset, lambda.num(), lambda.den());
  out.improve = net.kind() == ProblemKind::kConductance ? -excess : excess;
  return out;
}

RatioResult IpcMaximize(const InputGraph& g, const IpcOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();
  if (g.m() == 0) {
    throw DegenerateInputError("graph has no edges; every density is 0");
  }
  NodeSubset start = options.start.value_or(NodeSubset::Full(g.n()));
  if (start.universe() != g.n() || start.empty()) {
    throw DomainError("starting set must be a nonempty subset of V");
  }
  const ParametricNetwork net = BuildDspNetwork(g);
  return RunIpc(g, net, std::move(start), /*maximize=*/true, t0);
}

RatioResult IpcMinimize(const InputGraph& g, const NodeSubset& seed,
                        const IpcOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();
  const ParametricNetwork net = BuildConductanceNetwork(g, seed);
  const NodeSubset v0 = seed.Complement();
  if (NodeWeight(g, v0) == 0) {
    throw DegenerateInputError("V \\ seed has zero node weight");
  }
  NodeSubset start = options.start.value_or(v0);
  if (start.universe() != g.n() || start.empty() || !start.IsSubsetOf(v0)) {
    throw DomainError("starting set must be a nonempty subset of V \\ seed");
  }
  return RunIpc(g, net, ToNetworkSet(net, start), /*maximize=*/false, t0);
}

bool VerifyCertificate(const InputGraph& g, const NodeSubset& s,
                       RatioSense sense,
                       const std::optional<NodeSubset>& seed) {
  if (sense == RatioSense::kMaximizeDensity) {
    const Rational lambda = Density(g, s);
    const LambdaProblemResult r =
        SolveLambdaProblem(BuildDspNetwork(g), lambda);
    return r.improve <= 0;
  }
  if (!seed) throw DomainError("conductance* certificate needs a seed set");
  const Rational lambda = ConductanceStarValue(g, s, seed->Complement());
  const LambdaProblemResult r =
      SolveLambdaProblem(BuildConductanceNetwork(g, *seed), lambda);
  return r.improve >= 0;
}

RatioResult BruteForceBestRatio(const InputGraph& g, RatioSense sense,
                                const std::optional<NodeSubset>& seed) {
  const auto t0 = std::chrono::steady_clock::now();
  if (g.n() > kBruteForceLimit) {
    throw GuardError("exhaustive search is limited to n <= 20 nodes");
  }
  const bool maximize = sense == RatioSense::kMaximizeDensity;
  std::vector<int> admissible;
  if (maximize) {
    for (int i = 0; i < g.n(); ++i) admissible.push_back(i);
  } else {
    if (!seed) throw DomainError("conductance* needs a seed set");
    if (seed->universe() != g.n() || seed->empty() || seed->size() == g.n()) {
      throw DomainError("seed must be a nonempty proper subset of V");
    }
    for (int i = 0; i < g.n(); ++i) {
      if (!seed->Contains(i)) admissible.push_back(i);
    }
  }
  const int k = static_cast<int>(admissible.size());
  bool have = false;
  RatioResult best;
  for (uint32_t mask = 1; mask < (uint32_t{1} << k); ++mask) {
    NodeSubset s(g.n());
    for (int b = 0; b < k; ++b) {
      if (mask >> b & 1) s.Insert(admissible[b]);
    }
    const Rational value =
        maximize ? Density(g, s) : Rational(BoundaryWeight(g, s),
                                            NodeWeight(g, s));
    bool take = !have;
    if (have) {
      if (value != best.ratio) {
        take = maximize ? value > best.ratio : value < best.ratio;
      } else if (s.size() != best.optimal_set.size()) {
        take = s.size() > best.optimal_set.size();
      } else {
        take = s.LexLess(best.optimal_set);
      }
    }
    if (take) {
      best.ratio = value;
      best.optimal_set = std::move(s);
      have = true;
    }
  }
  if (!have) throw DomainError("no admissible subset");
  best.certified = true;
  best.wall_time_seconds = SecondsSince(t0);
  return best;
}

void WriteTraceCsv(std::ostream& out, const RatioResult& result,
                   int precision) {
  out << "k,lambda_exact,lambda_decimal,improve,set_size\n";
  for (size_t k = 0; k < result.trace.size(); ++k) {
    const TraceEntry& e = result.trace[k];
    out << k << "," << e.lambda.ToString() << ","
        << e.lambda.ToDecimal(precision) << "," << WideToString(e.improve)
        << "," << e.set_size << "\n";
  }
}

}  // namespace ipcut

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

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <vector>

#include "gtest/gtest.h"
#include "ipcut/errors.h"
#include "ipcut/graph.h"
#include "ipcut/ipc.h"
#include "ipcut/mincut.h"
#include "ipcut/network.h"
#include "ipcut/parametric.h"
#include "test_util.h"

namespace ipcut {
namespace {

using testing::FromEdgeText;
using testing::Mask;

InputGraph K4Pendant() {
  return FromEdgeText("0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n0 4\n");
}

InputGraph K3() { return FromEdgeText("0 1\n1 2\n0 2\n"); }

TEST(SimpleParametricTest, K4Pendant) {
  const ParametricNetwork net = BuildDspNetwork(K4Pendant());
  const std::vector<CutSolution> cuts = SimpleParametric(
      net, {Rational(1, 2), Rational(6, 5), Rational(8, 5)});
  ASSERT_EQ(cuts.size(), 3u);
  EXPECT_EQ(cuts[0].source_set, NodeSubset::Full(5));
  EXPECT_EQ(cuts[1].source_set, Mask(5, 0b01111));
  EXPECT_EQ(cuts[2].source_set, NodeSubset(5));
  EXPECT_EQ(cuts[1].lambda(), Rational(6, 5));
  EXPECT_EQ(cuts[1].cut_value,
            CutCapacity(Instantiate(net, Rational(6, 5)), cuts[1].source_set));
}

TEST(SimpleParametricTest, SingleLambdaEqualsColdSolve) {
  const ParametricNetwork net = BuildDspNetwork(K4Pendant());
  const CutSolution cold = SolveMinCut(Instantiate(net, Rational(7, 5))).first;
  const std::vector<CutSolution> cuts =
      SimpleParametric(net, {Rational(7, 5)});
  ASSERT_EQ(cuts.size(), 1u);
  EXPECT_EQ(cuts[0].source_set, cold.source_set);
  EXPECT_EQ(cuts[0].cut_value, cold.cut_value);
}

TEST(SimpleParametricTest, ZeroLambdaKeepsEveryNonIsolatedNode) {
  const InputGraph g(4, {{0, 1, 2}, {1, 2, 1}});
  const std::vector<CutSolution> cuts =
      SimpleParametric(BuildDspNetwork(g), {Rational(0)});
  for (int i = 0; i < 3; ++i) EXPECT_TRUE(cuts[0].source_set.Contains(i));
}

TEST(SimpleParametricTest, RejectsUnsortedList) {
  const ParametricNetwork net = BuildDspNetwork(K3());
  EXPECT_THROW(SimpleParametric(net, {Rational(1), Rational(1, 2)}),
               ContractError);
  EXPECT_THROW(SimpleParametric(net, {Rational(1), Rational(1)}),
               ContractError);
}

TEST(ParametricSweepTest, RejectsOrderViolation) {
  const ParametricNetwork net = BuildDspNetwork(K3());
  ParametricSweep sweep(net, ParametricSweep::Order::kDescending,
                        ExtremalCut::kMaximalSource, 10);
  sweep.SolveAt(Rational(1));
  EXPECT_THROW(sweep.SolveAt(Rational(2)), ContractError);
}

TEST(ParametricSweepTest, ScaleTooSmallIsAContractError) {
  const ParametricNetwork net = BuildDspNetwork(K3());
  ParametricSweep sweep(net, ParametricSweep::Order::kAscending,
                        ExtremalCut::kMaximalSource, 2);
  EXPECT_THROW(sweep.SolveAt(Rational(1, 3)), ContractError);
}

TEST(ParametricSweepTest, FallsBackToColdSolvesOnOverflow) {
  const InputGraph g(3, {{0, 1, int64_t{1} << 50}, {1, 2, 3}});
  const ParametricNetwork net = BuildDspNetwork(g);
  ParametricSweep sweep(net, ParametricSweep::Order::kAscending,
                        ExtremalCut::kMaximalSource, Wide{1} << 40);
  EXPECT_FALSE(sweep.warm());
  const CutSolution cut = sweep.SolveAt(Rational(1, 3));
  EXPECT_EQ(cut.source_set, NodeSubset::Full(3));
}

// Random monotone lambda sequences with assorted denominators, continued at
// the safe shared scale, against cold solves at each exact lambda.
TEST(ParametricSweepPropertyTest, RoundedSweepsAreExact) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 8);
    const InputGraph g = testing::RandomGraphWithEdge(rng, n, 0.5, 6, 3);
    const bool conductance = trial % 2 == 1;
    const NodeSubset seed = testing::RandomSeed(rng, n);
    const ParametricNetwork net =
        conductance ? BuildConductanceNetwork(g, seed) : BuildDspNetwork(g);
    // Lambdas at and around breakpoints: ratios of small integers.
    std::vector<Rational> lambdas;
    for (int k = 0; k < 12; ++k) {
      lambdas.emplace_back(static_cast<int64_t>(rng() % 40),
                           1 + static_cast<int64_t>(rng() % 12));
    }
    std::sort(lambdas.begin(), lambdas.end());
    lambdas.erase(std::unique(lambdas.begin(), lambdas.end()), lambdas.end());
    const bool descending = trial % 4 < 2;
    if (descending) std::reverse(lambdas.begin(), lambdas.end());
    const ExtremalCut which = trial % 3 == 0 ? ExtremalCut::kMinimalSource
                                             : ExtremalCut::kMaximalSource;
    ParametricSweep sweep(net,
                          descending ? ParametricSweep::Order::kDescending
                                     : ParametricSweep::Order::kAscending,
                          which, ParametricSweep::SafeScale(net, 12));
    for (const Rational& l : lambdas) {
      const CutSolution warm = sweep.SolveAt(l);
      MinCutSolver cold(Instantiate(net, l));
      const CutSolution expect = cold.Cut(which);
      ASSERT_EQ(warm.source_set, expect.source_set)
          << "trial " << trial << " lambda " << l.ToString();
      EXPECT_EQ(warm.cut_value, expect.cut_value);
      EXPECT_EQ(warm.lambda(), l);
    }
    EXPECT_TRUE(sweep.warm());
  }
}

TEST(FullyParametricTest, K4Pendant) {
  const Envelope env =
      FullyParametric(BuildDspNetwork(K4Pendant()), Rational(0), Rational(3));
  EXPECT_EQ(env.sense, EnvelopeSense::kConcaveMax);
  ASSERT_EQ(env.breakpoints.size(), 2u);
  EXPECT_EQ(env.breakpoints[0].lambda, Rational(1));
  EXPECT_EQ(env.breakpoints[0].budget, 5);
  EXPECT_EQ(env.breakpoints[0].benefit, 7);
  EXPECT_EQ(env.breakpoints[0].source_set, NodeSubset::Full(5));
  EXPECT_EQ(env.breakpoints[1].lambda, Rational(3, 2));
  EXPECT_EQ(env.breakpoints[1].budget, 4);
  EXPECT_EQ(env.breakpoints[1].benefit, 6);
  EXPECT_EQ(env.breakpoints[1].set_size, 4);
  EXPECT_EQ(env.anchor_budget, 0);
  EXPECT_EQ(env.anchor_benefit, 0);
  EXPECT_EQ(env.anchor_set.size(), 0);
  const Breakpoint& best = LeftmostBreakpoint(env);
  EXPECT_EQ(best.lambda, Rational(3, 2));
  EXPECT_EQ(best.source_set, Mask(5, 0b01111));
}

TEST(FullyParametricTest, Triangle) {
  const Envelope env =
      FullyParametric(BuildDspNetwork(K3()), Rational(0), Rational(2));
  ASSERT_EQ(env.breakpoints.size(), 1u);
  EXPECT_EQ(env.breakpoints[0].lambda, Rational(1));
  EXPECT_EQ(LeftmostBreakpoint(env).source_set, NodeSubset::Full(3));
}

TEST(FullyParametricTest, BreakpointAtUpperEnd) {
  const Envelope env =
      FullyParametric(BuildDspNetwork(K3()), Rational(1, 2), Rational(1));
  ASSERT_EQ(env.breakpoints.size(), 1u);
  EXPECT_EQ(env.breakpoints[0].lambda, Rational(1));
}

TEST(FullyParametricTest, ContractErrors) {
  const ParametricNetwork net = BuildDspNetwork(K3());
  EXPECT_THROW(FullyParametric(net, Rational(1), Rational(1)), ContractError);
  const Envelope empty = FullyParametric(net, Rational(2), Rational(3));
  EXPECT_TRUE(empty.breakpoints.empty());
  EXPECT_THROW(LeftmostBreakpoint(empty), ContractError);
  const InputGraph star = FromEdgeText("0 1\n0 2\n0 3\n");
  const ParametricNetwork cond =
      BuildConductanceNetwork(star, Mask(4, 0b1000));
  EXPECT_THROW(FullyParametric(cond, Rational(-1), Rational(1)),
               ContractError);
}

TEST(FullyParametricTest, PrecisionGuardMergesBreakpoints) {
  FullyParametricOptions options;
  options.precision = Rational(10);
  const Envelope env =
      FullyParametric(BuildDspNetwork(K4Pendant()), Rational(0), Rational(3),
                      options);
  ASSERT_EQ(env.breakpoints.size(), 1u);
  EXPECT_TRUE(env.breakpoints[0].merged);
}

TEST(FullyParametricTest, DefaultInterval) {
  const auto [lo, hi] = DefaultDspInterval(K4Pendant(), false);
  EXPECT_EQ(lo, Rational(7, 5));
  EXPECT_EQ(hi, Rational(2));
  EXPECT_EQ(DefaultDspInterval(K4Pendant(), true).first, Rational(0));
  // density(V) equals the degree bound on a regular graph.
  EXPECT_EQ(DefaultDspInterval(K3(), false).first, Rational(0));
  EXPECT_THROW(DefaultDspInterval(InputGraph(2, {}), false),
               DegenerateInputError);
}

TEST(FullyParametricTest, CsvExport) {
  const Envelope env =
      FullyParametric(BuildDspNetwork(K4Pendant()), Rational(0), Rational(3));
  std::ostringstream out;
  WriteEnvelopeCsv(out, env, 4);
  EXPECT_EQ(out.str(),
            "lambda,budget,benefit,set_size,lambda_exact\n"
            "1.0000,5,7,5,1\n"
            "1.5000,4,6,4,3/2\n");
}

// Breakpoints of the exhaustive envelope: slopes of the upper concave hull
// of (q(S), C(S,S)) or of the lower convex hull of (q(S), C(S, not S)),
// restricted to (lo, hi].
std::vector<Rational> HullSlopes(const std::map<Wide, Wide>& best, bool upper,
                                 const Rational& lo, const Rational& hi) {
  std::vector<std::pair<Wide, Wide>> hull;
  for (const auto& point : best) {
    while (hull.size() >= 2) {
      const auto& [x1, y1] = hull[hull.size() - 2];
      const auto& [x2, y2] = hull.back();
      const Wide cross = (x2 - x1) * (point.second - y1) -
                         (y2 - y1) * (point.first - x1);
      if (upper ? cross >= 0 : cross <= 0) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(point);
  }
  std::vector<Rational> slopes;
  for (size_t k = 1; k < hull.size(); ++k) {
    const Rational s(hull[k].second - hull[k - 1].second,
                     hull[k].first - hull[k - 1].first);
    if (lo < s && s <= hi) slopes.push_back(s);
  }
  std::sort(slopes.begin(), slopes.end());
  return slopes;
}

std::vector<Rational> BruteDspBreakpoints(const InputGraph& g,
                                          const Rational& lo,
                                          const Rational& hi) {
  std::map<Wide, Wide> best;
  for (uint32_t mask = 0; mask < (uint32_t{1} << g.n()); ++mask) {
    const NodeSubset s = Mask(g.n(), mask);
    const Wide x = NodeWeight(g, s);
    const Wide y = InternalWeight(g, s);
    auto it = best.find(x);
    if (it == best.end() || it->second < y) best[x] = y;
  }
  return HullSlopes(best, true, lo, hi);
}

std::vector<Rational> BruteConductanceBreakpoints(const InputGraph& g,
                                                  const NodeSubset& seed,
                                                  const Rational& lo,
                                                  const Rational& hi) {
  std::map<Wide, Wide> best;
  for (uint32_t mask = 0; mask < (uint32_t{1} << g.n()); ++mask) {
    const NodeSubset s = Mask(g.n(), mask);
    bool ok = true;
    for (int i : s.Members()) ok = ok && !seed.Contains(i);
    if (!ok) continue;
    const Wide x = NodeWeight(g, s);
    const Wide y = BoundaryWeight(g, s);
    auto it = best.find(x);
    if (it == best.end() || y < it->second) best[x] = y;
  }
  return HullSlopes(best, false, lo, hi);
}

void CheckEnvelopeShape(const Envelope& env) {
  const bool concave = env.sense == EnvelopeSense::kConcaveMax;
  for (size_t k = 0; k < env.breakpoints.size(); ++k) {
    const Breakpoint& bp = env.breakpoints[k];
    EXPECT_EQ(bp.set_size, bp.source_set.size());
    if (k > 0) EXPECT_LT(env.breakpoints[k - 1].lambda, bp.lambda);
    // Neighbor point across this breakpoint.
    Wide budget, benefit;
    const Breakpoint* next = nullptr;
    if (concave) {
      next = k + 1 < env.breakpoints.size() ? &env.breakpoints[k + 1] : nullptr;
    } else {
      next = k > 0 ? &env.breakpoints[k - 1] : nullptr;
    }
    if (next != nullptr) {
      budget = next->budget;
      benefit = next->benefit;
      EXPECT_TRUE(next->source_set.IsSubsetOf(bp.source_set));
      EXPECT_LT(next->set_size, bp.set_size);
    } else {
      budget = env.anchor_budget;
      benefit = env.anchor_benefit;
      EXPECT_TRUE(env.anchor_set.IsSubsetOf(bp.source_set));
    }
    EXPECT_EQ(Rational(bp.benefit - benefit, bp.budget - budget), bp.lambda);
  }
}

TEST(FullyParametricPropertyTest, DspMatchesExhaustiveHull) {
  std::mt19937_64 rng(43);
  FullyParametricOptions exact;
  exact.precision = Rational(0);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const InputGraph g = testing::RandomGraphWithEdge(
        rng, n, (trial % 3 + 1) * 0.25, 8, trial % 2 ? 3 : 1);
    const ParametricNetwork net = BuildDspNetwork(g);
    const auto [lo, hi] = DefaultDspInterval(g, true);
    exact.parallel = trial % 2 == 0;
    const Envelope env = FullyParametric(net, lo, hi, exact);
    std::vector<Rational> got;
    for (const Breakpoint& bp : env.breakpoints) got.push_back(bp.lambda);
    ASSERT_EQ(got, BruteDspBreakpoints(g, lo, hi)) << "trial " << trial;
    CheckEnvelopeShape(env);
    const RatioResult brute =
        BruteForceBestRatio(g, RatioSense::kMaximizeDensity);
    EXPECT_EQ(LeftmostBreakpoint(env).lambda, brute.ratio);
    EXPECT_EQ(Density(g, LeftmostBreakpoint(env).source_set), brute.ratio);
  }
}

TEST(FullyParametricPropertyTest, ConductanceMatchesExhaustiveHull) {
  std::mt19937_64 rng(47);
  FullyParametricOptions exact;
  exact.precision = Rational(0);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const InputGraph g = testing::RandomGraph(rng, n, 0.5, 8, 4);
    const NodeSubset seed = testing::RandomSeed(rng, n);
    const ParametricNetwork net = BuildConductanceNetwork(g, seed);
    const Rational hi(8 * n, 1);
    exact.parallel = trial % 2 == 0;
    const Envelope env = FullyParametric(net, Rational(0), hi, exact);
    std::vector<Rational> got;
    for (const Breakpoint& bp : env.breakpoints) got.push_back(bp.lambda);
    ASSERT_EQ(got, BruteConductanceBreakpoints(g, seed, Rational(0), hi))
        << "trial " << trial;
    EXPECT_EQ(env.sense, EnvelopeSense::kConvexMin);
    CheckEnvelopeShape(env);
    const RatioResult brute =
        BruteForceBestRatio(g, RatioSense::kMinimizeConductance, seed);
    // A zero optimum sits at lambda = 0, outside (lo, hi].
    if (brute.ratio > Rational(0)) {
      ASSERT_FALSE(env.breakpoints.empty());
      NodeSubset s(n);
      for (int i : LeftmostBreakpoint(env).source_set.Members()) {
        s.Insert(net.graph_node(i));
      }
      EXPECT_EQ(LeftmostBreakpoint(env).lambda, brute.ratio);
      EXPECT_EQ(ConductanceStarValue(g, s, seed.Complement()), brute.ratio);
    }
  }
}

TEST(FullyParametricPropertyTest, SerialAndParallelAgree) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    const InputGraph g = testing::RandomGraphWithEdge(rng, 40, 0.3, 9, 5);
    const ParametricNetwork net = BuildDspNetwork(g);
    const auto [lo, hi] = DefaultDspInterval(g, true);
    FullyParametricOptions serial;
    serial.parallel = false;
    const Envelope a = FullyParametric(net, lo, hi, serial);
    const Envelope b = FullyParametric(net, lo, hi);
    ASSERT_EQ(a.breakpoints.size(), b.breakpoints.size());
    for (size_t k = 0; k < a.breakpoints.size(); ++k) {
      EXPECT_EQ(a.breakpoints[k].lambda, b.breakpoints[k].lambda);
      EXPECT_EQ(a.breakpoints[k].source_set, b.breakpoints[k].source_set);
    }
    EXPECT_EQ(a.cut_solves, b.cut_solves);
  }
}

// Every breakpoint is a real change: the maximal sets just left and right
// of it differ.
TEST(FullyParametricPropertyTest, BreakpointsSeparateSourceSets) {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 100; ++trial) {
    const InputGraph g = testing::RandomGraphWithEdge(rng, 10, 0.5, 5);
    const ParametricNetwork net = BuildDspNetwork(g);
    const auto [lo, hi] = DefaultDspInterval(g, true);
    const Envelope env = FullyParametric(net, lo, hi);
    const Wide qv = g.TotalNodeWeight();
    const Rational eps(1, 2 * qv * qv);
    for (const Breakpoint& bp : env.breakpoints) {
      const CutSolution left =
          SolveMinCut(Instantiate(net, bp.lambda - eps)).first;
      const CutSolution right =
          SolveMinCut(Instantiate(net, bp.lambda + eps)).first;
      EXPECT_NE(left.source_set, right.source_set);
      EXPECT_EQ(left.source_set, bp.source_set);
    }
  }
}

}  // namespace
}  // namespace ipcut

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

// Min-cuts of a parametric network over many lambda values: monotone sweeps
// with a continued solver, and the complete breakpoint envelope.

#ifndef IPCUT_PARAMETRIC_H_
#define IPCUT_PARAMETRIC_H_

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <vector>

#include "ipcut/graph.h"
#include "ipcut/mincut.h"
#include "ipcut/network.h"
#include "ipcut/rational.h"

namespace ipcut {

// Whether source sets shrink as lambda grows (densest subgraph) or grow
// (conductance*). Constant networks report kShrinking.
bool SourceSetsShrink(const ParametricNetwork& net);

// Solves one network at a monotone sequence of lambda values with a single
// continued solver. All instantiations share the scale `scale`, so internal
// capacities never change. A lambda whose denominator does not divide the
// scale is rounded to a multiple of 1/scale on the side where the requested
// extremal cut is the one-sided limit; when scale > den(lambda) times the
// network's slope budget no breakpoint lies between the two values and the
// result is exact. If the shared scale overflows, every lambda is solved
// cold at its own scale instead.
class ParametricSweep {
 public:
  enum class Order { kAscending, kDescending };

  ParametricSweep(const ParametricNetwork& net, Order order, ExtremalCut which,
                  Wide scale);

  // Requested extremal min-cut at exactly `lambda`. cut_value, p and q refer
  // to lambda's own reduced scale. Throws ContractError if lambda breaks the
  // declared order or cannot be resolved exactly at the shared scale.
  CutSolution SolveAt(const Rational& lambda);

  bool warm() const { return warm_; }
  Wide scale() const { return scale_; }
  int64_t solve_count() const { return solve_count_; }

  // Smallest scale that resolves every lambda with denominator at most
  // `max_den` exactly: max_den * SlopeBudget() + 1.
  static Wide SafeScale(const ParametricNetwork& net, Wide max_den);

 private:
  const ParametricNetwork& net_;
  Order order_;
  ExtremalCut which_;
  Wide scale_;
  bool warm_ = true;
  int64_t solve_count_ = 0;
  std::optional<Rational> last_;
  std::unique_ptr<MinCutSolver> solver_;
  std::vector<int64_t> source_caps_;
  std::vector<int64_t> sink_caps_;
};

// One cut per lambda (strictly ascending), warm-started along the list.
// Source sets are nested. Throws ContractError for unsorted input.
std::vector<CutSolution> SimpleParametric(
    const ParametricNetwork& net, const std::vector<Rational>& lambdas,
    ExtremalCut which = ExtremalCut::kMaximalSource);

// A lambda where the min-cut source set changes.
struct Breakpoint {
  Rational lambda;
  // The larger of the two source sets adjacent to lambda (the left-side set
  // for shrinking families, the right-side set for growing ones).
  NodeSubset source_set;
  // q(S) and C(S,S) for densest subgraph, q(S) and C(S, not S) for
  // conductance*.
  Wide budget = 0;
  Wide benefit = 0;
  int set_size = 0;
  // Set when the recursion stopped at the precision guard: lambda is then
  // the intersection of the two bracketing lines and may stand for several
  // breakpoints closer together than the precision.
  bool merged = false;
};

enum class EnvelopeSense { kConcaveMax, kConvexMin };

struct Envelope {
  EnvelopeSense sense = EnvelopeSense::kConcaveMax;
  Rational lo;
  Rational hi;
  // Ascending lambda.
  std::vector<Breakpoint> breakpoints;
  // The smallest source set occurring in (lo, hi], with its point.
  NodeSubset anchor_set;
  Wide anchor_budget = 0;
  Wide anchor_benefit = 0;
  int64_t cut_solves = 0;
};

struct FullyParametricOptions {
  // Recursion stops on intervals narrower than this (0 disables the guard).
  Rational precision = Rational(1, 10000);
  // Solve independent subintervals as OpenMP tasks.
  bool parallel = true;
};

// All breakpoints in (lo, hi] by recursive line intersection: the cut
// capacity of a fixed source set is affine in lambda, so two bracketing sets
// determine a candidate lambda where their lines cross; a cold solve there
// either confirms it as the only breakpoint in between or yields a new set
// that splits the interval. Requires lo < hi, and lo >= 0 for networks whose
// excess is affine only on the nonnegative half-line.
Envelope FullyParametric(const ParametricNetwork& net, const Rational& lo,
                         const Rational& hi,
                         const FullyParametricOptions& options = {});

// The breakpoint adjacent to the anchor point, i.e. with the smallest
// budget. When the anchor is the empty set its lambda is the optimal ratio.
// Throws ContractError on an empty envelope.
const Breakpoint& LeftmostBreakpoint(const Envelope& env);

// Default envelope interval for the densest subgraph network of g. The upper
// end max_i d_i / (2 q_i) bounds every density. The lower end is density(V),
// or 0 for a full envelope dump (and whenever density(V) equals the upper
// end). Throws DegenerateInputError for an edgeless graph.
std::pair<Rational, Rational> DefaultDspInterval(const InputGraph& g,
                                                 bool full_envelope);

// Header "lambda,budget,benefit,set_size,lambda_exact".
void WriteEnvelopeCsv(std::ostream& out, const Envelope& env, int precision);

}  // namespace ipcut

#endif  // IPCUT_PARAMETRIC_H_

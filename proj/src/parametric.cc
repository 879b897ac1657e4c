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

#include "ipcut/parametric.h"

#include <algorithm>
#include <exception>
#include <ostream>
#include <utility>

#include "ipcut/errors.h"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ipcut {

bool SourceSetsShrink(const ParametricNetwork& net) {
  return net.trend() != SourceTrend::kNondecreasing;
}

Wide ParametricSweep::SafeScale(const ParametricNetwork& net, Wide max_den) {
  return CheckedAdd(CheckedMul(max_den, std::max<Wide>(1, net.SlopeBudget())),
                    1);
}

ParametricSweep::ParametricSweep(const ParametricNetwork& net, Order order,
                                 ExtremalCut which, Wide scale)
    : net_(net), order_(order), which_(which), scale_(scale) {
  if (scale_ <= 0) throw ContractError("sweep scale must be positive");
  try {
    CheckCapacityBudget(net_, scale_, {}, {});
  } catch (const OverflowError&) {
    warm_ = false;
  }
}

CutSolution ParametricSweep::SolveAt(const Rational& lambda) {
  if (last_) {
    const bool ordered = order_ == Order::kAscending ? *last_ < lambda
                                                     : lambda < *last_;
    if (!ordered) {
      throw ContractError("lambda sequence is not strictly monotone");
    }
  }
  last_ = lambda;
  ++solve_count_;
  CutSolution out;
  if (warm_) {
    // Side on which the requested extremal set is the one-sided limit.
    const bool want_left =
        SourceSetsShrink(net_) == (which_ == ExtremalCut::kMaximalSource);
    Wide p;
    if (scale_ % lambda.den() == 0) {
      p = lambda.num() * (scale_ / lambda.den());
    } else {
      if (scale_ <= CheckedMul(lambda.den(),
                               std::max<Wide>(1, net_.SlopeBudget()))) {
        throw ContractError("sweep scale too small to resolve lambda " +
                            lambda.ToString() + " exactly");
      }
      p = want_left ? lambda.FloorScaled(scale_) : lambda.CeilScaled(scale_);
    }
    try {
      InstantiateTerminals(net_, p, scale_, &source_caps_, &sink_caps_);
      if (!solver_) {
        const bool source_down =
            SourceSetsShrink(net_) == (order_ == Order::kAscending);
        const SweepDirection direction =
            source_down ? SweepDirection::kSourceNonincreasing
                        : SweepDirection::kSourceNondecreasing;
        InstantiatedNetwork inst = Instantiate(net_, p, scale_);
        solver_ = std::make_unique<MinCutSolver>(std::move(inst), direction);
        out = solver_->Cut(which_);
      } else {
        out = solver_->ContinueTerminals(source_caps_, sink_caps_, p, which_);
      }
    } catch (const OverflowError&) {
      if (solver_) throw;
      warm_ = false;
    }
  }
  if (!warm_) {
    MinCutSolver cold(Instantiate(net_, lambda));
    out = cold.Cut(which_);
  }
  out.p = lambda.num();
  out.q = lambda.den();
  out.cut_value = net_.ScaledCut(out.source_set, out.p, out.q);
  return out;
}

std::vector<CutSolution> SimpleParametric(const ParametricNetwork& net,
                                          const std::vector<Rational>& lambdas,
                                          ExtremalCut which) {
  for (size_t k = 1; k < lambdas.size(); ++k) {
    if (!(lambdas[k - 1] < lambdas[k])) {
      throw ContractError("lambda list must be strictly ascending");
    }
  }
  if (lambdas.empty()) return {};
  // A common multiple of the denominators keeps every instantiation exact;
  // otherwise fall back to a scale that separates breakpoints.
  Wide max_den = 1;
  Wide lcm = 1;
  bool lcm_ok = true;
  for (const Rational& l : lambdas) {
    max_den = std::max(max_den, l.den());
    if (lcm_ok) {
      const Wide step = l.den() / Gcd(lcm, l.den());
      Wide next;
      if (__builtin_mul_overflow(lcm, step, &next)) {
        lcm_ok = false;
      } else {
        lcm = next;
      }
    }
  }
  Wide scale = lcm;
  if (lcm_ok) {
    try {
      CheckCapacityBudget(net, lcm, {}, {});
    } catch (const OverflowError&) {
      lcm_ok = false;
    }
  }
  if (!lcm_ok) scale = ParametricSweep::SafeScale(net, max_den);
  ParametricSweep sweep(net, ParametricSweep::Order::kAscending, which, scale);
  std::vector<CutSolution> out;
  out.reserve(lambdas.size());
  for (const Rational& l : lambdas) out.push_back(sweep.SolveAt(l));
  return out;
}

namespace {

// Line L_S(lambda) = intercept + slope * lambda of the excess of S.
struct SetLine {
  NodeSubset set;
  Wide intercept = 0;
  Wide slope = 0;
};

bool SameLine(const SetLine& a, const SetLine& b) {
  return a.intercept == b.intercept && a.slope == b.slope;
}

struct ExtremalPair {
  SetLine larger;
  SetLine smaller;
  // Lines just left and right of lambda.
  const SetLine& left(bool shrink) const { return shrink ? larger : smaller; }
  const SetLine& right(bool shrink) const { return shrink ? smaller : larger; }
};

class EnvelopeBuilder {
 public:
  EnvelopeBuilder(const ParametricNetwork& net,
                  const FullyParametricOptions& options)
      : net_(net), options_(options), shrink_(SourceSetsShrink(net)) {}

  SetLine MakeLine(NodeSubset s) const {
    SetLine line;
    line.intercept = net_.ExcessIntercept(s);
    line.slope = net_.ExcessSlope(s);
    line.set = std::move(s);
    return line;
  }

  ExtremalPair SolveBoth(const Rational& lambda, int64_t* solves) const {
    MinCutSolver solver(Instantiate(net_, lambda));
    ++*solves;
    ExtremalPair pair;
    pair.larger = MakeLine(solver.Cut(ExtremalCut::kMaximalSource).source_set);
    pair.smaller = MakeLine(solver.Cut(ExtremalCut::kMinimalSource).source_set);
    return pair;
  }

  Breakpoint MakeBreakpoint(const Rational& lambda, const SetLine& larger,
                            bool merged) const {
    Breakpoint bp;
    bp.lambda = lambda;
    bp.source_set = larger.set;
    bp.set_size = larger.set.size();
    SetPoint(larger, &bp.budget, &bp.benefit);
    bp.merged = merged;
    return bp;
  }

  void SetPoint(const SetLine& line, Wide* budget, Wide* benefit) const {
    if (shrink_) {
      *budget = -line.slope;
      *benefit = line.intercept;
    } else {
      *budget = line.slope;
      *benefit = -line.intercept;
    }
  }

  // Breakpoints strictly inside (a, b), given the line optimal just right
  // of a and the line optimal just left of b.
  void Recurse(const Rational& a, const SetLine& right_of_a,
               const Rational& b, const SetLine& left_of_b,
               std::vector<Breakpoint>* out, int64_t* solves, int depth) const {
    if (SameLine(right_of_a, left_of_b)) return;
    const Rational cross(left_of_b.intercept - right_of_a.intercept,
                         right_of_a.slope - left_of_b.slope);
    const SetLine& larger =
        right_of_a.set.size() >= left_of_b.set.size() ? right_of_a : left_of_b;
    if (options_.precision > Rational(0) && (b - a) < options_.precision) {
      out->push_back(MakeBreakpoint(cross, larger, /*merged=*/true));
      return;
    }
    const ExtremalPair mid = SolveBoth(cross, solves);
    const Wide p = cross.num();
    const Wide q = cross.den();
    const Wide best = CheckedAdd(CheckedMul(q, mid.larger.intercept),
                                 CheckedMul(p, mid.larger.slope));
    const Wide bracket = CheckedAdd(CheckedMul(q, right_of_a.intercept),
                                    CheckedMul(p, right_of_a.slope));
    if (best == bracket) {
      // Tight: the two bracketing lines form the envelope on [a, b].
      out->push_back(MakeBreakpoint(cross, mid.larger, false));
      return;
    }
    if (!SameLine(mid.larger, mid.smaller)) {
      out->push_back(MakeBreakpoint(cross, mid.larger, false));
    }
    const SetLine& left_of_mid = mid.left(shrink_);
    const SetLine& right_of_mid = mid.right(shrink_);
    if (options_.parallel && depth < kMaxTaskDepth) {
      std::vector<Breakpoint> left_out, right_out;
      int64_t left_solves = 0, right_solves = 0;
      std::exception_ptr left_error, right_error;
#pragma omp task default(shared)
      try {
        Recurse(a, right_of_a, cross, left_of_mid, &left_out, &left_solves,
                depth + 1);
      } catch (...) {
        left_error = std::current_exception();
      }
#pragma omp task default(shared)
      try {
        Recurse(cross, right_of_mid, b, left_of_b, &right_out, &right_solves,
                depth + 1);
      } catch (...) {
        right_error = std::current_exception();
      }
#pragma omp taskwait
      if (left_error) std::rethrow_exception(left_error);
      if (right_error) std::rethrow_exception(right_error);
      out->insert(out->end(), left_out.begin(), left_out.end());
      out->insert(out->end(), right_out.begin(), right_out.end());
      *solves += left_solves + right_solves;
    } else {
      Recurse(a, right_of_a, cross, left_of_mid, out, solves, depth + 1);
      Recurse(cross, right_of_mid, b, left_of_b, out, solves, depth + 1);
    }
  }

  Envelope Run(const Rational& lo, const Rational& hi) const {
    Envelope env;
    env.sense = shrink_ ? EnvelopeSense::kConcaveMax : EnvelopeSense::kConvexMin;
    env.lo = lo;
    env.hi = hi;
    int64_t solves = 0;
    const ExtremalPair at_lo = SolveBoth(lo, &solves);
    const ExtremalPair at_hi = SolveBoth(hi, &solves);
    std::vector<Breakpoint> found;
    if (!SameLine(at_hi.larger, at_hi.smaller)) {
      found.push_back(MakeBreakpoint(hi, at_hi.larger, false));
    }
    const SetLine& anchor = shrink_ ? at_hi.right(shrink_) : at_lo.right(shrink_);
    env.anchor_set = anchor.set;
    SetPoint(anchor, &env.anchor_budget, &env.anchor_benefit);
    if (options_.parallel) {
      std::exception_ptr error;
#pragma omp parallel
#pragma omp single
      try {
        Recurse(lo, at_lo.right(shrink_), hi, at_hi.left(shrink_), &found,
                &solves, 0);
      } catch (...) {
        error = std::current_exception();
      }
      if (error) std::rethrow_exception(error);
    } else {
      Recurse(lo, at_lo.right(shrink_), hi, at_hi.left(shrink_), &found,
              &solves, 0);
    }
    std::sort(found.begin(), found.end(),
              [](const Breakpoint& x, const Breakpoint& y) {
                return x.lambda < y.lambda;
              });
    env.breakpoints = std::move(found);
    env.cut_solves = solves;
    return env;
  }

 private:
  static constexpr int kMaxTaskDepth = 12;
  const ParametricNetwork& net_;
  FullyParametricOptions options_;
  bool shrink_;
};

}  // namespace

Envelope FullyParametric(const ParametricNetwork& net, const Rational& lo,
                         const Rational& hi,
                         const FullyParametricOptions& options) {
  if (!(lo < hi)) throw ContractError("envelope interval needs lo < hi");
  if (!net.excess_affine_everywhere() && lo < Rational(0)) {
    throw ContractError("this network needs a nonnegative interval");
  }
  return EnvelopeBuilder(net, options).Run(lo, hi);
}

const Breakpoint& LeftmostBreakpoint(const Envelope& env) {
  if (env.breakpoints.empty()) throw ContractError("empty envelope");
  return env.sense == EnvelopeSense::kConcaveMax ? env.breakpoints.back()
                                                 : env.breakpoints.front();
}

std::pair<Rational, Rational> DefaultDspInterval(const InputGraph& g,
                                                 bool full_envelope) {
  if (g.m() == 0) throw DegenerateInputError("graph has no edges");
  Rational hi(0);
  for (int i = 0; i < g.n(); ++i) {
    hi = std::max(hi, Rational(g.Degree(i), 2 * Wide{g.q(i)}));
  }
  Rational lo(0);
  if (!full_envelope) {
    lo = Density(g, NodeSubset::Full(g.n()));
    if (!(lo < hi)) lo = Rational(0);
  }
  return {lo, hi};
}

void WriteEnvelopeCsv(std::ostream& out, const Envelope& env, int precision) {
  out << "lambda,budget,benefit,set_size,lambda_exact\n";
  for (const Breakpoint& bp : env.breakpoints) {
    out << bp.lambda.ToDecimal(precision) << "," << WideToString(bp.budget)
        << "," << WideToString(bp.benefit) << "," << bp.set_size << ","
        << bp.lambda.ToString() << "\n";
  }
}

}  // namespace ipcut

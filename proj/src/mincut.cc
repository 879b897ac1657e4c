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

#include "ipcut/mincut.h"

#include <algorithm>
#include <climits>
#include <deque>
#include <utility>

#include "ipcut/errors.h"

namespace ipcut {
namespace {

constexpr Wide kCapacityBudget = Wide{1} << 62;
// Relabel cost constant and global update weights (as in HIPR).
constexpr int64_t kRelabelWork = 12;
constexpr int64_t kNodeWeight = 6;

}  // namespace

MinCutSolver::MinCutSolver(InstantiatedNetwork net, SweepDirection direction)
    : net_(std::move(net)), direction_(direction) {
  Build();
  // Cold start: saturate every source arc.
  label_.assign(num_nodes_, 0);
  label_[source_] = num_nodes_;
  excess_.assign(num_nodes_, 0);
  for (int i = 0; i < net_.n; ++i) {
    const int64_t a = source_arc_[i];
    const int64_t cap = engine_source_cap_[i];
    residual_[a] = 0;
    residual_[mate_[a]] = cap;
    excess_[i] = cap;
  }
  RunPhaseOne();
  solve_count_ = 1;
}

void MinCutSolver::Build() {
  const int n = net_.n;
  if (static_cast<int>(net_.source_caps.size()) != n ||
      static_cast<int>(net_.sink_caps.size()) != n) {
    throw ContractError("terminal capacity vectors have the wrong length");
  }
  num_nodes_ = n + 2;
  source_ = n;
  sink_ = n + 1;
  const std::vector<int64_t>& src =
      reversed() ? net_.sink_caps : net_.source_caps;
  const std::vector<int64_t>& snk =
      reversed() ? net_.source_caps : net_.sink_caps;
  engine_source_cap_ = src;
  engine_sink_cap_ = snk;

  struct Pair {
    int32_t tail;
    int32_t head;
    int64_t cap;
  };
  std::vector<Pair> pairs;
  pairs.reserve(net_.arcs.size() + 2 * static_cast<size_t>(n));
  for (const NetworkArc& arc : net_.arcs) {
    if (arc.capacity < 0) throw ContractError("negative arc capacity");
    if (reversed()) {
      pairs.push_back({arc.head, arc.tail, arc.capacity});
    } else {
      pairs.push_back({arc.tail, arc.head, arc.capacity});
    }
  }
  for (int i = 0; i < n; ++i) {
    if (src[i] < 0 || snk[i] < 0) {
      throw ContractError("negative terminal capacity");
    }
    pairs.push_back({source_, i, src[i]});
  }
  for (int i = 0; i < n; ++i) pairs.push_back({i, sink_, snk[i]});

  first_arc_.assign(num_nodes_ + 1, 0);
  for (const Pair& p : pairs) {
    ++first_arc_[p.tail + 1];
    ++first_arc_[p.head + 1];
  }
  for (int v = 0; v < num_nodes_; ++v) first_arc_[v + 1] += first_arc_[v];
  const int64_t num_arcs = first_arc_[num_nodes_];
  head_.assign(num_arcs, 0);
  mate_.assign(num_arcs, 0);
  residual_.assign(num_arcs, 0);
  source_arc_.assign(n, 0);
  sink_arc_.assign(n, 0);
  std::vector<int64_t> fill(first_arc_.begin(), first_arc_.end() - 1);
  for (size_t k = 0; k < pairs.size(); ++k) {
    const Pair& p = pairs[k];
    const int64_t fwd = fill[p.tail]++;
    const int64_t bwd = fill[p.head]++;
    head_[fwd] = p.head;
    head_[bwd] = p.tail;
    mate_[fwd] = bwd;
    mate_[bwd] = fwd;
    residual_[fwd] = p.cap;
    residual_[bwd] = 0;
    if (p.tail == source_) source_arc_[p.head] = fwd;
    if (p.head == sink_) sink_arc_[p.tail] = fwd;
  }
  current_arc_.assign(num_nodes_, 0);
  active_head_.assign(num_nodes_, -1);
  active_next_.assign(num_nodes_, -1);
  all_head_.assign(num_nodes_, -1);
  all_next_.assign(num_nodes_, -1);
  all_prev_.assign(num_nodes_, -1);
}

void MinCutSolver::BucketInsert(int v) {
  const int l = label_[v];
  all_prev_[v] = -1;
  all_next_[v] = all_head_[l];
  if (all_head_[l] >= 0) all_prev_[all_head_[l]] = v;
  all_head_[l] = v;
  max_label_ = std::max(max_label_, l);
}

void MinCutSolver::BucketRemove(int v) {
  const int l = label_[v];
  if (all_prev_[v] >= 0) {
    all_next_[all_prev_[v]] = all_next_[v];
  } else {
    all_head_[l] = all_next_[v];
  }
  if (all_next_[v] >= 0) all_prev_[all_next_[v]] = all_prev_[v];
}

void MinCutSolver::Activate(int v) {
  const int l = label_[v];
  active_next_[v] = active_head_[l];
  active_head_[l] = v;
  max_active_ = std::max(max_active_, l);
}

void MinCutSolver::GlobalRelabelToSink() {
  const int n = net_.n;
  std::vector<char> reached(num_nodes_, 0);
  std::vector<int32_t> queue;
  queue.reserve(num_nodes_);
  queue.push_back(sink_);
  reached[sink_] = 1;
  reached[source_] = 1;
  std::vector<int32_t> dist(num_nodes_, 0);
  for (size_t h = 0; h < queue.size(); ++h) {
    const int x = queue[h];
    for (int64_t a = first_arc_[x]; a < first_arc_[x + 1]; ++a) {
      const int y = head_[a];
      if (reached[y] || residual_[mate_[a]] <= 0) continue;
      reached[y] = 1;
      dist[y] = dist[x] + 1;
      queue.push_back(y);
    }
  }
  std::fill(active_head_.begin(), active_head_.end(), -1);
  std::fill(all_head_.begin(), all_head_.end(), -1);
  max_active_ = -1;
  max_label_ = -1;
  for (int v = 0; v < n; ++v) {
    current_arc_[v] = first_arc_[v];
    if (reached[v]) {
      label_[v] = std::max(label_[v], dist[v]);
    } else if (label_[v] < num_nodes_) {
      label_[v] = num_nodes_;
    }
    if (label_[v] < num_nodes_) {
      BucketInsert(v);
      if (excess_[v] > 0) Activate(v);
    }
  }
  work_since_relabel_ = 0;
}

void MinCutSolver::Gap(int empty_label) {
  for (int l = empty_label; l <= max_label_; ++l) {
    for (int u = all_head_[l]; u >= 0; u = all_next_[u]) {
      label_[u] = num_nodes_;
    }
    all_head_[l] = -1;
    active_head_[l] = -1;
  }
  max_label_ = empty_label - 1;
  max_active_ = std::min(max_active_, empty_label - 1);
}

void MinCutSolver::Discharge(int v) {
  while (true) {
    const int32_t dv = label_[v];
    const int64_t end = first_arc_[v + 1];
    for (int64_t a = current_arc_[v]; a < end; ++a) {
      if (residual_[a] <= 0) continue;
      const int w = head_[a];
      if (label_[w] != dv - 1) continue;
      const int64_t delta = std::min(excess_[v], residual_[a]);
      residual_[a] -= delta;
      residual_[mate_[a]] += delta;
      if (w != sink_ && excess_[w] == 0) Activate(w);
      excess_[w] += delta;
      excess_[v] -= delta;
      if (excess_[v] == 0) {
        current_arc_[v] = a;
        return;
      }
    }
    // Relabel. If v is alone on its level the level empties: apply the gap.
    if (all_head_[dv] == v && all_next_[v] < 0) {
      Gap(dv);
      return;
    }
    int32_t new_label = INT_MAX;
    int64_t best = first_arc_[v];
    for (int64_t a = first_arc_[v]; a < end; ++a) {
      if (residual_[a] > 0 && label_[head_[a]] + 1 < new_label) {
        new_label = label_[head_[a]] + 1;
        best = a;
      }
    }
    work_since_relabel_ += kRelabelWork + (end - first_arc_[v]);
    BucketRemove(v);
    if (new_label >= num_nodes_) {
      label_[v] = new_label == INT_MAX ? num_nodes_ : new_label;
      return;
    }
    label_[v] = new_label;
    current_arc_[v] = best;
    BucketInsert(v);
  }
}

void MinCutSolver::RunPhaseOne() {
  const int64_t update_threshold =
      2 * (kNodeWeight * num_nodes_ + first_arc_[num_nodes_] / 2);
  GlobalRelabelToSink();
  while (true) {
    while (max_active_ >= 0 && active_head_[max_active_] < 0) --max_active_;
    if (max_active_ < 0) break;
    const int v = active_head_[max_active_];
    active_head_[max_active_] = active_next_[v];
    // A node can be listed under a stale level after a gap or global update
    // rebuilt the lists; skip such entries.
    if (label_[v] != max_active_ || excess_[v] <= 0) continue;
    Discharge(v);
    if (work_since_relabel_ > update_threshold) GlobalRelabelToSink();
  }
  // Afterwards label >= num_nodes_ holds exactly for the nodes that cannot
  // reach the sink, which phase two relies on.
  GlobalRelabelToSink();
  flow_value_ = excess_[sink_];
  phase_two_done_ = false;
}

void MinCutSolver::GlobalRelabelToSource() {
  std::vector<char> reached(num_nodes_, 0);
  std::vector<int32_t> dist(num_nodes_, 0);
  std::vector<int32_t> queue;
  queue.push_back(source_);
  reached[source_] = 1;
  reached[sink_] = 1;
  for (size_t h = 0; h < queue.size(); ++h) {
    const int x = queue[h];
    for (int64_t a = first_arc_[x]; a < first_arc_[x + 1]; ++a) {
      const int y = head_[a];
      if (reached[y] || label_[y] < num_nodes_ ||
          residual_[mate_[a]] <= 0) {
        continue;
      }
      reached[y] = 1;
      dist[y] = dist[x] + 1;
      queue.push_back(y);
    }
  }
  for (int v = 0; v < net_.n; ++v) {
    current_arc_[v] = first_arc_[v];
    if (reached[v] && v != source_) {
      label_[v] = std::max(label_[v], num_nodes_ + dist[v]);
    }
  }
}

void MinCutSolver::DischargeToSource(int v, std::vector<int>* queue) {
  while (excess_[v] > 0) {
    const int32_t dv = label_[v];
    const int64_t end = first_arc_[v + 1];
    int64_t a = current_arc_[v];
    for (; a < end; ++a) {
      if (residual_[a] <= 0) continue;
      const int w = head_[a];
      if (label_[w] != dv - 1) continue;
      const int64_t delta = std::min(excess_[v], residual_[a]);
      residual_[a] -= delta;
      residual_[mate_[a]] += delta;
      if (w != source_ && excess_[w] == 0) queue->push_back(w);
      excess_[w] += delta;
      excess_[v] -= delta;
      if (excess_[v] == 0) break;
    }
    if (excess_[v] == 0) {
      current_arc_[v] = a;
      return;
    }
    int32_t new_label = INT_MAX;
    int64_t best = first_arc_[v];
    for (int64_t b = first_arc_[v]; b < end; ++b) {
      if (residual_[b] > 0 && label_[head_[b]] + 1 < new_label) {
        new_label = label_[head_[b]] + 1;
        best = b;
      }
    }
    if (new_label == INT_MAX) {
      throw ContractError("internal error: stranded excess in phase two");
    }
    label_[v] = new_label;
    current_arc_[v] = best;
  }
}

void MinCutSolver::RunPhaseTwo() {
  GlobalRelabelToSource();
  std::vector<int> queue;
  for (int v = 0; v < net_.n; ++v) {
    if (excess_[v] > 0) queue.push_back(v);
  }
  for (size_t h = 0; h < queue.size(); ++h) {
    DischargeToSource(queue[h], &queue);
  }
  excess_[source_] = 0;
  phase_two_done_ = true;
}

NodeSubset MinCutSolver::CannotReachSink() const {
  std::vector<char> reached(num_nodes_, 0);
  std::vector<int32_t> queue{sink_};
  reached[sink_] = 1;
  for (size_t h = 0; h < queue.size(); ++h) {
    const int x = queue[h];
    for (int64_t a = first_arc_[x]; a < first_arc_[x + 1]; ++a) {
      const int y = head_[a];
      if (!reached[y] && residual_[mate_[a]] > 0) {
        reached[y] = 1;
        queue.push_back(y);
      }
    }
  }
  NodeSubset set(net_.n);
  for (int v = 0; v < net_.n; ++v) {
    if (!reached[v]) set.Insert(v);
  }
  return set;
}

NodeSubset MinCutSolver::ReachableFromSource() const {
  std::vector<char> reached(num_nodes_, 0);
  std::vector<int32_t> queue{source_};
  reached[source_] = 1;
  for (size_t h = 0; h < queue.size(); ++h) {
    const int x = queue[h];
    for (int64_t a = first_arc_[x]; a < first_arc_[x + 1]; ++a) {
      const int y = head_[a];
      if (!reached[y] && residual_[a] > 0) {
        reached[y] = 1;
        queue.push_back(y);
      }
    }
  }
  NodeSubset set(net_.n);
  for (int v = 0; v < net_.n; ++v) {
    if (reached[v]) set.Insert(v);
  }
  return set;
}

CutSolution MinCutSolver::Cut(ExtremalCut which) {
  const bool engine_minimal =
      (which == ExtremalCut::kMinimalSource) != reversed();
  NodeSubset engine_set;
  if (engine_minimal) {
    if (!phase_two_done_) RunPhaseTwo();
    engine_set = ReachableFromSource();
  } else {
    engine_set = CannotReachSink();
  }
  CutSolution out;
  out.source_set = reversed() ? engine_set.Complement() : engine_set;
  out.cut_value = CutCapacity(net_, out.source_set);
  out.p = net_.p;
  out.q = net_.q;
  out.extremal = which;
  return out;
}

void MinCutSolver::ApplyTerminals(const std::vector<int64_t>& engine_source,
                                  const std::vector<int64_t>& engine_sink) {
  for (int i = 0; i < net_.n; ++i) {
    const int64_t a = source_arc_[i];
    const int64_t old_cap = engine_source_cap_[i];
    const int64_t new_cap = engine_source[i];
    if (new_cap != old_cap) {
      if (label_[i] < num_nodes_) {
        // Keep the arc saturated.
        const int64_t flow = old_cap - residual_[a];
        excess_[i] += new_cap - flow;
        residual_[a] = 0;
        residual_[mate_[a]] = new_cap;
      } else {
        residual_[a] += new_cap - old_cap;
      }
      engine_source_cap_[i] = new_cap;
    }
    const int64_t b = sink_arc_[i];
    const int64_t old_sink = engine_sink_cap_[i];
    const int64_t new_sink = engine_sink[i];
    if (new_sink != old_sink) {
      const int64_t flow = old_sink - residual_[b];
      if (flow > new_sink) {
        excess_[i] += flow - new_sink;
        excess_[sink_] -= flow - new_sink;
        residual_[b] = 0;
        residual_[mate_[b]] = new_sink;
      } else {
        residual_[b] = new_sink - flow;
      }
      engine_sink_cap_[i] = new_sink;
    }
  }
}

CutSolution MinCutSolver::ContinueTerminals(
    const std::vector<int64_t>& source_caps,
    const std::vector<int64_t>& sink_caps, Wide p, ExtremalCut which) {
  const int n = net_.n;
  if (static_cast<int>(source_caps.size()) != n ||
      static_cast<int>(sink_caps.size()) != n) {
    throw ContractError("terminal capacity vectors have the wrong length");
  }
  const std::vector<int64_t>& engine_source =
      reversed() ? sink_caps : source_caps;
  const std::vector<int64_t>& engine_sink =
      reversed() ? source_caps : sink_caps;
  Wide total = 0;
  for (const NetworkArc& arc : net_.arcs) total += arc.capacity;
  for (int i = 0; i < n; ++i) {
    if (engine_source[i] < engine_source_cap_[i] ||
        engine_sink[i] > engine_sink_cap_[i] || engine_sink[i] < 0) {
      throw ContractError(
          "terminal update of node " + std::to_string(i) +
          " is not monotone in the declared sweep direction");
    }
    total += engine_source[i];
    total += engine_sink[i];
  }
  if (total >= kCapacityBudget) {
    throw OverflowError("total network capacity exceeds 2^62");
  }
  ApplyTerminals(engine_source, engine_sink);
  net_.source_caps = source_caps;
  net_.sink_caps = sink_caps;
  net_.p = p;
  RunPhaseOne();
  ++solve_count_;
  return Cut(which);
}

CutSolution MinCutSolver::Continue(const InstantiatedNetwork& next,
                                   ExtremalCut which) {
  bool same_arcs = next.n == net_.n && next.arcs.size() == net_.arcs.size();
  for (size_t k = 0; same_arcs && k < next.arcs.size(); ++k) {
    same_arcs = next.arcs[k].tail == net_.arcs[k].tail &&
                next.arcs[k].head == net_.arcs[k].head &&
                next.arcs[k].capacity == net_.arcs[k].capacity;
  }
  if (!same_arcs) {
    throw ContractError("continuation may only change terminal capacities");
  }
  net_.q = next.q;
  return ContinueTerminals(next.source_caps, next.sink_caps, next.p, which);
}

std::pair<CutSolution, MinCutSolver> SolveMinCut(const InstantiatedNetwork& net,
                                                 ExtremalCut which,
                                                 SweepDirection direction) {
  MinCutSolver solver(net, direction);
  CutSolution cut = solver.Cut(which);
  return {std::move(cut), std::move(solver)};
}

}  // namespace ipcut

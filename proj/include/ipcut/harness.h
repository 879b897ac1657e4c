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

// Command implementations behind the ipcut binary: input pipelines, seed
// partitions, versioned JSON run reports and the benchmark runner.

#ifndef IPCUT_HARNESS_H_
#define IPCUT_HARNESS_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "ipcut/errors.h"
#include "ipcut/graph.h"
#include "ipcut/ipc.h"
#include "ipcut/parametric.h"
#include "ipcut/peeling.h"

namespace ipcut {

inline constexpr int kReportSchemaVersion = 1;

// The run was refused on purpose (e.g. conductance* on a disconnected graph
// without a component choice).
class RefusalError : public Error {
 public:
  using Error::Error;
};

enum class OutputFormat { kJson, kCsv, kTable };

struct RunConfig {
  std::string graph_path;
  bool weighted = false;
  // Unweighted input: keep parallel-edge multiplicities as weights instead
  // of unit weights.
  bool multiplicity = false;
  int precision = 4;
  std::string node_weights_path;
  std::string partition_path;
  std::string seed_ids_path;
  // "largest", an original node id, or empty.
  std::string component;
  std::optional<std::pair<Rational, Rational>> interval;
  std::string output_dir;
  OutputFormat format = OutputFormat::kTable;
  int iterations = 1;
  // "dsp" or "conductance-star" for the envelope command.
  std::string problem = "dsp";
  // Serial envelope recursion instead of OpenMP tasks.
  bool serial = false;
};

struct RunReport {
  std::string dataset;
  std::string algorithm;
  int64_t n = 0;
  int64_t m = 0;
  Rational ratio;
  int precision = 4;
  int64_t set_size = 0;
  int64_t explored = 0;
  bool certified = false;
  double wall_time_seconds = 0;
  int64_t cut_solves = 0;
  nlohmann::json config;
  // Original ids of the reported subset, ascending.
  std::vector<int64_t> subset;
  // Extra algorithm-specific fields.
  nlohmann::json details;
  // CSV payload of the command (trace, envelope or per-pass densities).
  std::string csv;
  std::string csv_name;

  nlohmann::json ToJson() const;
  std::string ToTable() const;
};

// Loads a graph as configured: SNAP loader, unit weights for unweighted
// input unless multiplicities are requested, optional node weight file.
InputGraph LoadConfiguredGraph(const RunConfig& config);

// METIS partition output: line i holds the part of the i-th node in
// ascending original-id order. The seed is the part with the most nodes
// (lowest part label on ties). Throws FormatError on length mismatch or if
// the seed would cover V.
NodeSubset ReadMetisPartition(const InputGraph& g, std::istream& in);
// Whitespace separated original ids ('#' comments allowed).
NodeSubset ReadSeedIds(const InputGraph& g, std::istream& in);
// Deterministic two-way split by breadth-first growth from the node with
// the smallest original id until half of the nodes are covered. Returns the
// part label (0 or 1) per node in ascending original-id order, i.e. the
// same layout as a METIS partition file.
std::vector<int> BfsBisection(const InputGraph& g);
void WriteMetisPartition(std::ostream& out, const std::vector<int>& parts);

// 20 disjoint 60-cliques plus a complete bipartite graph between 30 hubs
// and 2000 leaves (n = 3230, m = 95400). Peeling stalls slightly below the
// optimum on this graph.
InputGraph CloseCliquesGraph();
void WriteEdgeList(std::ostream& out, const InputGraph& g);

RunReport CmdDsp(const RunConfig& config);
RunReport CmdConductanceStar(const RunConfig& config);
RunReport CmdEnvelope(const RunConfig& config);
RunReport CmdGreedy(const RunConfig& config);
RunReport CmdGreedyPlusPlus(const RunConfig& config);

// Writes report.json, the CSV payload and node_map.csv into
// config.output_dir (created if needed).
void WriteReportFiles(const RunReport& report, const InputGraph* graph,
                      const std::string& output_dir);

struct BenchOutcome {
  nlohmann::json summary;
  bool all_ok = true;
};

// Runs every (dataset, algorithm, repetition) cell of the manifest and
// writes per-cell reports plus summary.json and summary.csv to output_dir.
// Missing datasets fail their cells without stopping the run.
BenchOutcome CmdBench(const std::string& manifest_path,
                      const std::string& output_dir, int precision);

int ExitCodeFor(const std::exception& e);

}  // namespace ipcut

#endif  // IPCUT_HARNESS_H_

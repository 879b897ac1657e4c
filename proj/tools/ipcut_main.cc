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

// ipcut: certified densest subgraph and conductance* from the command line.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ipcut/harness.h"

namespace {

using ipcut::OutputFormat;
using ipcut::RunConfig;
using ipcut::RunReport;

void AddCommonFlags(CLI::App* cmd, RunConfig* config) {
  cmd->add_option("graph", config->graph_path, "SNAP edge list")
      ->required();
  cmd->add_flag("--weighted", config->weighted,
                "read 'u v w' lines with positive integer weights");
  cmd->add_flag("--multiplicity", config->multiplicity,
                "unweighted input: weight merged parallel edges by their "
                "count instead of 1");
  cmd->add_option("--precision", config->precision,
                  "decimal places for printing and the envelope guard")
      ->check(CLI::Range(0, 18));
  cmd->add_option("--node-weights", config->node_weights_path,
                  "file of 'id q' lines");
  cmd->add_option("--output", config->output_dir,
                  "directory for report.json, CSV and node_map.csv");
}

void AddSeedFlags(CLI::App* cmd, RunConfig* config) {
  auto* partition = cmd->add_option("--partition", config->partition_path,
                                    "METIS partition file; the larger part "
                                    "becomes the seed");
  auto* seeds = cmd->add_option("--seed-ids", config->seed_ids_path,
                                "file of seed node ids");
  partition->excludes(seeds);
  cmd->add_option("--component", config->component,
                  "restrict a disconnected graph to 'largest' or to the "
                  "component of the given node id");
}

void Emit(const RunReport& report, const RunConfig& config,
          const std::string& format) {
  if (format == "json") {
    std::cout << report.ToJson().dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << report.csv;
  } else {
    std::cout << report.ToTable();
  }
  if (!config.output_dir.empty()) {
    // The node map is written against the graph as loaded.
    ipcut::InputGraph g = ipcut::LoadConfiguredGraph(config);
    ipcut::WriteReportFiles(report, &g, config.output_dir);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified densest subgraph and conductance* via incremental "
               "parametric cuts"};
  app.require_subcommand(1);
  RunConfig config;
  std::string format = "table";
  std::vector<std::string> interval;
  std::string manifest;
  std::string bench_output = "bench-out";
  std::string out_path;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "json, csv or table")
        ->check(CLI::IsMember({"json", "csv", "table"}));
  };

  CLI::App* dsp = app.add_subcommand("dsp", "maximum density subgraph");
  AddCommonFlags(dsp, &config);
  add_format(dsp);

  CLI::App* cond =
      app.add_subcommand("conductance-star", "minimum conductance*");
  AddCommonFlags(cond, &config);
  AddSeedFlags(cond, &config);
  add_format(cond);

  CLI::App* env = app.add_subcommand("envelope", "all breakpoints");
  AddCommonFlags(env, &config);
  AddSeedFlags(env, &config);
  add_format(env);
  env->add_option("--problem", config.problem, "dsp or conductance-star")
      ->check(CLI::IsMember({"dsp", "conductance-star"}));
  env->add_option("--interval", interval, "lambda range: lo hi (P/Q or "
                                          "decimal)")
      ->expected(2);
  env->add_flag("--serial", config.serial, "disable OpenMP tasks");

  CLI::App* greedy = app.add_subcommand("greedy", "Charikar peeling");
  AddCommonFlags(greedy, &config);
  add_format(greedy);

  CLI::App* greedypp = app.add_subcommand("greedypp", "Greedy++ peeling");
  AddCommonFlags(greedypp, &config);
  add_format(greedypp);
  greedypp->add_option("--iterations", config.iterations, "number of passes")
      ->check(CLI::PositiveNumber);

  CLI::App* bench = app.add_subcommand("bench", "run a benchmark manifest");
  bench->add_option("manifest", manifest, "manifest JSON")->required();
  bench->add_option("--output", bench_output, "report directory");
  bench->add_option("--precision", config.precision, "decimal places");

  CLI::App* partition = app.add_subcommand(
      "partition", "write a deterministic BFS bisection in METIS format");
  partition->add_option("graph", config.graph_path, "SNAP edge list")
      ->required();
  partition->add_flag("--weighted", config.weighted, "weighted input");
  partition->add_option("--out", out_path, "output file")->required();

  CLI::App* generate = app.add_subcommand(
      "generate-close-cliques", "write the close-cliques test graph");
  generate->add_option("--out", out_path, "output file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (interval.size() == 2) {
      config.interval = {ipcut::Rational::Parse(interval[0]),
                         ipcut::Rational::Parse(interval[1])};
    }
    if (*bench) {
      const ipcut::BenchOutcome outcome =
          ipcut::CmdBench(manifest, bench_output, config.precision);
      std::cout << outcome.summary.dump(2) << "\n";
      return outcome.all_ok ? 0 : 1;
    }
    if (*partition) {
      const ipcut::InputGraph g = ipcut::LoadEdgeListFile(
          config.graph_path, config.weighted);
      std::ofstream out(out_path);
      if (!out) throw ipcut::IoError("cannot write '" + out_path + "'");
      ipcut::WriteMetisPartition(out, ipcut::BfsBisection(g));
      return 0;
    }
    if (*generate) {
      std::ofstream out(out_path);
      if (!out) throw ipcut::IoError("cannot write '" + out_path + "'");
      ipcut::WriteEdgeList(out, ipcut::CloseCliquesGraph());
      return 0;
    }
    RunReport report;
    if (*dsp) {
      report = ipcut::CmdDsp(config);
    } else if (*cond) {
      report = ipcut::CmdConductanceStar(config);
    } else if (*env) {
      report = ipcut::CmdEnvelope(config);
    } else if (*greedy) {
      report = ipcut::CmdGreedy(config);
    } else {
      report = ipcut::CmdGreedyPlusPlus(config);
    }
    Emit(report, config, format);
    const bool complete = report.certified || *greedy || *greedypp;
    return complete ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return ipcut::ExitCodeFor(e);
  }
}

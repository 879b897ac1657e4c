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

#include "ipcut/harness.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

namespace ipcut {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

double SecondsSince(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

json RationalJson(const Rational& r, int precision) {
  return json{{"decimal", r.ToDecimal(precision)}, {"exact", r.ToString()}};
}

std::string DatasetName(const std::string& path) {
  return fs::path(path).stem().string();
}

std::vector<int64_t> OriginalIds(const InputGraph& g, const NodeSubset& s) {
  std::vector<int64_t> ids;
  ids.reserve(s.size());
  for (int i : s.Members()) ids.push_back(g.OriginalId(i));
  std::sort(ids.begin(), ids.end());
  return ids;
}

// Dense ids in ascending original-id order.
std::vector<int> NodesByOriginalId(const InputGraph& g) {
  std::vector<int> order(g.n());
  for (int i = 0; i < g.n(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return g.OriginalId(a) < g.OriginalId(b);
  });
  return order;
}

json ConfigJson(const RunConfig& c) {
  json j{{"graph", c.graph_path},
         {"weighted", c.weighted},
         {"multiplicity", c.multiplicity},
         {"precision", c.precision}};
  if (!c.node_weights_path.empty()) j["node_weights"] = c.node_weights_path;
  if (!c.partition_path.empty()) j["partition"] = c.partition_path;
  if (!c.seed_ids_path.empty()) j["seed_ids"] = c.seed_ids_path;
  if (!c.component.empty()) j["component"] = c.component;
  if (c.interval) {
    j["interval"] = {c.interval->first.ToString(),
                     c.interval->second.ToString()};
  }
  return j;
}

std::ifstream OpenInput(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  return in;
}

Rational PrecisionStep(int precision) {
  Wide den = 1;
  for (int i = 0; i < precision; ++i) den = CheckedMul(den, 10);
  return Rational(1, den);
}

// Restricts g to one connected component when asked to, and refuses
// disconnected graphs otherwise.
InputGraph SelectComponent(const InputGraph& g, const std::string& component,
                           json* details) {
  int count = 0;
  const std::vector<int> label = ConnectedComponents(g, &count);
  (*details)["components"] = count;
  if (count <= 1) return g;
  if (component.empty()) {
    throw RefusalError(
        "graph has " + std::to_string(count) +
        " connected components; conductance* is 0 on any component that "
        "avoids the seed. Pass --component largest or --component <node id>");
  }
  int chosen = 0;
  if (component == "largest") {
    std::vector<int> size(count, 0);
    for (int l : label) ++size[l];
    chosen = static_cast<int>(std::max_element(size.begin(), size.end()) -
                              size.begin());
  } else {
    int64_t id = 0;
    try {
      id = static_cast<int64_t>(ParseWide(component));
    } catch (const Error&) {
      throw FormatError("--component expects 'largest' or a node id");
    }
    const std::optional<int> node = g.FindNode(id);
    if (!node) throw FormatError("unknown node id " + component);
    chosen = label[*node];
  }
  NodeSubset keep(g.n());
  for (int i = 0; i < g.n(); ++i) {
    if (label[i] == chosen) keep.Insert(i);
  }
  return InducedSubgraph(g, keep);
}

struct ConductanceInput {
  InputGraph graph;
  NodeSubset seed;
};

ConductanceInput PrepareConductance(const RunConfig& config, json* details) {
  InputGraph g = SelectComponent(LoadConfiguredGraph(config), config.component,
                                 details);
  if (config.node_weights_path.empty()) g = g.WithDegreeNodeWeights();
  NodeSubset seed;
  if (!config.partition_path.empty()) {
    std::ifstream in = OpenInput(config.partition_path);
    seed = ReadMetisPartition(g, in);
  } else if (!config.seed_ids_path.empty()) {
    std::ifstream in = OpenInput(config.seed_ids_path);
    seed = ReadSeedIds(g, in);
  } else {
    throw FormatError("conductance* needs --partition or --seed-ids");
  }
  return {std::move(g), std::move(seed)};
}

void FillFromRatioResult(const InputGraph& g, const RatioResult& r,
                         RunReport* report, int precision) {
  report->ratio = r.ratio;
  report->set_size = r.optimal_set.size();
  report->explored = static_cast<int64_t>(r.trace.size());
  report->cut_solves = r.cut_solve_count;
  report->subset = OriginalIds(g, r.optimal_set);
  std::ostringstream csv;
  WriteTraceCsv(csv, r, precision);
  report->csv = csv.str();
  report->csv_name = "trace.csv";
  report->details["warm_started"] = r.warm_started;
  json trace = json::array();
  for (size_t k = 0; k < r.trace.size(); ++k) {
    trace.push_back({{"k", k},
                     {"lambda", RationalJson(r.trace[k].lambda, precision)},
                     {"improve", WideToString(r.trace[k].improve)},
                     {"set_size", r.trace[k].set_size}});
  }
  report->details["trace"] = trace;
}

RunReport PeelReport(const RunConfig& config, int iterations,
                     const std::string& algorithm) {
  const auto t0 = std::chrono::steady_clock::now();
  const InputGraph g = LoadConfiguredGraph(config);
  const PeelResult r = GreedyPlusPlus(g, iterations);
  RunReport report;
  report.dataset = DatasetName(config.graph_path);
  report.algorithm = algorithm;
  report.n = g.n();
  report.m = g.m();
  report.precision = config.precision;
  report.ratio = r.best_density;
  report.set_size = r.best_set.size();
  report.explored = iterations;
  report.certified = false;
  report.subset = OriginalIds(g, r.best_set);
  report.config = ConfigJson(config);
  report.config["iterations"] = iterations;
  report.details["best_pass"] = r.best_pass + 1;
  std::ostringstream csv;
  WritePeelCsv(csv, r, config.precision);
  report.csv = csv.str();
  report.csv_name = "passes.csv";
  report.wall_time_seconds = SecondsSince(t0);
  return report;
}

}  // namespace

json RunReport::ToJson() const {
  json j{{"schema_version", kReportSchemaVersion},
         {"dataset", dataset},
         {"algorithm", algorithm},
         {"n", n},
         {"m", m},
         {"ratio", RationalJson(ratio, precision)},
         {"set_size", set_size},
         {"explored", explored},
         {"certified", certified},
         {"wall_time_s", wall_time_seconds},
         {"cut_solves", cut_solves},
         {"config", config},
         {"subset", subset}};
  if (!details.is_null()) j["details"] = details;
  return j;
}

std::string RunReport::ToTable() const {
  const json j = ToJson();
  std::ostringstream out;
  auto row = [&](const std::string& key, const std::string& value) {
    out << "  " << key << std::string(key.size() < 12 ? 12 - key.size() : 1, ' ')
        << value << "\n";
  };
  out << j["algorithm"].get<std::string>() << " on "
      << j["dataset"].get<std::string>() << "\n";
  row("n", std::to_string(n));
  row("m", std::to_string(m));
  row("ratio", j["ratio"]["decimal"].get<std::string>() + "  (" +
                   j["ratio"]["exact"].get<std::string>() + ")");
  row("set size", std::to_string(set_size));
  row("explored", std::to_string(explored));
  row("certified", certified ? "yes" : "no");
  row("cut solves", std::to_string(cut_solves));
  char time[32];
  std::snprintf(time, sizeof(time), "%.3f s", wall_time_seconds);
  row("wall time", time);
  return out.str();
}

InputGraph LoadConfiguredGraph(const RunConfig& config) {
  InputGraph g = LoadEdgeListFile(config.graph_path, config.weighted);
  if (!config.weighted && !config.multiplicity) g = g.WithUnitEdgeWeights();
  if (!config.node_weights_path.empty()) {
    std::ifstream in = OpenInput(config.node_weights_path);
    g = ApplyNodeWeights(g, in);
  }
  return g;
}

NodeSubset ReadMetisPartition(const InputGraph& g, std::istream& in) {
  std::vector<int64_t> parts;
  std::string line;
  int64_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    const size_t end = line.find_last_not_of(" \t\r");
    try {
      const Wide part = ParseWide(line.substr(start, end - start + 1));
      if (part < 0) throw FormatError("negative part");
      parts.push_back(static_cast<int64_t>(part));
    } catch (const Error&) {
      throw FormatError("partition line " + std::to_string(line_number) +
                        ": expected a nonnegative part number");
    }
  }
  if (static_cast<int64_t>(parts.size()) != g.n()) {
    throw FormatError("partition has " + std::to_string(parts.size()) +
                      " entries but the graph has " + std::to_string(g.n()) +
                      " nodes");
  }
  std::map<int64_t, int64_t> size;
  for (int64_t p : parts) ++size[p];
  int64_t seed_part = size.begin()->first;
  for (const auto& [part, count] : size) {
    if (count > size[seed_part]) seed_part = part;
  }
  const std::vector<int> order = NodesByOriginalId(g);
  NodeSubset seed(g.n());
  for (int k = 0; k < g.n(); ++k) {
    if (parts[k] == seed_part) seed.Insert(order[k]);
  }
  if (seed.size() == g.n()) {
    throw FormatError("partition leaves no node outside the seed part");
  }
  return seed;
}

NodeSubset ReadSeedIds(const InputGraph& g, std::istream& in) {
  NodeSubset seed(g.n());
  std::string line;
  int64_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const size_t hash = line.find('#');
    std::istringstream tokens(line.substr(0, hash));
    std::string token;
    while (tokens >> token) {
      int64_t id = 0;
      try {
        id = static_cast<int64_t>(ParseWide(token));
      } catch (const Error&) {
        throw FormatError("seed file line " + std::to_string(line_number) +
                          ": malformed id '" + token + "'");
      }
      const std::optional<int> node = g.FindNode(id);
      if (!node) {
        throw FormatError("seed file line " + std::to_string(line_number) +
                          ": unknown node id " + token);
      }
      seed.Insert(*node);
    }
  }
  if (seed.empty()) throw FormatError("seed set is empty");
  if (seed.size() == g.n()) throw FormatError("seed set covers every node");
  return seed;
}

std::vector<int> BfsBisection(const InputGraph& g) {
  const std::vector<int> order = NodesByOriginalId(g);
  std::vector<int> part(g.n(), 1);
  const int target = g.n() / 2;
  int taken = 0;
  std::vector<int> queue;
  // Restart from the next unassigned node when a component is exhausted.
  for (int root : order) {
    if (taken >= target) break;
    if (part[root] == 0) continue;
    part[root] = 0;
    ++taken;
    queue.assign(1, root);
    for (size_t h = 0; h < queue.size() && taken < target; ++h) {
      std::vector<int> next;
      for (const Neighbor& nb : g.Neighbors(queue[h])) next.push_back(nb.node);
      std::sort(next.begin(), next.end(), [&](int a, int b) {
        return g.OriginalId(a) < g.OriginalId(b);
      });
      for (int v : next) {
        if (taken >= target) break;
        if (part[v] == 1) {
          part[v] = 0;
          ++taken;
          queue.push_back(v);
        }
      }
    }
  }
  std::vector<int> by_id(g.n());
  for (int k = 0; k < g.n(); ++k) by_id[k] = part[order[k]];
  return by_id;
}

void WriteMetisPartition(std::ostream& out, const std::vector<int>& parts) {
  for (int p : parts) out << p << "\n";
}

InputGraph CloseCliquesGraph() {
  constexpr int kCliques = 20;
  constexpr int kCliqueSize = 60;
  constexpr int kHubs = 30;
  constexpr int kLeaves = 2000;
  const int hub0 = kCliques * kCliqueSize;
  const int leaf0 = hub0 + kHubs;
  const int n = leaf0 + kLeaves;
  std::vector<Edge> edges;
  for (int c = 0; c < kCliques; ++c) {
    const int base = c * kCliqueSize;
    for (int i = 0; i < kCliqueSize; ++i) {
      for (int j = i + 1; j < kCliqueSize; ++j) {
        edges.push_back({base + i, base + j, 1});
      }
    }
  }
  for (int h = 0; h < kHubs; ++h) {
    for (int l = 0; l < kLeaves; ++l) edges.push_back({hub0 + h, leaf0 + l, 1});
  }
  return InputGraph(n, std::move(edges));
}

void WriteEdgeList(std::ostream& out, const InputGraph& g) {
  for (const Edge& e : g.edges()) {
    out << g.OriginalId(e.u) << " " << g.OriginalId(e.v);
    if (e.w != 1) out << " " << e.w;
    out << "\n";
  }
}

RunReport CmdDsp(const RunConfig& config) {
  const auto t0 = std::chrono::steady_clock::now();
  const InputGraph g = LoadConfiguredGraph(config);
  const RatioResult r = IpcMaximize(g);
  RunReport report;
  report.dataset = DatasetName(config.graph_path);
  report.algorithm = "ipc-dsp";
  report.n = g.n();
  report.m = g.m();
  report.precision = config.precision;
  report.config = ConfigJson(config);
  FillFromRatioResult(g, r, &report, config.precision);
  report.certified = r.certified;
  report.wall_time_seconds = SecondsSince(t0);
  return report;
}

RunReport CmdConductanceStar(const RunConfig& config) {
  const auto t0 = std::chrono::steady_clock::now();
  RunReport report;
  const ConductanceInput input = PrepareConductance(config, &report.details);
  const InputGraph& g = input.graph;
  const RatioResult r = IpcMinimize(g, input.seed);
  report.dataset = DatasetName(config.graph_path);
  report.algorithm = "ipc-conductance-star";
  report.n = g.n();
  report.m = g.m();
  report.precision = config.precision;
  report.config = ConfigJson(config);
  FillFromRatioResult(g, r, &report, config.precision);
  const NodeSubset v0 = input.seed.Complement();
  report.details["seed_size"] = input.seed.size();
  report.details["v0_size"] = v0.size();
  report.details["lambda0"] =
      RationalJson(ConductanceStarValue(g, v0, v0), config.precision);
  const bool verified =
      VerifyCertificate(g, r.optimal_set, RatioSense::kMinimizeConductance,
                        input.seed);
  report.details["certificate_recheck"] = verified;
  report.certified = r.certified && verified;
  report.wall_time_seconds = SecondsSince(t0);
  return report;
}

RunReport CmdEnvelope(const RunConfig& config) {
  const auto t0 = std::chrono::steady_clock::now();
  RunReport report;
  std::optional<InputGraph> graph;
  std::optional<ParametricNetwork> net;
  std::pair<Rational, Rational> interval;
  if (config.problem == "dsp") {
    graph = LoadConfiguredGraph(config);
    net = BuildDspNetwork(*graph);
    interval = DefaultDspInterval(*graph, /*full_envelope=*/true);
  } else if (config.problem == "conductance-star") {
    ConductanceInput input = PrepareConductance(config, &report.details);
    net = BuildConductanceNetwork(input.graph, input.seed);
    graph = std::move(input.graph);
    interval = {Rational(0), Rational(1)};
  } else {
    throw FormatError("unknown problem '" + config.problem + "'");
  }
  if (config.interval) interval = *config.interval;
  FullyParametricOptions options;
  options.precision = PrecisionStep(config.precision);
  options.parallel = !config.serial;
  const Envelope env =
      FullyParametric(*net, interval.first, interval.second, options);
  report.dataset = DatasetName(config.graph_path);
  report.algorithm = "envelope-" + config.problem;
  report.n = graph->n();
  report.m = graph->m();
  report.precision = config.precision;
  report.config = ConfigJson(config);
  report.config["problem"] = config.problem;
  report.explored = static_cast<int64_t>(env.breakpoints.size());
  report.cut_solves = env.cut_solves;
  int64_t merged = 0;
  for (const Breakpoint& bp : env.breakpoints) merged += bp.merged ? 1 : 0;
  report.details["merged_breakpoints"] = merged;
  report.details["interval"] = {interval.first.ToString(),
                                interval.second.ToString()};
  report.details["sense"] =
      env.sense == EnvelopeSense::kConcaveMax ? "concave-max" : "convex-min";
  if (!env.breakpoints.empty()) {
    const Breakpoint& left = LeftmostBreakpoint(env);
    report.ratio = left.lambda;
    report.set_size = left.set_size;
    NodeSubset graph_set(graph->n());
    for (int i : left.source_set.Members()) graph_set.Insert(net->graph_node(i));
    report.subset = OriginalIds(*graph, graph_set);
  }
  report.certified = !env.breakpoints.empty() && merged == 0;
  std::ostringstream csv;
  WriteEnvelopeCsv(csv, env, config.precision);
  report.csv = csv.str();
  report.csv_name = "envelope.csv";
  report.wall_time_seconds = SecondsSince(t0);
  return report;
}

RunReport CmdGreedy(const RunConfig& config) {
  return PeelReport(config, 1, "greedy");
}

RunReport CmdGreedyPlusPlus(const RunConfig& config) {
  return PeelReport(config, config.iterations,
                    "greedypp:" + std::to_string(config.iterations));
}

void WriteReportFiles(const RunReport& report, const InputGraph* graph,
                      const std::string& output_dir) {
  std::error_code ec;
  fs::create_directories(output_dir, ec);
  if (ec) throw IoError("cannot create '" + output_dir + "'");
  auto open = [&](const std::string& name) {
    std::ofstream out(fs::path(output_dir) / name);
    if (!out) throw IoError("cannot write '" + name + "' in " + output_dir);
    return out;
  };
  {
    std::ofstream out = open("report.json");
    out << report.ToJson().dump(2) << "\n";
  }
  if (!report.csv.empty()) {
    std::ofstream out = open(report.csv_name);
    out << report.csv;
  }
  if (graph) {
    std::ofstream out = open("node_map.csv");
    out << "dense_id,original_id\n";
    for (int i = 0; i < graph->n(); ++i) {
      out << i << "," << graph->OriginalId(i) << "\n";
    }
  }
}

BenchOutcome CmdBench(const std::string& manifest_path,
                      const std::string& output_dir, int precision) {
  json manifest;
  {
    std::ifstream in = OpenInput(manifest_path);
    try {
      in >> manifest;
    } catch (const json::exception& e) {
      throw FormatError(std::string("manifest is not valid JSON: ") + e.what());
    }
  }
  struct Dataset {
    std::string name;
    std::string path;
    bool weighted = false;
  };
  std::vector<Dataset> datasets;
  std::vector<std::string> algorithms;
  int repetitions = 1;
  int workers = 1;
  try {
    for (const json& d : manifest.value("datasets", json::array())) {
      Dataset ds;
      ds.path = d.at("path").get<std::string>();
      ds.name = d.value("name", DatasetName(ds.path));
      ds.weighted = d.value("weighted", false);
      datasets.push_back(ds);
    }
    for (const json& a : manifest.value("algorithms", json::array())) {
      algorithms.push_back(a.get<std::string>());
    }
    repetitions = manifest.value("repetitions", 1);
    workers = manifest.value("workers", 1);
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed manifest: ") + e.what());
  }
  if (repetitions < 1 || workers < 1) {
    throw FormatError("repetitions and workers must be positive");
  }
  for (const std::string& a : algorithms) {
    const bool known = a == "ipc" || a == "greedy" || a == "envelope" ||
                       a.rfind("greedypp:", 0) == 0;
    if (!known) throw FormatError("unknown algorithm '" + a + "'");
  }

  struct Cell {
    size_t dataset;
    std::string algorithm;
    int repetition;
    bool ok = false;
    std::string error;
    RunReport report;
  };
  std::vector<Cell> cells;
  for (size_t d = 0; d < datasets.size(); ++d) {
    for (const std::string& a : algorithms) {
      for (int r = 0; r < repetitions; ++r) {
        cells.push_back(Cell{d, a, r, false, {}, {}});
      }
    }
  }
  std::atomic<size_t> next{0};
  auto work = [&]() {
    while (true) {
      const size_t k = next.fetch_add(1);
      if (k >= cells.size()) return;
      Cell& cell = cells[k];
      RunConfig config;
      config.graph_path = datasets[cell.dataset].path;
      config.weighted = datasets[cell.dataset].weighted;
      config.precision = precision;
      try {
        if (cell.algorithm == "ipc") {
          cell.report = CmdDsp(config);
        } else if (cell.algorithm == "greedy") {
          cell.report = CmdGreedy(config);
        } else if (cell.algorithm == "envelope") {
          cell.report = CmdEnvelope(config);
        } else {
          config.iterations = std::stoi(cell.algorithm.substr(9));
          if (config.iterations < 1) throw FormatError("bad iteration count");
          cell.report = CmdGreedyPlusPlus(config);
        }
        cell.report.dataset = datasets[cell.dataset].name;
        cell.ok = true;
      } catch (const std::exception& e) {
        cell.error = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  const int threads =
      std::min<int>(workers, std::max<size_t>(1, cells.size()));
  for (int t = 0; t < threads; ++t) pool.emplace_back(work);
  for (std::thread& t : pool) t.join();

  BenchOutcome outcome;
  std::error_code ec;
  fs::create_directories(fs::path(output_dir) / "cells", ec);
  if (ec) throw IoError("cannot create '" + output_dir + "'");
  for (const Cell& cell : cells) {
    const std::string stem = datasets[cell.dataset].name + "__" +
                             cell.algorithm + "__r" +
                             std::to_string(cell.repetition);
    std::string safe = stem;
    std::replace(safe.begin(), safe.end(), ':', '-');
    std::ofstream out(fs::path(output_dir) / "cells" / (safe + ".json"));
    json j = cell.ok ? cell.report.ToJson()
                     : json{{"schema_version", kReportSchemaVersion},
                            {"dataset", datasets[cell.dataset].name},
                            {"algorithm", cell.algorithm},
                            {"failed", true},
                            {"error", cell.error}};
    out << j.dump(2) << "\n";
    if (!cell.ok) outcome.all_ok = false;
    if (cell.ok && cell.algorithm == "ipc" && !cell.report.certified) {
      outcome.all_ok = false;
    }
  }

  // Mean wall time per (dataset, algorithm); gap and slowdown versus IPC.
  json rows = json::array();
  std::ostringstream csv;
  csv << "dataset,algorithm,ratio,ratio_exact,gap_percent,mean_time_s,sdf,"
         "status\n";
  for (size_t d = 0; d < datasets.size(); ++d) {
    std::optional<Rational> optimum;
    double ipc_time = 0;
    for (const Cell& cell : cells) {
      if (cell.dataset == d && cell.algorithm == "ipc" && cell.ok) {
        optimum = cell.report.ratio;
        ipc_time += cell.report.wall_time_seconds / repetitions;
      }
    }
    for (const std::string& a : algorithms) {
      double total = 0;
      int ok = 0;
      std::string error;
      Rational ratio;
      for (const Cell& cell : cells) {
        if (cell.dataset != d || cell.algorithm != a) continue;
        if (cell.ok) {
          ++ok;
          total += cell.report.wall_time_seconds;
          ratio = cell.report.ratio;
        } else {
          error = cell.error;
        }
      }
      json row{{"dataset", datasets[d].name}, {"algorithm", a}};
      std::string gap_text, sdf_text, ratio_dec, ratio_exact;
      if (ok == repetitions) {
        const double mean = total / ok;
        row["status"] = "ok";
        row["ratio"] = RationalJson(ratio, precision);
        row["mean_time_s"] = mean;
        ratio_dec = ratio.ToDecimal(precision);
        ratio_exact = ratio.ToString();
        if (optimum && *optimum > Rational(0)) {
          const Rational gap = (*optimum - ratio) / *optimum * Rational(100);
          row["gap_percent"] = RationalJson(gap, 2);
          gap_text = gap.ToDecimal(2);
          if (ipc_time > 0) {
            row["sdf"] = mean / ipc_time;
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%.2f", mean / ipc_time);
            sdf_text = buf;
          }
        }
        csv << datasets[d].name << "," << a << "," << ratio_dec << ","
            << ratio_exact << "," << gap_text << "," << mean << ","
            << sdf_text << ",ok\n";
      } else {
        row["status"] = "failed";
        row["error"] = error;
        csv << datasets[d].name << "," << a << ",,,,,,failed\n";
      }
      rows.push_back(row);
    }
  }
  outcome.summary = json{{"schema_version", kReportSchemaVersion},
                         {"manifest", manifest_path},
                         {"repetitions", repetitions},
                         {"workers", workers},
                         {"rows", rows},
                         {"all_ok", outcome.all_ok}};
  {
    std::ofstream out(fs::path(output_dir) / "summary.json");
    out << outcome.summary.dump(2) << "\n";
  }
  {
    std::ofstream out(fs::path(output_dir) / "summary.csv");
    out << csv.str();
  }
  return outcome;
}

int ExitCodeFor(const std::exception& e) {
  if (dynamic_cast<const IoError*>(&e)) return 3;
  if (dynamic_cast<const ParseError*>(&e) ||
      dynamic_cast<const ValidationError*>(&e) ||
      dynamic_cast<const FormatError*>(&e)) {
    return 4;
  }
  if (dynamic_cast<const DegenerateInputError*>(&e) ||
      dynamic_cast<const DomainError*>(&e) ||
      dynamic_cast<const UndefinedRatioError*>(&e)) {
    return 5;
  }
  if (dynamic_cast<const OverflowError*>(&e)) return 6;
  if (dynamic_cast<const RefusalError*>(&e)) return 7;
  return 1;
}

}  // namespace ipcut

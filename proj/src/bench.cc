/*
 *  Copyright (C) 2026  pcasp authors
 *
 *  Licensed under the Apache License, Version 2.0 (the "License");
 *  you may not use this file except in compliance with the License.
 *  You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing, software
 *  distributed under the License is distributed on an "AS IS" BASIS,
 *  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *  See the License for the specific language governing permissions and
 *  limitations under the License.
 *
 */

#include "pcasp/bench.h"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "pcasp/parser.h"

namespace pcasp {

using nlohmann::json;

const char* to_string(AlgorithmKind k) {
  switch (k) {
    case AlgorithmKind::Filtering: return "filtering";
    case AlgorithmKind::GuessCheck: return "gc";
    case AlgorithmKind::Minimize: return "minimize";
    case AlgorithmKind::Split: return "split";
    case AlgorithmKind::Weak: return "weak";
  }
  return "?";
}

const char* to_string(BenchOutcome o) {
  switch (o) {
    case BenchOutcome::Solved: return "solved";
    case BenchOutcome::Timeout: return "timeout";
    case BenchOutcome::NoModel: return "no-model";
  }
  return "?";
}

const char* to_string(TransformKind k) {
  return k == TransformKind::Kappa ? "sst" : "seq";
}

std::optional<AlgorithmKind> algorithm_from_string(const std::string& name) {
  if (name == "filtering") return AlgorithmKind::Filtering;
  if (name == "gc" || name == "guess-check") return AlgorithmKind::GuessCheck;
  if (name == "minimize") return AlgorithmKind::Minimize;
  if (name == "split") return AlgorithmKind::Split;
  if (name == "weak") return AlgorithmKind::Weak;
  return std::nullopt;
}

std::vector<BenchInstance> bench_instances(const BenchConfig& cfg) {
  std::vector<BenchInstance> out;
  if (!cfg.instance_files.empty()) {
    for (const std::string& path : cfg.instance_files) {
      std::ifstream in(path);
      if (!in) throw std::invalid_argument("cannot read instance file: " + path);
      std::ostringstream text;
      text << in.rdbuf();
      out.push_back({path, parse(text.str())});
    }
    return out;
  }
  if (!cfg.generator) throw std::invalid_argument("no instances: give files or a generator spec");

  const GeneratorSpec& gen = *cfg.generator;
  std::uint64_t candidate_seed = gen.params.seed;
  for (int i = 0; i < gen.count; ++i) {
    while (true) {
      RandomProgramParams params = gen.params;
      params.seed = candidate_seed++;
      Program p = random_program(params);
      if (gen.require_incoherent && !oracle_answer_sets(p, gen.budget).empty()) continue;
      out.push_back({"gen-" + std::to_string(i) + "-seed-" + std::to_string(params.seed),
                     std::move(p)});
      break;
    }
  }
  return out;
}

BenchReport run_bench(const BenchConfig& cfg) {
  if (cfg.algorithms.empty()) throw std::invalid_argument("bench needs at least one algorithm");
  if (cfg.timeout.count() <= 0) throw std::invalid_argument("bench timeout must be positive");

  const std::vector<BenchInstance> instances = bench_instances(cfg);
  BenchReport report;
  report.semantics = cfg.semantics;
  for (const BenchInstance& inst : instances) report.instance_names.push_back(inst.name);
  for (AlgorithmKind a : cfg.algorithms) report.solved[a] = 0;

  for (const BenchInstance& inst : instances) {
    const TransformedProgram tp = cfg.semantics == TransformKind::Kappa
                                      ? kappa_transform(inst.program)
                                      : ht_transform(inst.program);
    for (AlgorithmKind algorithm : cfg.algorithms) {
      BenchCell cell;
      cell.instance = inst.name;
      cell.algorithm = algorithm;
      ParacoherentOptions options;
      options.seed = cfg.seed;
      options.limits.deadline = std::chrono::steady_clock::now() + cfg.timeout;
      const auto start = std::chrono::steady_clock::now();
      try {
        std::optional<ParacoherentResult> result = solve_paracoherent(tp, algorithm, options);
        cell.elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                .count();
        if (result) {
          cell.outcome = BenchOutcome::Solved;
          cell.stats = result->stats;
          cell.model = atom_names(result->model, tp.program.signature());
          cell.gap = atom_names(result->gap, tp.program.signature());
          if (cfg.audit) cell.audit_passed = is_paracoherent(tp, result->answer_set);
          report.solved[algorithm] += 1;
        } else {
          cell.outcome = BenchOutcome::NoModel;
        }
      } catch (const TimeoutError&) {
        cell.outcome = BenchOutcome::Timeout;
        cell.elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                .count();
      }
      report.cells.push_back(std::move(cell));
    }
  }
  return report;
}

namespace {

json stats_json(const SolveStats& s) {
  return json{{"solver_calls", s.solver_calls},
              {"models_enumerated", s.models_enumerated},
              {"elapsed_ms", s.elapsed.count()},
              {"peak_program_size", s.peak_program_size},
              {"decisions", s.decisions},
              {"backtracks", s.backtracks}};
}

}  // namespace

std::string bench_report_json(const BenchReport& report) {
  json cells = json::array();
  for (const BenchCell& c : report.cells) {
    json cell{{"instance", c.instance},
              {"algorithm", to_string(c.algorithm)},
              {"outcome", to_string(c.outcome)},
              {"elapsed_ms", c.elapsed_ms},
              {"stats", stats_json(c.stats)},
              {"audit_passed", c.audit_passed}};
    if (c.outcome == BenchOutcome::Solved) {
      cell["model"] = c.model;
      cell["gap"] = c.gap;
    }
    cells.push_back(std::move(cell));
  }
  json solved = json::object();
  for (const auto& [algorithm, count] : report.solved) solved[to_string(algorithm)] = count;
  json root{{"schema_version", 1},
            {"semantics", to_string(report.semantics)},
            {"instances", report.instance_names},
            {"cells", std::move(cells)},
            {"solved", std::move(solved)}};
  return root.dump(2) + "\n";
}

std::string bench_scatter_csv(const BenchReport& report, std::chrono::milliseconds timeout) {
  std::vector<AlgorithmKind> algorithms;
  for (const auto& [algorithm, count] : report.solved) algorithms.push_back(algorithm);

  std::ostringstream out;
  out << "instance";
  for (AlgorithmKind a : algorithms) out << "," << to_string(a);
  out << "\n";
  for (const std::string& name : report.instance_names) {
    out << name;
    for (AlgorithmKind a : algorithms) {
      double value = static_cast<double>(timeout.count());
      for (const BenchCell& c : report.cells)
        if (c.instance == name && c.algorithm == a) {
          if (c.outcome != BenchOutcome::Timeout) value = c.elapsed_ms;
          break;
        }
      out << "," << value;
    }
    out << "\n";
  }
  return out.str();
}

std::vector<SizeRow> report_transform_sizes(const std::vector<BenchInstance>& instances) {
  std::vector<SizeRow> rows;
  for (const BenchInstance& inst : instances) {
    SizeRow row;
    row.instance = inst.name;
    row.p_atoms = static_cast<int>(inst.program.atoms().count());
    row.p_rules = static_cast<int>(inst.program.rules().size());
    const TransformedProgram kappa = kappa_transform(inst.program);
    row.kappa_atoms = static_cast<int>(kappa.program.atoms().count());
    row.kappa_rules = static_cast<int>(kappa.program.rules().size());
    const TransformedProgram ht = ht_transform(inst.program);
    row.ht_atoms = static_cast<int>(ht.program.atoms().count());
    row.ht_rules = static_cast<int>(ht.program.rules().size());
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string size_report_json(const std::vector<SizeRow>& rows) {
  json items = json::array();
  double kappa_total = 0, ht_total = 0;
  for (const SizeRow& r : rows) {
    items.push_back(json{{"instance", r.instance},
                         {"p", {{"atoms", r.p_atoms}, {"rules", r.p_rules}}},
                         {"kappa_gap", {{"atoms", r.kappa_atoms}, {"rules", r.kappa_rules}}},
                         {"ht_gap", {{"atoms", r.ht_atoms}, {"rules", r.ht_rules}}}});
    kappa_total += r.kappa_rules;
    ht_total += r.ht_rules;
  }
  json root{{"schema_version", 1}, {"rows", std::move(items)}};
  if (kappa_total > 0) root["ht_to_kappa_rule_ratio"] = ht_total / kappa_total;
  return root.dump(2) + "\n";
}

}  // namespace pcasp

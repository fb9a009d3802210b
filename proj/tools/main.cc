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

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "pcasp/bench.h"
#include "pcasp/oracle.h"
#include "pcasp/paracoherent.h"
#include "pcasp/parser.h"

namespace {

using nlohmann::json;
using namespace pcasp;

constexpr int kExitOk = 0;
constexpr int kExitNoModel = 10;
constexpr int kExitTimeout = 20;
constexpr int kExitUsage = 2;

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream text;
    text << std::cin.rdbuf();
    return text.str();
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read input file: " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

json stats_json(const SolveStats& s) {
  return json{{"solver_calls", s.solver_calls},
              {"models_enumerated", s.models_enumerated},
              {"elapsed_ms", s.elapsed.count()},
              {"peak_program_size", s.peak_program_size},
              {"decisions", s.decisions},
              {"backtracks", s.backtracks}};
}

void print_stats_text(const SolveStats& s) {
  std::cout << "stats: calls=" << s.solver_calls << " models=" << s.models_enumerated
            << " elapsed_ms=" << s.elapsed.count() << " peak_rules=" << s.peak_program_size
            << "\n";
}

SolveLimits make_limits(long timeout_ms) {
  SolveLimits limits;
  if (timeout_ms > 0)
    limits.deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(timeout_ms);
  return limits;
}

struct GeneratorFlags {
  int count = 0;
  RandomProgramParams params;
  bool allow_coherent = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--gen-count", count, "generate this many instances instead of reading files");
    cmd->add_option("--gen-atoms", params.atoms, "generator: number of atoms");
    cmd->add_option("--gen-rules", params.rules, "generator: number of rules");
    cmd->add_option("--gen-max-head", params.max_head, "generator: max head size");
    cmd->add_option("--gen-max-body", params.max_body, "generator: max body size");
    cmd->add_option("--gen-neg-prob", params.neg_prob, "generator: negation probability");
    cmd->add_option("--gen-seed", params.seed, "generator: base seed");
    cmd->add_flag("--allow-coherent", allow_coherent, "generator: keep coherent programs too");
  }
};

int run_transform(const std::string& input, const std::string& kind, bool with_gap) {
  const Program p = parse(read_input(input));
  TransformOptions options;
  options.with_gap = with_gap;
  const TransformedProgram tp =
      kind == "ht" ? ht_transform(p, options) : kappa_transform(p, options);
  std::cout << print(tp.program);
  return kExitOk;
}

int run_solve(const std::string& input, bool all, long limit, unsigned seed, long timeout_ms,
              const std::string& format) {
  ParseOptions po;
  po.allow_reserved = true;  // transformed programs are valid solve input
  const Program p = parse(read_input(input), po);
  AnswerSetEnumerator en(p, seed, make_limits(timeout_ms));

  std::vector<std::vector<std::string>> models;
  long wanted = all ? (limit > 0 ? limit : -1) : (limit > 0 ? limit : 1);
  while (wanted != 0) {
    std::optional<Interpretation> m = en.next();
    if (!m) break;
    models.push_back(atom_names(*m, p.signature()));
    if (wanted > 0) --wanted;
  }

  if (format == "json") {
    json root{{"schema_version", 1},
              {"models", models},
              {"complete", en.exhausted()},
              {"stats", stats_json(en.stats())}};
    std::cout << root.dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < models.size(); ++i) {
      std::cout << "answer set " << (i + 1) << ":";
      for (const std::string& name : models[i]) std::cout << " " << name;
      std::cout << "\n";
    }
    if (models.empty()) std::cout << "no answer set\n";
    print_stats_text(en.stats());
  }
  return models.empty() ? kExitNoModel : kExitOk;
}

int run_paracoherent(const std::string& input, const std::string& semantics,
                     const std::string& algorithm, bool all, unsigned seed,
                     const std::string& oneof, long timeout_ms, const std::string& format) {
  const Program p = parse(read_input(input));
  const TransformedProgram tp =
      semantics == "seq" ? ht_transform(p) : kappa_transform(p);

  ParacoherentOptions options;
  options.seed = seed;
  options.oneof = oneof == "random" ? OneOfPolicy::Random : OneOfPolicy::First;
  options.limits = make_limits(timeout_ms);

  const Signature& sig = tp.program.signature();
  if (all) {
    const std::vector<ParacoherentResult> results = enumerate_all(tp, options);
    if (format == "json") {
      json items = json::array();
      for (const ParacoherentResult& r : results)
        items.push_back(json{{"model", atom_names(r.model, sig)}, {"gap", atom_names(r.gap, sig)}});
      json root{{"schema_version", 1}, {"semantics", semantics}, {"models", std::move(items)}};
      std::cout << root.dump(2) << "\n";
    } else {
      for (std::size_t i = 0; i < results.size(); ++i) {
        std::cout << "paracoherent answer set " << (i + 1) << ":";
        for (const std::string& name : atom_names(results[i].model, sig)) std::cout << " " << name;
        std::cout << "\n";
      }
      if (results.empty()) std::cout << "no paracoherent answer set\n";
    }
    return results.empty() ? kExitNoModel : kExitOk;
  }

  const std::optional<AlgorithmKind> kind = algorithm_from_string(algorithm);
  if (!kind) throw CLI::ValidationError("--algorithm", "unknown algorithm: " + algorithm);
  const std::optional<ParacoherentResult> result = solve_paracoherent(tp, *kind, options);
  if (format == "json") {
    json root{{"schema_version", 1}, {"semantics", semantics}, {"algorithm", algorithm}};
    if (result) {
      root["model"] = atom_names(result->model, sig);
      root["gap"] = atom_names(result->gap, sig);
      root["stats"] = stats_json(result->stats);
    } else {
      root["model"] = nullptr;
    }
    std::cout << root.dump(2) << "\n";
  } else {
    if (result) {
      std::cout << "paracoherent answer set:";
      for (const std::string& name : atom_names(result->model, sig)) std::cout << " " << name;
      std::cout << "\ngap:";
      for (const std::string& name : atom_names(result->gap, sig)) std::cout << " " << name;
      std::cout << "\n";
      print_stats_text(result->stats);
    } else {
      std::cout << "no paracoherent answer set\n";
    }
  }
  return result ? kExitOk : kExitNoModel;
}

int run_oracle(const std::string& input, const std::string& what, int max_atoms,
               const std::string& format) {
  const Program p = parse(read_input(input));
  OracleBudget budget;
  if (max_atoms > 0) budget.max_atoms = max_atoms;
  std::vector<Interpretation> result;
  const Program* name_source = &p;
  Program transformed;  // keeps the signature alive for sst/seq names
  if (what == "models") result = oracle_models(p, budget);
  else if (what == "minimal") result = oracle_minimal_models(p, budget);
  else if (what == "as") result = oracle_answer_sets(p, budget);
  else if (what == "optimum") result = oracle_optimum_answer_sets(p, budget);
  else if (what == "sst" || what == "seq") {
    result = what == "sst" ? oracle_sst(p, budget) : oracle_seq(p, budget);
    transformed = (what == "sst" ? kappa_transform(p) : ht_transform(p)).program;
    name_source = &transformed;
  } else {
    throw CLI::ValidationError("--what", "unknown query: " + what);
  }

  std::vector<std::vector<std::string>> names;
  for (const Interpretation& i : result)
    names.push_back(atom_names(i, name_source->signature()));
  if (format == "json") {
    std::cout << json{{"schema_version", 1}, {"what", what}, {"models", names}}.dump(2) << "\n";
  } else {
    for (const auto& model : names) {
      std::cout << "{";
      for (std::size_t i = 0; i < model.size(); ++i) std::cout << (i ? ", " : "") << model[i];
      std::cout << "}\n";
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"paracoherent answer set solver"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags are accepted after the subcommand too

  std::string format = "text";
  unsigned seed = 0;
  long timeout_ms = 0;
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", seed, "branching permutation seed (0: atom-id order)");
  app.add_option("--timeout-ms", timeout_ms, "cooperative solve deadline in milliseconds");

  // transform
  auto* transform_cmd = app.add_subcommand("transform", "print an epistemic transformation");
  std::string transform_input, transform_kind = "kappa";
  bool with_gap = true;
  transform_cmd->add_option("input", transform_input, "program file ('-' for stdin)");
  transform_cmd->add_option("--kind", transform_kind, "transformation kind")
      ->check(CLI::IsMember({"kappa", "ht"}));
  transform_cmd->add_flag("--with-gap,!--no-gap", with_gap, "append the gap rules (default on)");

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "enumerate answer sets");
  std::string solve_input;
  bool solve_all = false;
  long solve_limit = 0;
  solve_cmd->add_option("input", solve_input, "program file ('-' for stdin)");
  solve_cmd->add_flag("--all", solve_all, "enumerate all answer sets");
  solve_cmd->add_option("--limit", solve_limit, "stop after this many models");

  // paracoherent
  auto* para_cmd = app.add_subcommand("paracoherent", "compute a paracoherent answer set");
  std::string para_input, para_semantics = "sst", para_algorithm = "minimize",
              para_oneof = "first";
  bool para_all = false;
  para_cmd->add_option("input", para_input, "program file ('-' for stdin)");
  para_cmd->add_option("--semantics", para_semantics, "sst (kappa) or seq (ht)")
      ->check(CLI::IsMember({"sst", "seq"}));
  para_cmd->add_option("--algorithm", para_algorithm, "filtering|gc|minimize|split|weak");
  para_cmd->add_flag("--all", para_all, "enumerate every paracoherent answer set");
  para_cmd->add_option("--oneof", para_oneof, "split: gap atom selection policy")
      ->check(CLI::IsMember({"first", "random"}));

  // oracle (dev tool)
  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force reference queries");
  oracle_cmd->group("");  // hidden
  std::string oracle_input, oracle_what = "as";
  int oracle_max_atoms = 0;
  oracle_cmd->add_option("input", oracle_input, "program file ('-' for stdin)");
  oracle_cmd->add_option("--what", oracle_what, "models|minimal|as|optimum|sst|seq");
  oracle_cmd->add_option("--max-atoms", oracle_max_atoms, "override the oracle atom budget");

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "compare algorithms on a set of instances");
  std::vector<std::string> bench_files;
  std::vector<std::string> bench_algorithms;
  std::string bench_semantics = "sst", bench_report = "report.json",
              bench_scatter = "scatter.csv";
  GeneratorFlags bench_gen;
  bench_cmd->add_option("--instances", bench_files, "instance files");
  bench_gen.attach(bench_cmd);
  bench_cmd->add_option("--algorithms", bench_algorithms,
                        "algorithms to run (default: all five)");
  bench_cmd->add_option("--semantics", bench_semantics, "sst or seq")
      ->check(CLI::IsMember({"sst", "seq"}));
  bench_cmd->add_option("--report", bench_report, "report output path");
  bench_cmd->add_option("--scatter", bench_scatter, "scatter CSV output path");

  // sizes
  auto* sizes_cmd = app.add_subcommand("sizes", "transformation size report");
  std::vector<std::string> sizes_files;
  GeneratorFlags sizes_gen;
  sizes_cmd->add_option("--instances", sizes_files, "instance files");
  sizes_gen.attach(sizes_cmd);

  try {
    app.parse(argc, argv);

    if (transform_cmd->parsed()) return run_transform(transform_input, transform_kind, with_gap);
    if (solve_cmd->parsed())
      return run_solve(solve_input, solve_all, solve_limit, seed, timeout_ms, format);
    if (para_cmd->parsed())
      return run_paracoherent(para_input, para_semantics, para_algorithm, para_all, seed,
                              para_oneof, timeout_ms, format);
    if (oracle_cmd->parsed()) return run_oracle(oracle_input, oracle_what, oracle_max_atoms, format);

    const auto make_config = [&](const std::vector<std::string>& files, GeneratorFlags& gen,
                                 const std::string& semantics) {
      BenchConfig cfg;
      cfg.instance_files = files;
      if (files.empty()) {
        GeneratorSpec spec;
        spec.count = gen.count > 0 ? gen.count : 20;
        spec.params = gen.params;
        spec.require_incoherent = !gen.allow_coherent;
        cfg.generator = spec;
      }
      cfg.semantics = semantics == "seq" ? TransformKind::Ht : TransformKind::Kappa;
      cfg.timeout = std::chrono::milliseconds(timeout_ms > 0 ? timeout_ms : 5000);
      cfg.seed = seed;
      return cfg;
    };

    if (bench_cmd->parsed()) {
      BenchConfig cfg = make_config(bench_files, bench_gen, bench_semantics);
      if (bench_algorithms.empty()) {
        cfg.algorithms = {AlgorithmKind::Filtering, AlgorithmKind::GuessCheck,
                          AlgorithmKind::Minimize, AlgorithmKind::Split, AlgorithmKind::Weak};
      } else {
        for (const std::string& name : bench_algorithms) {
          const std::optional<AlgorithmKind> kind = algorithm_from_string(name);
          if (!kind) throw CLI::ValidationError("--algorithms", "unknown algorithm: " + name);
          cfg.algorithms.push_back(*kind);
        }
      }
      const BenchReport report = run_bench(cfg);
      std::ofstream(bench_report) << bench_report_json(report);
      std::ofstream(bench_scatter) << bench_scatter_csv(report, cfg.timeout);
      int solved = 0;
      for (const auto& [algorithm, count] : report.solved) {
        std::cout << to_string(algorithm) << ": solved " << count << "/"
                  << report.instance_names.size() << "\n";
        solved += count;
      }
      std::cout << "wrote " << bench_report << " and " << bench_scatter << "\n";
      return solved > 0 ? kExitOk : kExitNoModel;
    }

    if (sizes_cmd->parsed()) {
      BenchConfig cfg = make_config(sizes_files, sizes_gen, "sst");
      const std::vector<SizeRow> rows = report_transform_sizes(bench_instances(cfg));
      if (format == "json") {
        std::cout << size_report_json(rows);
      } else {
        std::cout << "instance\tP atoms\tP rules\tkappa+gap atoms\tkappa+gap rules\tht+gap "
                     "atoms\tht+gap rules\n";
        for (const SizeRow& r : rows)
          std::cout << r.instance << "\t" << r.p_atoms << "\t" << r.p_rules << "\t"
                    << r.kappa_atoms << "\t" << r.kappa_rules << "\t" << r.ht_atoms << "\t"
                    << r.ht_rules << "\n";
      }
      return kExitOk;
    }
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const TimeoutError&) {
    std::cerr << "error: solve deadline exceeded\n";
    return kExitTimeout;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

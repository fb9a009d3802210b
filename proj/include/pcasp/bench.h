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

#pragma once

#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pcasp/oracle.h"
#include "pcasp/paracoherent.h"

namespace pcasp {

struct BenchInstance {
  std::string name;
  Program program;
};

struct GeneratorSpec {
  int count = 20;
  RandomProgramParams params;
  /// Keep only programs the oracle reports incoherent (the interesting case
  /// for paracoherent reasoning). Candidate seeds advance deterministically.
  bool require_incoherent = true;
  OracleBudget budget;
};

struct BenchConfig {
  std::vector<std::string> instance_files;   // parsed with the default grammar
  std::optional<GeneratorSpec> generator;    // used when instance_files is empty
  std::vector<AlgorithmKind> algorithms;
  TransformKind semantics = TransformKind::Kappa;
  std::chrono::milliseconds timeout{5000};
  unsigned seed = 0;
  /// Re-check every solved cell with the pi_m coherence test.
  bool audit = true;
};

enum class BenchOutcome { Solved, Timeout, NoModel };

struct BenchCell {
  std::string instance;
  AlgorithmKind algorithm;
  BenchOutcome outcome = BenchOutcome::NoModel;
  double elapsed_ms = 0.0;
  SolveStats stats;
  std::vector<std::string> model;  // projected, sorted names (solved only)
  std::vector<std::string> gap;
  bool audit_passed = true;
};

struct BenchReport {
  std::vector<BenchCell> cells;
  std::map<AlgorithmKind, int> solved;  // aggregate per algorithm
  TransformKind semantics = TransformKind::Kappa;
  std::vector<std::string> instance_names;
};

/// Runs every (instance, algorithm) cell with a cooperative per-cell
/// deadline. Throws std::invalid_argument on an empty algorithm list or a
/// non-positive timeout, and on unreadable instance files.
BenchReport run_bench(const BenchConfig& cfg);

std::vector<BenchInstance> bench_instances(const BenchConfig& cfg);

std::string bench_report_json(const BenchReport& report);

/// One line per instance, one solve-time column per algorithm; timeouts are
/// reported at the timeout value so any two columns plot like a solver
/// scatter comparison.
std::string bench_scatter_csv(const BenchReport& report, std::chrono::milliseconds timeout);

struct SizeRow {
  std::string instance;
  int p_atoms = 0;
  int p_rules = 0;
  int kappa_atoms = 0;
  int kappa_rules = 0;
  int ht_atoms = 0;
  int ht_rules = 0;
};

/// Atom/rule counts of P, of the kappa transformation with gap rules, and of
/// the HT transformation with gap rules.
std::vector<SizeRow> report_transform_sizes(const std::vector<BenchInstance>& instances);

std::string size_report_json(const std::vector<SizeRow>& rows);

const char* to_string(AlgorithmKind k);
const char* to_string(BenchOutcome o);
const char* to_string(TransformKind k);
std::optional<AlgorithmKind> algorithm_from_string(const std::string& name);

}  // namespace pcasp

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
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pcasp/program.h"

namespace pcasp {

/// Thrown when a cooperative deadline expires between decisions.
class TimeoutError : public std::runtime_error {
 public:
  TimeoutError() : std::runtime_error("solve deadline exceeded") {}
};

struct SolveLimits {
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct SolveStats {
  std::uint64_t solver_calls = 0;
  std::uint64_t models_enumerated = 0;
  std::chrono::duration<double, std::milli> elapsed{0};
  std::size_t peak_program_size = 0;  // rule count of the largest solved program
  std::uint64_t decisions = 0;
  std::uint64_t backtracks = 0;
};

struct SolveOptions {
  unsigned seed = 0;  ///< 0: branch in atom-id order; otherwise permute.
  SolveLimits limits;
  SolveStats* stats = nullptr;  ///< accumulated when non-null
};

/// Gelfond-Lifschitz reduct: rules whose negative body meets i are dropped,
/// the survivors keep head and positive body.
struct Reduct {
  std::vector<Rule> rules;
};

Reduct gl_reduct(const Program& p, const Interpretation& i);

/// The reduct as a standalone positive program over p's signature.
Program reduct_program(const Program& p, const Interpretation& i);

bool is_model(const Program& p, const Interpretation& i);

/// Requires p positive and i a model of p (throws std::invalid_argument
/// otherwise). True iff no proper subset of i is a model.
bool is_minimal_model(const Program& p, const Interpretation& i);

bool is_answer_set(const Program& p, const Interpretation& i);

bool has_classical_model(const Program& p, const SolveOptions& options = {});

std::optional<Interpretation> first_answer_set(const Program& p, const SolveOptions& options = {});

/// Number of weak constraints of p violated by i.
int violated_weak_count(const Program& p, const Interpretation& i);

/// Answer set of the rule part minimizing the violated-weak-constraint
/// count; nullopt iff there is no answer set at all. Found by iterative
/// bound tightening with branch-and-bound pruning on the violated count.
std::optional<Interpretation> optimum_answer_set(const Program& p, const SolveOptions& options = {});

/// Stateful deterministic answer-set iterator. Each next() runs a fresh
/// chronological search on the program extended with blocking constraints
/// that exclude exactly the previously emitted models.
class AnswerSetEnumerator {
 public:
  explicit AnswerSetEnumerator(const Program& p, unsigned seed = 0, SolveLimits limits = {});

  /// The next not-yet-emitted answer set, or nullopt when exhausted.
  std::optional<Interpretation> next();

  bool exhausted() const { return exhausted_; }
  const SolveStats& stats() const { return stats_; }
  /// Program grown with the accumulated blocking constraints.
  const Program& working_program() const { return program_; }

 private:
  Program program_;
  AtomSet block_scope_;  // At of the original program
  unsigned seed_;
  SolveLimits limits_;
  SolveStats stats_;
  bool exhausted_ = false;
};

}  // namespace pcasp

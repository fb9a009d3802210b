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

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "pcasp/program.h"

namespace pcasp {

// Brute-force reference used by the test suites. Everything here walks the
// full 2^|At| interpretation space with its own bitmask representation; the
// solver engine shares no reduct or minimality code with it.

class OracleBudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleBudget {
  int max_atoms = 16;
  std::uint64_t max_interpretations = std::uint64_t{1} << 20;
};

std::vector<Interpretation> oracle_models(const Program& p, const OracleBudget& budget = {});
std::vector<Interpretation> oracle_minimal_models(const Program& p, const OracleBudget& budget = {});
std::vector<Interpretation> oracle_answer_sets(const Program& p, const OracleBudget& budget = {});

/// All optimum answer sets (minimal violated-weak-constraint count).
std::vector<Interpretation> oracle_optimum_answer_sets(const Program& p,
                                                       const OracleBudget& budget = {});

/// Semi-stable / semi-equilibrium models: transform, enumerate answer sets
/// exhaustively, drop gap-superset models, project to base+belief atoms.
/// The gap used for filtering is recomputed from belief/base atom pairs, not
/// read off the gap markers. The budget applies to the transformed program.
std::vector<Interpretation> oracle_sst(const Program& p, const OracleBudget& budget = {});
std::vector<Interpretation> oracle_seq(const Program& p, const OracleBudget& budget = {});

struct RandomProgramParams {
  int atoms = 4;
  int rules = 6;
  int max_head = 2;
  int max_body = 3;
  double neg_prob = 0.5;
  std::uint64_t seed = 0;
};

/// Deterministic generator over single-letter-style atom names a, b, c, ...
/// Head size is drawn from 0..max_head (0 gives a constraint), body size
/// from 0..max_body, each body literal negated with probability neg_prob.
/// Incoherence is not guaranteed; callers filter via oracle_answer_sets.
Program random_program(const RandomProgramParams& params);

}  // namespace pcasp

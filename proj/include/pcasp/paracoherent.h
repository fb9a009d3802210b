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

#include <optional>
#include <vector>

#include "pcasp/solver.h"
#include "pcasp/transform.h"

namespace pcasp {

enum class AlgorithmKind { Filtering, GuessCheck, Minimize, Split, Weak };

enum class OneOfPolicy { First, Random };

struct ParacoherentOptions {
  unsigned seed = 0;
  OneOfPolicy oneof = OneOfPolicy::First;
  SolveLimits limits;
};

struct ParacoherentResult {
  /// Projected model over base and belief atoms.
  Interpretation model;
  /// Gap markers of the witnessing answer set; always equals the
  /// believed-but-untrue atoms of `model` mapped through the gap prefix.
  AtomSet gap;
  /// The unprojected answer set of the transformed program (witness for
  /// post-hoc audits).
  Interpretation answer_set;
  TransformKind semantics = TransformKind::Kappa;
  AlgorithmKind algorithm = AlgorithmKind::Filtering;
  SolveStats stats;
};

/// One solver call on program + pi_m: m is paracoherent iff the extended
/// program has no answer set. Throws std::invalid_argument when m is not an
/// answer set of the transformed program.
bool is_paracoherent(const TransformedProgram& tp, const Interpretation& m,
                     SolveStats* stats = nullptr);

/// Enumerate all answer sets, keep the one with subset-minimal gap.
std::optional<ParacoherentResult> filtering(const TransformedProgram& tp,
                                            const ParacoherentOptions& options = {});

/// Enumerate answer sets, return the first that passes the pi_m coherence
/// check.
std::optional<ParacoherentResult> guess_check(const TransformedProgram& tp,
                                              const ParacoherentOptions& options = {});

/// Repeatedly conjoin pi_m and re-solve from scratch until incoherent;
/// at most |At(P)|+2 solver calls.
std::optional<ParacoherentResult> minimize(const TransformedProgram& tp,
                                           const ParacoherentOptions& options = {});

/// Decide gap atoms one by one: probe with the atom forbidden; on failure
/// the atom is fixed true, on success the candidate improves.
std::optional<ParacoherentResult> split(const TransformedProgram& tp,
                                        const ParacoherentOptions& options = {});

/// Optimum answer set under one weak constraint per gap atom; the result is
/// gap-cardinality-minimal and hence gap-subset-minimal.
std::optional<ParacoherentResult> weak_method(const TransformedProgram& tp,
                                              const ParacoherentOptions& options = {});

std::optional<ParacoherentResult> solve_paracoherent(const TransformedProgram& tp,
                                                     AlgorithmKind algorithm,
                                                     const ParacoherentOptions& options = {});

/// All paracoherent answer sets: enumerate answer sets, keep the maximal
/// canonical ones (gap not a strict superset of another's), project and
/// deduplicate.
std::vector<ParacoherentResult> enumerate_all(const TransformedProgram& tp,
                                              const ParacoherentOptions& options = {});

}  // namespace pcasp

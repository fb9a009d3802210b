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

#include <vector>

#include "pcasp/program.h"

namespace pcasp {

/// Which epistemic transformation produced a program: kappa yields
/// semi-stable models, ht yields semi-equilibrium models.
enum class TransformKind { Kappa, Ht };

struct TransformOptions {
  /// Append the gap rules gap_k_a :- k_a, not a (one per base atom). The
  /// paracoherent algorithms require them; printing the bare transformation
  /// does not.
  bool with_gap = true;
};

/// An epistemic transformation of a source program, optionally extended with
/// the gap-reification rules.
struct TransformedProgram {
  Program program;
  TransformKind kind = TransformKind::Kappa;
  /// Base atoms of the source program that occur in it (At of the source).
  AtomSet base_atoms;
  /// Source rule index per program rule; -1 for gap rules and belief-closure
  /// rules that have no single source rule.
  std::vector<int> rule_origin;
  /// Index of the first gap rule; equals rules().size() when with_gap=false.
  std::size_t gap_rules_begin = 0;
  /// All gap-marker atoms, one per base atom (empty when with_gap=false).
  AtomSet gap_atoms;
};

/// Rewrites every rule with nonempty negative body into the positive
/// lambda/belief form; rules without negation are copied verbatim. Rejects
/// programs with weak constraints or generated-prefix atoms.
TransformedProgram kappa_transform(const Program& p, const TransformOptions& options = {});

/// kappa_transform plus belief closure (k_a :- a for every atom) and one
/// belief-lifted copy of every source rule.
TransformedProgram ht_transform(const Program& p, const TransformOptions& options = {});

/// One rule gap_k_a :- k_a, not a per base atom (ascending id); creates the
/// belief and gap atoms on demand.
std::vector<Rule> gap_rules(Signature& sig, const AtomSet& base_atoms);

/// Constraint set forcing any answer set of program+pi_m to have a gap that
/// is a strict subset of m's gap: one constraint over all of m's gap atoms
/// (omitted when the gap is empty) plus one unit constraint per gap atom
/// outside m.
std::vector<Rule> pi_m(const TransformedProgram& tp, const Interpretation& m);

/// One weak constraint ":~ gap_k_a." per base atom.
std::vector<WeakConstraint> weak_gap_constraints(const TransformedProgram& tp);

/// Drops lambda and gap-marker atoms, keeping base and belief atoms.
Interpretation project_paracoherent(const Interpretation& m, const TransformedProgram& tp);

/// Gap markers true in m.
AtomSet gap_of(const Interpretation& m, const TransformedProgram& tp);

}  // namespace pcasp

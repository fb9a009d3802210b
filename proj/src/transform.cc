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

#include "pcasp/transform.h"

#include <cassert>
#include <stdexcept>

#include "pcasp/solver.h"

namespace pcasp {

namespace {

void check_transform_input(const Program& p) {
  if (!p.weak().empty())
    throw std::invalid_argument("epistemic transformations take programs without weak constraints");
  for (int id = 0; id < p.signature().size(); ++id) {
    const AtomInfo& info = p.signature()[id];
    if (info.kind != AtomKind::Base || has_reserved_prefix(info.name))
      throw std::invalid_argument("input already contains generated atom '" + info.name + "'");
  }
}

// Rules (2)-(5): one disjunctive guess rule, one support rule per head atom,
// one clash constraint per (head atom, negative-body atom), and the closure
// rules lam_i :- a_i, lam_k for all ordered pairs i,k (the paper ranges over
// i=k as well, so the single-head case keeps its lam :- a, lam instance).
void append_kappa_rules(Program& out, std::vector<int>& origin, const Rule& r, int rule_index) {
  if (r.negative_body.empty()) {
    out.add_rule(r);
    origin.push_back(rule_index);
    return;
  }
  Signature& sig = out.signature();
  std::vector<int> lambdas;
  lambdas.reserve(r.head.size());
  for (std::size_t i = 0; i < r.head.size(); ++i)
    lambdas.push_back(sig.lambda_atom(rule_index, static_cast<int>(i)));
  std::vector<int> beliefs;
  beliefs.reserve(r.negative_body.size());
  for (int b : r.negative_body) beliefs.push_back(sig.belief_atom(b));

  std::vector<int> guess_head = lambdas;
  guess_head.insert(guess_head.end(), beliefs.begin(), beliefs.end());
  out.add_rule(Rule::make(std::move(guess_head), r.positive_body, {}));
  origin.push_back(rule_index);

  for (std::size_t i = 0; i < r.head.size(); ++i) {
    out.add_rule(Rule::make({r.head[i]}, {lambdas[i]}, {}));
    origin.push_back(rule_index);
  }
  for (std::size_t i = 0; i < r.head.size(); ++i)
    for (int b : r.negative_body) {
      out.add_rule(Rule::make({}, {lambdas[i], b}, {}));
      origin.push_back(rule_index);
    }
  for (std::size_t i = 0; i < r.head.size(); ++i)
    for (std::size_t k = 0; k < r.head.size(); ++k) {
      out.add_rule(Rule::make({lambdas[i]}, {r.head[i], lambdas[k]}, {}));
      origin.push_back(rule_index);
    }
}

void append_gap_part(TransformedProgram& tp) {
  tp.gap_rules_begin = tp.program.rules().size();
  const std::vector<Rule> gaps = gap_rules(tp.program.signature(), tp.base_atoms);
  for (const Rule& g : gaps) {
    tp.program.add_rule(g);
    tp.rule_origin.push_back(-1);
    tp.gap_atoms.set(g.head.front());
  }
}

TransformedProgram transform_core(const Program& p, TransformKind kind) {
  check_transform_input(p);
  TransformedProgram tp;
  tp.kind = kind;
  tp.base_atoms = p.atoms();
  tp.program = Program(p.signature());
  for (std::size_t ri = 0; ri < p.rules().size(); ++ri)
    append_kappa_rules(tp.program, tp.rule_origin, p.rules()[ri], static_cast<int>(ri));
  return tp;
}

}  // namespace

TransformedProgram kappa_transform(const Program& p, const TransformOptions& options) {
  TransformedProgram tp = transform_core(p, TransformKind::Kappa);
  tp.gap_rules_begin = tp.program.rules().size();
  if (options.with_gap) append_gap_part(tp);
  return tp;
}

TransformedProgram ht_transform(const Program& p, const TransformOptions& options) {
  TransformedProgram tp = transform_core(p, TransformKind::Ht);
  Signature& sig = tp.program.signature();

  // Belief closure k_a :- a, one per occurring atom.
  tp.base_atoms.for_each([&](int a) {
    tp.program.add_rule(Rule::make({sig.belief_atom(a)}, {a}, {}));
    tp.rule_origin.push_back(-1);
  });

  // Belief-lifted copy of every source rule: the belief world must satisfy
  // the rule classically, with negative-body atoms moved into the head.
  for (std::size_t ri = 0; ri < p.rules().size(); ++ri) {
    const Rule& r = p.rules()[ri];
    std::vector<int> head;
    head.reserve(r.head.size() + r.negative_body.size());
    for (int a : r.head) head.push_back(sig.belief_atom(a));
    for (int b : r.negative_body) head.push_back(sig.belief_atom(b));
    std::vector<int> body;
    body.reserve(r.positive_body.size());
    for (int b : r.positive_body) body.push_back(sig.belief_atom(b));
    tp.program.add_rule(Rule::make(std::move(head), std::move(body), {}));
    tp.rule_origin.push_back(static_cast<int>(ri));
  }

  tp.gap_rules_begin = tp.program.rules().size();
  if (options.with_gap) append_gap_part(tp);
  return tp;
}

std::vector<Rule> gap_rules(Signature& sig, const AtomSet& base_atoms) {
  std::vector<Rule> out;
  base_atoms.for_each([&](int a) {
    const int belief = sig.belief_atom(a);
    const int gap = sig.gap_atom(a);
    out.push_back(Rule::make({gap}, {belief}, {a}));
  });
  return out;
}

std::vector<Rule> pi_m(const TransformedProgram& tp, const Interpretation& m) {
  assert(is_answer_set(tp.program, m));
  std::vector<Rule> out;
  AtomSet in_gap = gap_of(m, tp);
  if (!in_gap.empty()) out.push_back(Rule::make({}, in_gap.ids(), {}));
  tp.gap_atoms.for_each([&](int g) {
    if (!m.test(g)) out.push_back(Rule::make({}, {g}, {}));
  });
  return out;
}

std::vector<WeakConstraint> weak_gap_constraints(const TransformedProgram& tp) {
  std::vector<WeakConstraint> out;
  tp.gap_atoms.for_each([&](int g) { out.push_back(WeakConstraint::make({g}, {})); });
  return out;
}

Interpretation project_paracoherent(const Interpretation& m, const TransformedProgram& tp) {
  Interpretation out;
  const Signature& sig = tp.program.signature();
  m.for_each([&](int id) {
    const AtomKind kind = sig[id].kind;
    if (kind == AtomKind::Base || kind == AtomKind::Belief) out.set(id);
  });
  return out;
}

AtomSet gap_of(const Interpretation& m, const TransformedProgram& tp) {
  AtomSet out = m;
  out &= tp.gap_atoms;
  return out;
}

}  // namespace pcasp

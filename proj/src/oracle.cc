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

#include "pcasp/oracle.h"

#include <algorithm>
#include <random>
#include <string>

#include "pcasp/transform.h"

namespace pcasp {

namespace {

using Mask = std::uint32_t;

struct MaskRule {
  Mask head = 0;
  Mask pos = 0;
  Mask neg = 0;
};

struct MaskWeak {
  Mask pos = 0;
  Mask neg = 0;
};

// Ground truth machinery over a dense remap of the atoms occurring in the
// program. Interpretations are plain bitmasks.
struct MaskProgram {
  std::vector<int> atom_ids;  // dense index -> signature id, ascending
  std::vector<MaskRule> rules;
  std::vector<MaskWeak> weak;

  int arity() const { return static_cast<int>(atom_ids.size()); }

  Interpretation to_interpretation(Mask m) const {
    Interpretation out;
    for (int k = 0; k < arity(); ++k)
      if ((m >> k) & 1) out.set(atom_ids[static_cast<std::size_t>(k)]);
    return out;
  }
};

MaskProgram compile(const Program& p, const OracleBudget& budget) {
  MaskProgram mp;
  mp.atom_ids = p.atoms().ids();
  if (mp.arity() > budget.max_atoms)
    throw OracleBudgetError("oracle budget exceeded: " + std::to_string(mp.arity()) +
                            " atoms > max_atoms=" + std::to_string(budget.max_atoms));
  if ((std::uint64_t{1} << mp.arity()) > budget.max_interpretations)
    throw OracleBudgetError("oracle budget exceeded: interpretation space too large");

  std::vector<int> dense(static_cast<std::size_t>(p.signature().size()), -1);
  for (int k = 0; k < mp.arity(); ++k)
    dense[static_cast<std::size_t>(mp.atom_ids[static_cast<std::size_t>(k)])] = k;
  const auto to_mask = [&](const std::vector<int>& ids) {
    Mask m = 0;
    for (int id : ids) m |= Mask{1} << dense[static_cast<std::size_t>(id)];
    return m;
  };
  for (const Rule& r : p.rules())
    mp.rules.push_back({to_mask(r.head), to_mask(r.positive_body), to_mask(r.negative_body)});
  for (const WeakConstraint& w : p.weak())
    mp.weak.push_back({to_mask(w.positive_body), to_mask(w.negative_body)});
  return mp;
}

bool mask_is_model(const MaskProgram& mp, Mask i) {
  for (const MaskRule& r : mp.rules)
    if ((r.pos & i) == r.pos && (r.neg & i) == 0 && (r.head & i) == 0) return false;
  return true;
}

// Positive part of the reduct with respect to i.
std::vector<MaskRule> mask_reduct(const MaskProgram& mp, Mask i) {
  std::vector<MaskRule> out;
  for (const MaskRule& r : mp.rules)
    if ((r.neg & i) == 0) out.push_back({r.head, r.pos, 0});
  return out;
}

bool mask_satisfies(const std::vector<MaskRule>& rules, Mask i) {
  for (const MaskRule& r : rules)
    if ((r.pos & i) == r.pos && (r.head & i) == 0) return false;
  return true;
}

bool mask_is_answer_set(const MaskProgram& mp, Mask i) {
  if (!mask_is_model(mp, i)) return false;
  const std::vector<MaskRule> reduct = mask_reduct(mp, i);
  if (i == 0) return true;
  for (Mask sub = (i - 1) & i;; sub = (sub - 1) & i) {
    if (mask_satisfies(reduct, sub)) return false;
    if (sub == 0) break;
  }
  return true;
}

int mask_violations(const MaskProgram& mp, Mask i) {
  int n = 0;
  for (const MaskWeak& w : mp.weak)
    if ((w.pos & i) == w.pos && (w.neg & i) == 0) ++n;
  return n;
}

template <class Keep>
std::vector<Interpretation> enumerate(const MaskProgram& mp, Keep&& keep) {
  std::vector<Interpretation> out;
  const std::uint64_t space = std::uint64_t{1} << mp.arity();
  for (std::uint64_t i = 0; i < space; ++i)
    if (keep(static_cast<Mask>(i))) out.push_back(mp.to_interpretation(static_cast<Mask>(i)));
  return out;
}

std::vector<Interpretation> paracoherent_models(const Program& p, TransformKind kind,
                                                const OracleBudget& budget) {
  const TransformedProgram tp =
      kind == TransformKind::Kappa ? kappa_transform(p) : ht_transform(p);
  const MaskProgram mp = compile(tp.program, budget);
  const Signature& sig = tp.program.signature();

  // Gap recomputed from belief/base pairs: believed but not true.
  const auto gap_mask = [&](Mask i) {
    Mask gap = 0;
    for (int k = 0; k < mp.arity(); ++k) {
      if (((i >> k) & 1) == 0) continue;
      const AtomInfo& info = sig[mp.atom_ids[static_cast<std::size_t>(k)]];
      if (info.kind != AtomKind::Belief) continue;
      bool base_true = false;
      for (int k2 = 0; k2 < mp.arity(); ++k2)
        if (mp.atom_ids[static_cast<std::size_t>(k2)] == info.base) {
          base_true = ((i >> k2) & 1) != 0;
          break;
        }
      if (!base_true) gap |= Mask{1} << k;
    }
    return gap;
  };

  std::vector<Mask> answer_sets;
  const std::uint64_t space = std::uint64_t{1} << mp.arity();
  for (std::uint64_t i = 0; i < space; ++i)
    if (mask_is_answer_set(mp, static_cast<Mask>(i))) answer_sets.push_back(static_cast<Mask>(i));

  std::vector<Mask> gaps;
  gaps.reserve(answer_sets.size());
  for (Mask m : answer_sets) gaps.push_back(gap_mask(m));

  std::vector<Interpretation> out;
  for (std::size_t a = 0; a < answer_sets.size(); ++a) {
    bool maximal_canonical = true;
    for (std::size_t b = 0; b < answer_sets.size(); ++b)
      if (b != a && (gaps[b] & ~gaps[a]) == 0 && gaps[b] != gaps[a]) {
        maximal_canonical = false;
        break;
      }
    if (!maximal_canonical) continue;
    Interpretation proj;
    for (int k = 0; k < mp.arity(); ++k) {
      if (((answer_sets[a] >> k) & 1) == 0) continue;
      const AtomInfo& info = sig[mp.atom_ids[static_cast<std::size_t>(k)]];
      if (info.kind == AtomKind::Base || info.kind == AtomKind::Belief)
        proj.set(mp.atom_ids[static_cast<std::size_t>(k)]);
    }
    if (std::find(out.begin(), out.end(), proj) == out.end()) out.push_back(std::move(proj));
  }
  return out;
}

}  // namespace

std::vector<Interpretation> oracle_models(const Program& p, const OracleBudget& budget) {
  const MaskProgram mp = compile(p, budget);
  return enumerate(mp, [&](Mask i) { return mask_is_model(mp, i); });
}

std::vector<Interpretation> oracle_minimal_models(const Program& p, const OracleBudget& budget) {
  const MaskProgram mp = compile(p, budget);
  return enumerate(mp, [&](Mask i) {
    if (!mask_is_model(mp, i)) return false;
    if (i == 0) return true;
    for (Mask sub = (i - 1) & i;; sub = (sub - 1) & i) {
      if (mask_is_model(mp, sub)) return false;
      if (sub == 0) break;
    }
    return true;
  });
}

std::vector<Interpretation> oracle_answer_sets(const Program& p, const OracleBudget& budget) {
  const MaskProgram mp = compile(p, budget);
  return enumerate(mp, [&](Mask i) { return mask_is_answer_set(mp, i); });
}

std::vector<Interpretation> oracle_optimum_answer_sets(const Program& p,
                                                       const OracleBudget& budget) {
  const MaskProgram mp = compile(p, budget);
  std::vector<Mask> answer_sets;
  const std::uint64_t space = std::uint64_t{1} << mp.arity();
  for (std::uint64_t i = 0; i < space; ++i)
    if (mask_is_answer_set(mp, static_cast<Mask>(i))) answer_sets.push_back(static_cast<Mask>(i));

  int best = -1;
  for (Mask m : answer_sets) {
    const int cost = mask_violations(mp, m);
    if (best < 0 || cost < best) best = cost;
  }
  std::vector<Interpretation> out;
  for (Mask m : answer_sets)
    if (mask_violations(mp, m) == best) out.push_back(mp.to_interpretation(m));
  return out;
}

std::vector<Interpretation> oracle_sst(const Program& p, const OracleBudget& budget) {
  return paracoherent_models(p, TransformKind::Kappa, budget);
}

std::vector<Interpretation> oracle_seq(const Program& p, const OracleBudget& budget) {
  return paracoherent_models(p, TransformKind::Ht, budget);
}

Program random_program(const RandomProgramParams& params) {
  std::mt19937_64 rng(params.seed);
  Program p;
  std::vector<int> ids;
  ids.reserve(static_cast<std::size_t>(params.atoms));
  for (int a = 0; a < params.atoms; ++a) {
    std::string name(1, static_cast<char>('a' + a % 26));
    if (a >= 26) name += std::to_string(a / 26);
    ids.push_back(p.signature().base_atom(name));
  }
  const auto draw_atom = [&] { return ids[rng() % ids.size()]; };
  const int neg_threshold = static_cast<int>(params.neg_prob * 1000.0);

  for (int r = 0; r < params.rules; ++r) {
    std::vector<int> head, pos, neg;
    const int head_size = static_cast<int>(rng() % static_cast<std::uint64_t>(params.max_head + 1));
    for (int i = 0; i < head_size; ++i) head.push_back(draw_atom());
    int body_size = static_cast<int>(rng() % static_cast<std::uint64_t>(params.max_body + 1));
    if (head.empty() && body_size == 0) body_size = 1;
    for (int i = 0; i < body_size; ++i) {
      const int atom = draw_atom();
      if (static_cast<int>(rng() % 1000) < neg_threshold)
        neg.push_back(atom);
      else
        pos.push_back(atom);
    }
    p.add_rule(Rule::make(std::move(head), std::move(pos), std::move(neg)));
  }
  return p;
}

}  // namespace pcasp

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

#include "pcasp/paracoherent.h"

#include <random>
#include <stdexcept>
#include <unordered_set>

namespace pcasp {

namespace {

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  std::chrono::duration<double, std::milli> lap() const {
    return std::chrono::steady_clock::now() - start;
  }
};

ParacoherentResult make_result(const TransformedProgram& tp, AlgorithmKind algorithm,
                               const Interpretation& witness, SolveStats stats,
                               const Timer& timer) {
  ParacoherentResult r;
  r.model = project_paracoherent(witness, tp);
  r.gap = gap_of(witness, tp);
  r.answer_set = witness;
  r.semantics = tp.kind;
  r.algorithm = algorithm;
  r.stats = std::move(stats);
  r.stats.elapsed = timer.lap();
  return r;
}

bool check_incoherent(const TransformedProgram& tp, const Interpretation& m,
                      const ParacoherentOptions& options, SolveStats* stats) {
  Program check = tp.program;
  check.add_rules(pi_m(tp, m));
  SolveOptions so;
  so.seed = options.seed;
  so.limits = options.limits;
  so.stats = stats;
  return !first_answer_set(check, so).has_value();
}

int pick_gap_atom(const AtomSet& candidates, OneOfPolicy policy, std::mt19937& rng) {
  const std::vector<int> ids = candidates.ids();
  if (policy == OneOfPolicy::First) return ids.front();
  return ids[rng() % ids.size()];
}

}  // namespace

bool is_paracoherent(const TransformedProgram& tp, const Interpretation& m, SolveStats* stats) {
  if (!is_answer_set(tp.program, m))
    throw std::invalid_argument("is_paracoherent needs an answer set of the transformed program");
  // The empty gap has no strict subset; pi_m alone cannot exclude m itself
  // in this case, so it is decided without a solver call.
  if (gap_of(m, tp).empty()) return true;
  ParacoherentOptions options;
  return check_incoherent(tp, m, options, stats);
}

std::optional<ParacoherentResult> filtering(const TransformedProgram& tp,
                                            const ParacoherentOptions& options) {
  Timer timer;
  AnswerSetEnumerator en(tp.program, options.seed, options.limits);
  std::optional<Interpretation> best = en.next();
  if (!best) return std::nullopt;
  AtomSet best_gap = gap_of(*best, tp);
  while (std::optional<Interpretation> m = en.next()) {
    AtomSet gap = gap_of(*m, tp);
    if (gap.proper_subset_of(best_gap)) {
      best = std::move(m);
      best_gap = std::move(gap);
    }
  }
  return make_result(tp, AlgorithmKind::Filtering, *best, en.stats(), timer);
}

std::optional<ParacoherentResult> guess_check(const TransformedProgram& tp,
                                              const ParacoherentOptions& options) {
  Timer timer;
  AnswerSetEnumerator en(tp.program, options.seed, options.limits);
  SolveStats check_stats;
  while (std::optional<Interpretation> m = en.next()) {
    if (gap_of(*m, tp).empty() || check_incoherent(tp, *m, options, &check_stats)) {
      SolveStats stats = en.stats();
      stats.solver_calls += check_stats.solver_calls;
      stats.decisions += check_stats.decisions;
      stats.backtracks += check_stats.backtracks;
      stats.peak_program_size = std::max(stats.peak_program_size, check_stats.peak_program_size);
      return make_result(tp, AlgorithmKind::GuessCheck, *m, stats, timer);
    }
  }
  return std::nullopt;
}

std::optional<ParacoherentResult> minimize(const TransformedProgram& tp,
                                           const ParacoherentOptions& options) {
  Timer timer;
  SolveStats stats;
  SolveOptions so;
  so.seed = options.seed;
  so.limits = options.limits;
  so.stats = &stats;

  Program work = tp.program;
  std::optional<Interpretation> m = first_answer_set(work, so);
  if (!m) return std::nullopt;
  stats.models_enumerated += 1;
  while (true) {
    // With an empty gap the pi_m constraints no longer exclude m itself
    // (there is nothing to shrink); m is the result.
    if (gap_of(*m, tp).empty()) return make_result(tp, AlgorithmKind::Minimize, *m, stats, timer);
    work.add_rules(pi_m(tp, *m));
    std::optional<Interpretation> better = first_answer_set(work, so);
    if (!better) return make_result(tp, AlgorithmKind::Minimize, *m, stats, timer);
    stats.models_enumerated += 1;
    m = std::move(better);
  }
}

std::optional<ParacoherentResult> split(const TransformedProgram& tp,
                                        const ParacoherentOptions& options) {
  Timer timer;
  SolveStats stats;
  SolveOptions so;
  so.seed = options.seed;
  so.limits = options.limits;
  so.stats = &stats;
  std::mt19937 rng(options.seed);

  Program work = tp.program;
  std::optional<Interpretation> m = first_answer_set(work, so);
  if (!m) return std::nullopt;
  stats.models_enumerated += 1;

  AtomSet fixed;  // gap atoms already asserted true by a failed probe
  AtomSet candidates = gap_of(*m, tp);
  while (!candidates.empty()) {
    work.add_rules(pi_m(tp, *m));
    const int atom = pick_gap_atom(candidates, options.oneof, rng);

    Program probe = work;
    probe.add_rule(Rule::make({}, {atom}, {}));
    std::optional<Interpretation> better = first_answer_set(probe, so);
    if (!better) {
      work.add_rule(Rule::make({}, {}, {atom}));  // :- not atom
      fixed.set(atom);
      candidates.reset(atom);
    } else {
      stats.models_enumerated += 1;
      m = std::move(better);
      candidates = gap_of(*m, tp);
      candidates.subtract(fixed);
    }
  }
  return make_result(tp, AlgorithmKind::Split, *m, stats, timer);
}

std::optional<ParacoherentResult> weak_method(const TransformedProgram& tp,
                                              const ParacoherentOptions& options) {
  Timer timer;
  SolveStats stats;
  SolveOptions so;
  so.seed = options.seed;
  so.limits = options.limits;
  so.stats = &stats;

  Program work = tp.program;
  for (const WeakConstraint& w : weak_gap_constraints(tp)) work.add_weak(w);
  std::optional<Interpretation> m = optimum_answer_set(work, so);
  if (!m) return std::nullopt;
  stats.models_enumerated += 1;
  return make_result(tp, AlgorithmKind::Weak, *m, stats, timer);
}

std::optional<ParacoherentResult> solve_paracoherent(const TransformedProgram& tp,
                                                     AlgorithmKind algorithm,
                                                     const ParacoherentOptions& options) {
  switch (algorithm) {
    case AlgorithmKind::Filtering: return filtering(tp, options);
    case AlgorithmKind::GuessCheck: return guess_check(tp, options);
    case AlgorithmKind::Minimize: return minimize(tp, options);
    case AlgorithmKind::Split: return split(tp, options);
    case AlgorithmKind::Weak: return weak_method(tp, options);
  }
  throw std::logic_error("unknown algorithm");
}

std::vector<ParacoherentResult> enumerate_all(const TransformedProgram& tp,
                                              const ParacoherentOptions& options) {
  Timer timer;
  AnswerSetEnumerator en(tp.program, options.seed, options.limits);
  std::vector<Interpretation> models;
  std::vector<AtomSet> gaps;
  while (std::optional<Interpretation> m = en.next()) {
    gaps.push_back(gap_of(*m, tp));
    models.push_back(std::move(*m));
  }

  std::vector<ParacoherentResult> out;
  std::unordered_set<Interpretation, AtomSetHash> seen;
  for (std::size_t i = 0; i < models.size(); ++i) {
    bool maximal_canonical = true;
    for (std::size_t j = 0; j < models.size(); ++j)
      if (j != i && gaps[j].proper_subset_of(gaps[i])) {
        maximal_canonical = false;
        break;
      }
    if (!maximal_canonical) continue;
    ParacoherentResult r = make_result(tp, AlgorithmKind::Filtering, models[i], en.stats(), timer);
    if (seen.insert(r.model).second) out.push_back(std::move(r));
  }
  return out;
}

}  // namespace pcasp

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

#include "pcasp/solver.h"

#include <algorithm>
#include <random>
#include <span>

namespace pcasp {

namespace {

// A rule as a clause: satisfied when some head atom is true, some positive
// body atom false, or some negative body atom true. Literal encoding:
// atom << 1, lowest bit set when the literal wants the atom false.
using Lit = std::int32_t;

inline Lit pos_lit(int atom) { return static_cast<Lit>(atom) << 1; }
inline Lit neg_lit(int atom) { return (static_cast<Lit>(atom) << 1) | 1; }
inline int lit_atom(Lit l) { return l >> 1; }
inline bool lit_wants_false(Lit l) { return (l & 1) != 0; }

struct Clause {
  std::vector<Lit> lits;
};

std::vector<Clause> clauses_of(std::span<const Rule> rules) {
  std::vector<Clause> out;
  out.reserve(rules.size());
  for (const Rule& r : rules) {
    Clause c;
    c.lits.reserve(r.head.size() + r.positive_body.size() + r.negative_body.size());
    for (int a : r.head) c.lits.push_back(pos_lit(a));
    for (int a : r.positive_body) c.lits.push_back(neg_lit(a));
    for (int a : r.negative_body) c.lits.push_back(pos_lit(a));
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<int> branch_order(const AtomSet& atoms, unsigned seed) {
  std::vector<int> order = atoms.ids();
  if (seed != 0) {
    std::mt19937 rng(seed);
    for (std::size_t i = order.size(); i > 1; --i)
      std::swap(order[i - 1], order[rng() % i]);
  }
  return order;
}

AtomSet rule_atoms(std::span<const Rule> rules) {
  AtomSet atoms;
  for (const Rule& r : rules) {
    for (int a : r.head) atoms.set(a);
    for (int a : r.positive_body) atoms.set(a);
    for (int a : r.negative_body) atoms.set(a);
  }
  return atoms;
}

struct Search {
  std::vector<Clause> clauses;
  const std::vector<WeakConstraint>* weak = nullptr;
  int cost_bound = -1;  // -1: no bound
  std::vector<int> order;
  std::vector<signed char> value;  // 0 unknown, 1 true, -1 false
  std::vector<int> trail;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  std::uint64_t decisions = 0;
  std::uint64_t backtracks = 0;

  explicit Search(int n_atoms) : value(static_cast<std::size_t>(n_atoms), 0) {}

  bool lit_true(Lit l) const {
    const signed char v = value[static_cast<std::size_t>(lit_atom(l))];
    return lit_wants_false(l) ? v == -1 : v == 1;
  }

  void push(int atom, bool v) {
    value[static_cast<std::size_t>(atom)] = v ? 1 : -1;
    trail.push_back(atom);
  }

  void undo(std::size_t mark) {
    while (trail.size() > mark) {
      value[static_cast<std::size_t>(trail.back())] = 0;
      trail.pop_back();
    }
  }

  int decided_violations() const {
    int n = 0;
    for (const WeakConstraint& w : *weak) {
      bool violated = true;
      for (int a : w.positive_body)
        if (value[static_cast<std::size_t>(a)] != 1) {
          violated = false;
          break;
        }
      if (violated)
        for (int a : w.negative_body)
          if (value[static_cast<std::size_t>(a)] != -1) {
            violated = false;
            break;
          }
      if (violated) ++n;
    }
    return n;
  }

  // Unit-style propagation to fixpoint; false on conflict (a falsified
  // clause, or the violated-weak count reaching the bound).
  bool propagate() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const Clause& c : clauses) {
        bool satisfied = false;
        int unknowns = 0;
        Lit unit = 0;
        for (Lit l : c.lits) {
          const signed char v = value[static_cast<std::size_t>(lit_atom(l))];
          if (v == 0) {
            ++unknowns;
            if (unknowns > 1) break;
            unit = l;
          } else if (lit_wants_false(l) ? v == -1 : v == 1) {
            satisfied = true;
            break;
          }
        }
        if (satisfied || unknowns > 1) continue;
        if (unknowns == 0) return false;
        push(lit_atom(unit), !lit_wants_false(unit));
        changed = true;
      }
    }
    if (cost_bound >= 0 && weak != nullptr && decided_violations() >= cost_bound) return false;
    return true;
  }

  void check_deadline() {
    if (deadline && (decisions & 0x3f) == 0 &&
        std::chrono::steady_clock::now() >= *deadline)
      throw TimeoutError();
  }

  Interpretation model() const {
    Interpretation i;
    for (std::size_t a = 0; a < value.size(); ++a)
      if (value[a] == 1) i.set(static_cast<int>(a));
    return i;
  }

  // Depth-first over the branch order, true branch first; on_model returns
  // true to stop the search. Visits every total assignment that satisfies
  // all clauses, in a deterministic order.
  template <class F>
  bool dfs(std::size_t idx, F&& on_model) {
    while (idx < order.size() && value[static_cast<std::size_t>(order[idx])] != 0) ++idx;
    if (idx == order.size()) return on_model();
    const int atom = order[idx];
    for (const bool v : {true, false}) {
      ++decisions;
      check_deadline();
      const std::size_t mark = trail.size();
      push(atom, v);
      if (propagate()) {
        if (dfs(idx + 1, on_model)) return true;
      }
      undo(mark);
      ++backtracks;
    }
    return false;
  }

  template <class F>
  bool run(F&& on_model) {
    if (!propagate()) return false;
    return dfs(0, on_model);
  }
};

bool body_satisfied(const Rule& r, const Interpretation& i) {
  for (int a : r.positive_body)
    if (!i.test(a)) return false;
  for (int a : r.negative_body)
    if (i.test(a)) return false;
  return true;
}

bool rule_satisfied(const Rule& r, const Interpretation& i) {
  if (!body_satisfied(r, i)) return true;
  for (int a : r.head)
    if (i.test(a)) return true;
  return false;
}

// Searches for a model of the (positive) rules that is a proper subset of i:
// atoms outside i are fixed false, and one extra clause demands that at
// least one atom of i is dropped. Smallest-id atoms are branched first with
// the removal (false) branch preferred.
bool has_smaller_model(std::span<const Rule> rules, const Interpretation& i, int n_atoms) {
  const std::vector<int> true_atoms = i.ids();
  if (true_atoms.empty()) return false;

  Search s(n_atoms);
  s.clauses = clauses_of(rules);
  Clause drop_one;
  for (int a : true_atoms) drop_one.lits.push_back(neg_lit(a));
  s.clauses.push_back(std::move(drop_one));

  const AtomSet scope = rule_atoms(rules);
  scope.for_each([&](int a) {
    if (!i.test(a)) s.push(a, false);
  });
  s.order = true_atoms;

  // Unlike the model search, the removal (false) branch is tried first.
  struct Rec {
    Search& s;
    bool operator()(std::size_t idx) {
      auto& order = s.order;
      while (idx < order.size() && s.value[static_cast<std::size_t>(order[idx])] != 0) ++idx;
      if (idx == order.size()) return true;  // all clauses satisfied, one atom dropped
      const int atom = order[idx];
      for (const bool v : {false, true}) {
        ++s.decisions;
        s.check_deadline();
        const std::size_t mark = s.trail.size();
        s.push(atom, v);
        if (s.propagate()) {
          if ((*this)(idx + 1)) return true;
        }
        s.undo(mark);
      }
      return false;
    }
  };
  if (!s.propagate()) return false;
  return Rec{s}(0);
}

Rule blocking_constraint(const Interpretation& model, const AtomSet& scope) {
  std::vector<int> pos, neg;
  scope.for_each([&](int a) { (model.test(a) ? pos : neg).push_back(a); });
  return Rule::make({}, std::move(pos), std::move(neg));
}

struct StatsScope {
  SolveStats* stats;
  Search& search;
  std::size_t program_size;
  std::chrono::steady_clock::time_point start;

  StatsScope(SolveStats* stats, Search& search, std::size_t program_size)
      : stats(stats),
        search(search),
        program_size(program_size),
        start(std::chrono::steady_clock::now()) {}

  ~StatsScope() {
    if (stats == nullptr) return;
    stats->solver_calls += 1;
    stats->decisions += search.decisions;
    stats->backtracks += search.backtracks;
    stats->elapsed += std::chrono::steady_clock::now() - start;
    stats->peak_program_size = std::max(stats->peak_program_size, program_size);
  }
};

}  // namespace

Reduct gl_reduct(const Program& p, const Interpretation& i) {
  Reduct out;
  for (const Rule& r : p.rules()) {
    bool blocked = false;
    for (int a : r.negative_body)
      if (i.test(a)) {
        blocked = true;
        break;
      }
    if (!blocked) out.rules.push_back(Rule{r.head, r.positive_body, {}});
  }
  return out;
}

Program reduct_program(const Program& p, const Interpretation& i) {
  Program out(p.signature());
  out.add_rules(gl_reduct(p, i).rules);
  return out;
}

bool is_model(const Program& p, const Interpretation& i) {
  for (const Rule& r : p.rules())
    if (!rule_satisfied(r, i)) return false;
  return true;
}

bool is_minimal_model(const Program& p, const Interpretation& i) {
  if (!classify(p).positive) throw std::invalid_argument("is_minimal_model needs a positive program");
  if (!is_model(p, i)) throw std::invalid_argument("is_minimal_model needs a model of the program");
  return !has_smaller_model(p.rules(), i, p.signature().size());
}

bool is_answer_set(const Program& p, const Interpretation& i) {
  if (!is_model(p, i)) return false;
  const Reduct reduct = gl_reduct(p, i);
  return !has_smaller_model(reduct.rules, i, p.signature().size());
}

int violated_weak_count(const Program& p, const Interpretation& i) {
  int n = 0;
  for (const WeakConstraint& w : p.weak()) {
    bool violated = true;
    for (int a : w.positive_body)
      if (!i.test(a)) {
        violated = false;
        break;
      }
    if (violated)
      for (int a : w.negative_body)
        if (i.test(a)) {
          violated = false;
          break;
        }
    if (violated) ++n;
  }
  return n;
}

namespace {

// Shared driver: first total model accepted by `accept`, in branch order.
template <class Accept>
std::optional<Interpretation> first_model(const Program& p, const SolveOptions& options,
                                          int cost_bound, Accept&& accept) {
  Search s(p.signature().size());
  s.clauses = clauses_of(p.rules());
  s.order = branch_order(rule_atoms(p.rules()), options.seed);
  s.deadline = options.limits.deadline;
  if (cost_bound >= 0) {
    s.weak = &p.weak();
    s.cost_bound = cost_bound;
  }
  StatsScope scope(options.stats, s, p.rules().size());

  std::optional<Interpretation> found;
  s.run([&] {
    Interpretation candidate = s.model();
    if (!accept(candidate)) return false;
    found = std::move(candidate);
    return true;
  });
  return found;
}

}  // namespace

bool has_classical_model(const Program& p, const SolveOptions& options) {
  return first_model(p, options, -1, [](const Interpretation&) { return true; }).has_value();
}

std::optional<Interpretation> first_answer_set(const Program& p, const SolveOptions& options) {
  return first_model(p, options, -1,
                     [&](const Interpretation& i) { return is_answer_set(p, i); });
}

std::optional<Interpretation> optimum_answer_set(const Program& p, const SolveOptions& options) {
  std::optional<Interpretation> best;
  int bound = -1;
  while (true) {
    std::optional<Interpretation> next = first_model(
        p, options, bound, [&](const Interpretation& i) { return is_answer_set(p, i); });
    if (!next) return best;
    bound = violated_weak_count(p, *next);
    best = std::move(next);
  }
}

AnswerSetEnumerator::AnswerSetEnumerator(const Program& p, unsigned seed, SolveLimits limits)
    : program_(p), block_scope_(rule_atoms(p.rules())), seed_(seed), limits_(limits) {}

std::optional<Interpretation> AnswerSetEnumerator::next() {
  if (exhausted_) return std::nullopt;
  SolveOptions options;
  options.seed = seed_;
  options.limits = limits_;
  options.stats = &stats_;
  std::optional<Interpretation> found = first_answer_set(program_, options);
  if (!found) {
    exhausted_ = true;
    return std::nullopt;
  }
  stats_.models_enumerated += 1;
  if (block_scope_.empty()) {
    // The empty program has the single answer set {} and nothing to block.
    exhausted_ = true;
  } else {
    program_.add_rule(blocking_constraint(*found, block_scope_));
  }
  return found;
}

}  // namespace pcasp

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

// End-to-end acceptance suite. Each criterion prints one PASS/FAIL line;
// the exit code is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "pcasp/bench.h"
#include "pcasp/oracle.h"
#include "pcasp/paracoherent.h"
#include "pcasp/parser.h"

using namespace pcasp;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

struct Criterion {
  int number;
  std::string description;
  bool ok = true;
  std::string detail;
  double budget_ms = -1;
  double elapsed_ms = 0;

  void expect(bool condition, const std::string& what) {
    if (condition) return;
    ok = false;
    if (!detail.empty()) detail += "; ";
    detail += what;
  }

  void finish() {
    if (budget_ms > 0 && elapsed_ms > budget_ms)
      expect(false, "took " + std::to_string(elapsed_ms) + " ms > " +
                        std::to_string(budget_ms) + " ms");
    std::printf("%s criterion %d: %s (%.1f ms)%s%s\n", ok ? "PASS" : "FAIL", number,
                description.c_str(), elapsed_ms, detail.empty() ? "" : " -- ",
                detail.c_str());
    if (!ok) ++failures;
  }
};

void run(int number, const std::string& description, double budget_ms,
         const std::function<void(Criterion&)>& body) {
  Criterion c;
  c.number = number;
  c.description = description;
  c.budget_ms = budget_ms;
  const auto start = Clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  if (c.elapsed_ms == 0)
    c.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  c.finish();
}

const char* kExampleP = "b :- not a. c :- not b. a :- c. d :- not d.";
const char* kCounterexampleP = "b :- not a. c :- a. d :- b, not d.";

const std::vector<AlgorithmKind> kAllAlgorithms = {
    AlgorithmKind::Filtering, AlgorithmKind::GuessCheck, AlgorithmKind::Minimize,
    AlgorithmKind::Split, AlgorithmKind::Weak};

using NameSet = std::set<std::string>;
using ModelSet = std::set<std::vector<std::string>>;

ModelSet model_names(const std::vector<Interpretation>& models, const Signature& sig) {
  ModelSet out;
  for (const Interpretation& m : models) out.insert(atom_names(m, sig));
  return out;
}

ModelSet projected_names(const std::vector<ParacoherentResult>& results, const Signature& sig) {
  ModelSet out;
  for (const ParacoherentResult& r : results) out.insert(atom_names(r.model, sig));
  return out;
}

// ---- shared random-program suite (criteria 5-9) ----

struct SuiteCase {
  Program program;
  std::uint64_t seed;
};

std::vector<SuiteCase> make_suite(std::size_t count) {
  // <= 6 base atoms, <= 10 rules, mixed negation probability; programs whose
  // ht transformation exceeds the oracle budget are skipped so the whole
  // suite stays exhaustive-checkable
  std::vector<SuiteCase> suite;
  const double neg_probs[] = {0.0, 0.3, 0.6, 0.9};
  std::uint64_t seed = 0;
  while (suite.size() < count) {
    RandomProgramParams params;
    params.atoms = 2 + static_cast<int>(seed % 5);
    params.rules = 3 + static_cast<int>(seed % 8);
    params.max_head = 1 + static_cast<int>(seed % 2);
    params.max_body = 2 + static_cast<int>(seed % 2);
    params.neg_prob = neg_probs[seed % 4];
    params.seed = 10000 + seed;
    ++seed;
    Program p = random_program(params);
    if (p.rules().empty()) continue;
    if (ht_transform(p).program.atoms().count() > 18) continue;
    suite.push_back({std::move(p), params.seed});
  }
  return suite;
}

struct SuiteOutcome {
  std::size_t cases = 0;
  std::size_t algorithm_mismatches = 0;
  std::size_t enumerate_mismatches = 0;
  std::size_t engine_as_mismatches = 0;
  std::size_t congruence_violations = 0;
  std::size_t coherence_violations = 0;
  std::size_t minimality_violations = 0;
  std::size_t minimize_call_violations = 0;
  std::size_t split_call_violations = 0;
  std::size_t filtering_count_violations = 0;
  std::size_t theorem1_violations = 0;
  std::size_t sizes_not_larger = 0;
};

SuiteOutcome run_suite(const std::vector<SuiteCase>& suite) {
  SuiteOutcome out;
  OracleBudget budget;
  budget.max_atoms = 18;

  for (const SuiteCase& item : suite) {
    const Program& p = item.program;
    const std::size_t at_p = p.atoms().count();

    const ModelSet as_p = model_names(oracle_answer_sets(p, budget), p.signature());
    {
      AnswerSetEnumerator en(p);
      ModelSet got;
      while (auto m = en.next()) got.insert(atom_names(*m, p.signature()));
      if (got != as_p) ++out.engine_as_mismatches;
    }
    const bool classical = has_classical_model(p);

    const TransformedProgram kappa = kappa_transform(p);
    const TransformedProgram ht = ht_transform(p);
    if (ht.program.rules().size() <= kappa.program.rules().size()) ++out.sizes_not_larger;

    for (const TransformKind kind : {TransformKind::Kappa, TransformKind::Ht}) {
      const TransformedProgram& tp = kind == TransformKind::Kappa ? kappa : ht;
      const Signature& sig = tp.program.signature();
      const std::vector<Interpretation> oracle_para =
          kind == TransformKind::Kappa ? oracle_sst(p, budget) : oracle_seq(p, budget);
      const ModelSet oracle_names = model_names(oracle_para, sig);

      // engine answer sets of the transformed program vs oracle
      const std::vector<Interpretation> oracle_as = oracle_answer_sets(tp.program, budget);
      std::vector<Interpretation> engine_as;
      {
        AnswerSetEnumerator en(tp.program);
        ModelSet got;
        while (auto m = en.next()) {
          got.insert(atom_names(*m, sig));
          engine_as.push_back(std::move(*m));
        }
        if (got != model_names(oracle_as, sig)) ++out.engine_as_mismatches;
      }

      // full enumeration of paracoherent models
      if (projected_names(enumerate_all(tp), sig) != oracle_names) ++out.enumerate_mismatches;

      // subset-minimality in the oracle's answer-set gap lattice
      std::vector<AtomSet> oracle_gaps;
      for (const Interpretation& m : oracle_as) oracle_gaps.push_back(gap_of(m, tp));
      const auto gap_is_minimal = [&](const AtomSet& gap) {
        for (const AtomSet& other : oracle_gaps)
          if (other.proper_subset_of(gap)) return false;
        return true;
      };

      // per-algorithm checks
      for (AlgorithmKind algorithm : kAllAlgorithms) {
        const auto result = solve_paracoherent(tp, algorithm);
        if (result.has_value() != !oracle_para.empty()) {
          ++out.algorithm_mismatches;
          continue;
        }
        if (!result) continue;
        if (oracle_names.count(atom_names(result->model, sig)) == 0) ++out.algorithm_mismatches;
        if (!gap_is_minimal(result->gap)) ++out.minimality_violations;
        if (algorithm == AlgorithmKind::Minimize && result->stats.solver_calls > at_p + 2)
          ++out.minimize_call_violations;
        if (algorithm == AlgorithmKind::Split && result->stats.solver_calls > 2 * at_p + 2)
          ++out.split_call_violations;
        if (algorithm == AlgorithmKind::Filtering &&
            result->stats.models_enumerated != oracle_as.size())
          ++out.filtering_count_violations;
      }

      // classical coherence desideratum
      if (classical && oracle_para.empty()) ++out.coherence_violations;

      // congruence: with answer sets present, projections to the base
      // signature coincide with AS(P)
      if (!as_p.empty()) {
        ModelSet projected;
        for (const Interpretation& m : oracle_para) {
          std::vector<std::string> names;
          m.for_each([&](int id) {
            if (sig[id].kind == AtomKind::Base) names.push_back(sig[id].name);
          });
          std::sort(names.begin(), names.end());
          projected.insert(std::move(names));
        }
        if (projected != as_p) ++out.congruence_violations;
      }

      // the coherence test as a property over every answer set
      for (const Interpretation& m : engine_as)
        if (is_paracoherent(tp, m) != gap_is_minimal(gap_of(m, tp))) ++out.theorem1_violations;
    }
    ++out.cases;
  }
  return out;
}

}  // namespace

int main() {
  // Criterion 1: kappa pipeline on the running example.
  run(1, "semi-stable reproduction on the four-rule example", 1000, [](Criterion& c) {
    const Program p = parse(kExampleP);
    const TransformedProgram tp = kappa_transform(p);
    const Signature& sig = tp.program.signature();

    AnswerSetEnumerator en(tp.program);
    std::multiset<NameSet> gaps;
    while (auto m = en.next()) {
      NameSet gap;
      for (const std::string& name : atom_names(gap_of(*m, tp), sig)) gap.insert(name);
      gaps.insert(std::move(gap));
    }
    c.expect(gaps == std::multiset<NameSet>{{"gap_k_a", "gap_k_b", "gap_k_d"},
                                            {"gap_k_d"},
                                            {"gap_k_d"}},
             "gap multiset of AS(P^kappa u P_g)");

    c.expect(projected_names(enumerate_all(tp), sig) ==
                 ModelSet{{"b", "k_b", "k_d"}, {"a", "c", "k_a", "k_d"}},
             "SST(P)");
    c.expect(model_names(oracle_sst(p), sig) ==
                 ModelSet{{"b", "k_b", "k_d"}, {"a", "c", "k_a", "k_d"}},
             "oracle SST(P)");
  });

  // Criterion 2: ht pipeline on the same program.
  run(2, "semi-equilibrium reproduction on the four-rule example", 1000, [](Criterion& c) {
    const Program p = parse(kExampleP);
    const TransformedProgram tp = ht_transform(p);
    const ModelSet expected{{"b", "k_b", "k_d"}, {"a", "c", "k_a", "k_c", "k_d"}};
    c.expect(projected_names(enumerate_all(tp), tp.program.signature()) == expected, "SEQ(P)");
    c.expect(model_names(oracle_seq(p), tp.program.signature()) == expected, "oracle SEQ(P)");
  });

  // Criterion 3: worked pi_m sets, the coherence check, and the four search
  // algorithms landing on the gap {gap(Kd)}.
  run(3, "worked pi_m constraint sets and algorithm runs", 4000, [](Criterion& c) {
    const TransformedProgram tp = kappa_transform(parse(kExampleP));
    const Signature& sig = tp.program.signature();

    const auto bodies = [&](const std::vector<Rule>& rules) {
      std::set<NameSet> out;
      for (const Rule& r : rules) {
        NameSet body;
        for (int a : r.positive_body) body.insert(sig[a].name);
        out.insert(std::move(body));
      }
      return out;
    };

    const Interpretation m1 = make_interpretation(
        sig, {"k_a", "k_b", "k_d", "gap_k_a", "gap_k_b", "gap_k_d"});
    const Interpretation m2 =
        make_interpretation(sig, {"lam_0_0", "b", "k_b", "k_d", "gap_k_d"});

    c.expect(bodies(pi_m(tp, m1)) ==
                 std::set<NameSet>{{"gap_k_a", "gap_k_b", "gap_k_d"}, {"gap_k_c"}},
             "pi_m(M1')");
    c.expect(bodies(pi_m(tp, m2)) ==
                 std::set<NameSet>{{"gap_k_d"}, {"gap_k_a"}, {"gap_k_b"}, {"gap_k_c"}},
             "pi_m(M2')");
    c.expect(!is_paracoherent(tp, m1), "is_paracoherent(M1') = false");
    c.expect(is_paracoherent(tp, m2), "is_paracoherent(M2') = true");

    for (AlgorithmKind algorithm :
         {AlgorithmKind::Filtering, AlgorithmKind::GuessCheck, AlgorithmKind::Minimize,
          AlgorithmKind::Split}) {
      const auto result = solve_paracoherent(tp, algorithm);
      c.expect(result.has_value(), std::string(to_string(algorithm)) + " found a model");
      if (result) {
        c.expect(atom_names(result->gap, sig) == std::vector<std::string>{"gap_k_d"},
                 std::string(to_string(algorithm)) + " gap = {gap_k_d}");
        c.expect(result->stats.elapsed.count() < 1000.0,
                 std::string(to_string(algorithm)) + " under 1 s");
      }
    }
  });

  // Criterion 4: the weak-constraint method is cardinality-minimal, so the
  // gap-2 semi-equilibrium model is never returned. (The source text lists
  // this model pair with the belief atom of the true atom b omitted; the
  // values asserted here keep it, consistently with criteria 1-2 and the
  // independent oracle.)
  run(4, "weak method on the two-model counterexample", 1000, [](Criterion& c) {
    const Program p = parse(kCounterexampleP);
    const TransformedProgram tp = ht_transform(p);
    const Signature& sig = tp.program.signature();
    const ModelSet expected{{"b", "k_b", "k_d"}, {"k_a", "k_c"}};
    c.expect(projected_names(enumerate_all(tp), sig) == expected, "SEQ of the counterexample");
    c.expect(model_names(oracle_seq(p), sig) == expected, "oracle SEQ agrees");
    for (unsigned seed : {0u, 1u, 2u, 3u, 4u, 5u, 6u, 7u}) {
      ParacoherentOptions options;
      options.seed = seed;
      const auto result = weak_method(tp, options);
      c.expect(result.has_value(), "weak method found a model");
      if (!result) continue;
      c.expect(atom_names(result->model, sig) == std::vector<std::string>{"b", "k_b", "k_d"},
               "weak method returns the gap-1 model");
      c.expect(result->gap.count() == 1, "gap cardinality 1");
      c.expect(result->stats.elapsed.count() < 1000.0, "weak method under 1 s");
    }
  });

  // Criteria 5-9 share one suite of 500 random programs.
  const std::vector<SuiteCase> suite = make_suite(500);
  const auto suite_start = Clock::now();
  const SuiteOutcome outcome = run_suite(suite);
  const double suite_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - suite_start).count();

  run(5, "oracle equivalence on 500 random programs, both semantics", -1, [&](Criterion& c) {
    c.elapsed_ms = suite_ms;
    c.expect(outcome.cases == 500, "suite size");
    c.expect(outcome.algorithm_mismatches == 0,
             std::to_string(outcome.algorithm_mismatches) +
                 " algorithm results outside the oracle set");
    c.expect(outcome.enumerate_mismatches == 0,
             std::to_string(outcome.enumerate_mismatches) + " enumerate_all mismatches");
    c.expect(outcome.engine_as_mismatches == 0,
             std::to_string(outcome.engine_as_mismatches) + " answer-set enumeration mismatches");
    c.expect(suite_ms < 120000.0, "suite under 120 s");
  });

  run(6, "desiderata: congruence, classical coherence, minimal undefinedness", -1,
      [&](Criterion& c) {
        c.expect(outcome.congruence_violations == 0,
                 std::to_string(outcome.congruence_violations) + " congruence violations");
        c.expect(outcome.coherence_violations == 0,
                 std::to_string(outcome.coherence_violations) + " classical-coherence violations");
        c.expect(outcome.minimality_violations == 0,
                 std::to_string(outcome.minimality_violations) + " non-minimal gaps returned");
      });

  run(7, "solver-call bounds for minimize, split and filtering", -1, [&](Criterion& c) {
    c.expect(outcome.minimize_call_violations == 0,
             std::to_string(outcome.minimize_call_violations) + " minimize bound violations");
    c.expect(outcome.split_call_violations == 0,
             std::to_string(outcome.split_call_violations) + " split bound violations");
    c.expect(outcome.filtering_count_violations == 0,
             std::to_string(outcome.filtering_count_violations) +
                 " filtering enumeration-count violations");
  });

  run(8, "coherence test equals gap subset-minimality on every answer set", -1,
      [&](Criterion& c) {
        c.expect(outcome.theorem1_violations == 0,
                 std::to_string(outcome.theorem1_violations) + " violations");
      });

  run(9, "transformation size report with ht strictly larger than kappa", -1, [&](Criterion& c) {
    c.expect(outcome.sizes_not_larger == 0,
             std::to_string(outcome.sizes_not_larger) + " instances with ht <= kappa rules");
    std::vector<BenchInstance> instances;
    std::size_t i = 0;
    for (const SuiteCase& item : suite) {
      if (++i > 25) break;  // a representative slice for the emitted report
      instances.push_back({"suite-" + std::to_string(item.seed), item.program});
    }
    const std::vector<SizeRow> rows = report_transform_sizes(instances);
    c.expect(rows.size() == instances.size(), "one row per instance");
    double kappa_rules = 0, ht_rules = 0;
    for (const SizeRow& row : rows) {
      kappa_rules += row.kappa_rules;
      ht_rules += row.ht_rules;
    }
    const std::string json = size_report_json(rows);
    c.expect(json.find("ht_to_kappa_rule_ratio") != std::string::npos, "ratio reported");
    std::printf("  note: ht/kappa rule ratio on the report slice = %.2f (reported, not asserted)\n",
                kappa_rules > 0 ? ht_rules / kappa_rules : 0.0);
  });

  std::printf("%s: %d criterion(s) failed\n",
              failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED", failures);
  return failures;
}

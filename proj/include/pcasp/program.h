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

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace pcasp {

/// Atom roles. Base atoms come from the input program; the other kinds are
/// introduced by the epistemic transformations.
enum class AtomKind : std::uint8_t { Base, Belief, Lambda, Gap };

/// True when `name` starts with one of the generated-atom prefixes
/// ("k_", "gap_k_", "lam_"). Such names are not accepted in user input.
bool has_reserved_prefix(std::string_view name);

struct AtomInfo {
  std::string name;
  AtomKind kind = AtomKind::Base;
  int base = -1;  ///< Belief/Gap: id of the annotated base atom.
  int rule = -1;  ///< Lambda: index of the source rule.
  int pos = -1;   ///< Lambda: head position within the source rule.
};

/// Dense, interned atom table. Ids are assigned in creation order and never
/// reused; transformations only append, so ids of original atoms are stable.
class Signature {
 public:
  /// Find-or-create. Belief/gap/lambda atoms get canonical generated names.
  int base_atom(std::string_view name);
  int belief_atom(int base_id);
  int gap_atom(int base_id);
  int lambda_atom(int rule_index, int head_pos);

  int find(std::string_view name) const;  // -1 when absent

  const AtomInfo& operator[](int id) const { return atoms_[static_cast<std::size_t>(id)]; }
  int size() const { return static_cast<int>(atoms_.size()); }
  bool empty() const { return atoms_.empty(); }

 private:
  int intern(AtomInfo info);

  std::vector<AtomInfo> atoms_;
  std::unordered_map<std::string, int> index_;
};

/// Bit set over atom ids. Sets of different capacity compare as if
/// zero-extended.
class AtomSet {
 public:
  AtomSet() = default;
  explicit AtomSet(std::size_t capacity) { words_.resize((capacity + 63) / 64, 0); }

  static AtomSet of(std::initializer_list<int> ids);

  void set(int id);
  void set(int id, bool value) { value ? set(id) : reset(id); }
  void reset(int id);
  bool test(int id) const;

  std::size_t count() const;
  bool empty() const;
  void clear() { words_.clear(); }

  std::vector<int> ids() const;  // ascending

  bool subset_of(const AtomSet& other) const;
  bool proper_subset_of(const AtomSet& other) const { return subset_of(other) && *this != other; }
  bool intersects(const AtomSet& other) const;

  AtomSet& operator|=(const AtomSet& other);
  AtomSet& operator&=(const AtomSet& other);
  AtomSet& subtract(const AtomSet& other);

  friend bool operator==(const AtomSet& a, const AtomSet& b);
  friend bool operator!=(const AtomSet& a, const AtomSet& b) { return !(a == b); }

  /// Arbitrary but total order; used for canonical listings.
  friend bool operator<(const AtomSet& a, const AtomSet& b);

  std::size_t hash() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t word = words_[w];
      while (word != 0) {
        const int bit = __builtin_ctzll(word);
        f(static_cast<int>(w * 64) + bit);
        word &= word - 1;
      }
    }
  }

 private:
  void ensure(std::size_t bit);
  std::vector<std::uint64_t> words_;
};

struct AtomSetHash {
  std::size_t operator()(const AtomSet& s) const { return s.hash(); }
};

/// An interpretation is just a set of atoms over some signature; it also
/// serves as model / answer-set candidate.
using Interpretation = AtomSet;

/// Disjunctive rule: head | ... :- pos, ..., not neg, ... Literal lists are
/// stored sorted by atom id, without duplicates. Head and positive body may
/// overlap (tautologies are legal input).
struct Rule {
  std::vector<int> head;
  std::vector<int> positive_body;
  std::vector<int> negative_body;

  /// Normalizes (sort, dedup) and rejects the fully empty rule.
  static Rule make(std::vector<int> head, std::vector<int> positive, std::vector<int> negative);

  bool is_fact() const { return positive_body.empty() && negative_body.empty(); }
  bool is_constraint() const { return head.empty(); }
  bool is_normal() const { return head.size() <= 1; }
  bool is_positive() const { return negative_body.empty(); }

  friend bool operator==(const Rule&, const Rule&) = default;
};

/// Unweighted weak constraint: ":~ pos, ..., not neg, ...".
struct WeakConstraint {
  std::vector<int> positive_body;
  std::vector<int> negative_body;

  static WeakConstraint make(std::vector<int> positive, std::vector<int> negative);

  /// Never violated (positive and negative body overlap); may be dropped.
  bool is_vacuous() const;

  friend bool operator==(const WeakConstraint&, const WeakConstraint&) = default;
};

/// Ground disjunctive program plus optional weak constraints. Immutable by
/// convention once fully built; the At(P) cache is maintained on insertion.
class Program {
 public:
  /// Position of a statement in input order (rules and weak constraints may
  /// interleave in source text).
  struct StatementRef {
    bool is_weak;
    std::size_t index;
  };

  Program() = default;
  explicit Program(Signature signature) : signature_(std::move(signature)) {}

  Signature& signature() { return signature_; }
  const Signature& signature() const { return signature_; }

  void add_rule(Rule r);
  void add_rules(const std::vector<Rule>& rules);
  /// Vacuous weak constraints are silently dropped.
  void add_weak(WeakConstraint w);

  const std::vector<Rule>& rules() const { return rules_; }
  const std::vector<WeakConstraint>& weak() const { return weak_; }
  const std::vector<StatementRef>& statements() const { return statements_; }

  /// At(P): atoms occurring in some rule or weak constraint.
  const AtomSet& atoms() const { return atoms_; }

 private:
  Signature signature_;
  std::vector<Rule> rules_;
  std::vector<WeakConstraint> weak_;
  std::vector<StatementRef> statements_;
  AtomSet atoms_;
};

struct ProgramClass {
  bool normal = true;           ///< every |H(r)| <= 1
  bool positive = true;         ///< every B-(r) empty
  bool has_constraints = false; ///< some H(r) empty
  bool head_cycle_free = true;  ///< no two head atoms share a positive-dependency SCC
};

ProgramClass classify(const Program& p);

/// Builds an interpretation from atom names; throws std::invalid_argument on
/// unknown names.
Interpretation make_interpretation(const Signature& sig, const std::vector<std::string>& names);

/// Atom names of an interpretation, lexicographically sorted.
std::vector<std::string> atom_names(const Interpretation& i, const Signature& sig);

}  // namespace pcasp

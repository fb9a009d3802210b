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

#include "pcasp/program.h"

#include <algorithm>
#include <stdexcept>

namespace pcasp {

bool has_reserved_prefix(std::string_view name) {
  return name.starts_with("k_") || name.starts_with("gap_k_") || name.starts_with("lam_");
}

int Signature::intern(AtomInfo info) {
  const auto it = index_.find(info.name);
  if (it != index_.end()) return it->second;
  const int id = static_cast<int>(atoms_.size());
  index_.emplace(info.name, id);
  atoms_.push_back(std::move(info));
  return id;
}

int Signature::base_atom(std::string_view name) {
  return intern(AtomInfo{std::string(name), AtomKind::Base, -1, -1, -1});
}

int Signature::belief_atom(int base_id) {
  AtomInfo info;
  info.name = "k_" + atoms_[static_cast<std::size_t>(base_id)].name;
  info.kind = AtomKind::Belief;
  info.base = base_id;
  return intern(std::move(info));
}

int Signature::gap_atom(int base_id) {
  AtomInfo info;
  info.name = "gap_k_" + atoms_[static_cast<std::size_t>(base_id)].name;
  info.kind = AtomKind::Gap;
  info.base = base_id;
  return intern(std::move(info));
}

int Signature::lambda_atom(int rule_index, int head_pos) {
  AtomInfo info;
  info.name = "lam_" + std::to_string(rule_index) + "_" + std::to_string(head_pos);
  info.kind = AtomKind::Lambda;
  info.rule = rule_index;
  info.pos = head_pos;
  return intern(std::move(info));
}

int Signature::find(std::string_view name) const {
  const auto it = index_.find(std::string(name));
  return it == index_.end() ? -1 : it->second;
}

AtomSet AtomSet::of(std::initializer_list<int> ids) {
  AtomSet s;
  for (int id : ids) s.set(id);
  return s;
}

void AtomSet::ensure(std::size_t bit) {
  const std::size_t need = bit / 64 + 1;
  if (words_.size() < need) words_.resize(need, 0);
}

void AtomSet::set(int id) {
  ensure(static_cast<std::size_t>(id));
  words_[static_cast<std::size_t>(id) / 64] |= std::uint64_t{1} << (id % 64);
}

void AtomSet::reset(int id) {
  const std::size_t w = static_cast<std::size_t>(id) / 64;
  if (w < words_.size()) words_[w] &= ~(std::uint64_t{1} << (id % 64));
}

bool AtomSet::test(int id) const {
  const std::size_t w = static_cast<std::size_t>(id) / 64;
  return w < words_.size() && ((words_[w] >> (id % 64)) & 1) != 0;
}

std::size_t AtomSet::count() const {
  std::size_t n = 0;
  for (std::uint64_t w : words_) n += static_cast<std::size_t>(__builtin_popcountll(w));
  return n;
}

bool AtomSet::empty() const {
  for (std::uint64_t w : words_)
    if (w != 0) return false;
  return true;
}

std::vector<int> AtomSet::ids() const {
  std::vector<int> out;
  out.reserve(count());
  for_each([&](int id) { out.push_back(id); });
  return out;
}

bool AtomSet::subset_of(const AtomSet& other) const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    const std::uint64_t theirs = w < other.words_.size() ? other.words_[w] : 0;
    if ((words_[w] & ~theirs) != 0) return false;
  }
  return true;
}

bool AtomSet::intersects(const AtomSet& other) const {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t w = 0; w < n; ++w)
    if ((words_[w] & other.words_[w]) != 0) return true;
  return false;
}

AtomSet& AtomSet::operator|=(const AtomSet& other) {
  if (words_.size() < other.words_.size()) words_.resize(other.words_.size(), 0);
  for (std::size_t w = 0; w < other.words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

AtomSet& AtomSet::operator&=(const AtomSet& other) {
  for (std::size_t w = 0; w < words_.size(); ++w)
    words_[w] &= w < other.words_.size() ? other.words_[w] : 0;
  return *this;
}

AtomSet& AtomSet::subtract(const AtomSet& other) {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t w = 0; w < n; ++w) words_[w] &= ~other.words_[w];
  return *this;
}

bool operator==(const AtomSet& a, const AtomSet& b) {
  const std::size_t n = std::max(a.words_.size(), b.words_.size());
  for (std::size_t w = 0; w < n; ++w) {
    const std::uint64_t wa = w < a.words_.size() ? a.words_[w] : 0;
    const std::uint64_t wb = w < b.words_.size() ? b.words_[w] : 0;
    if (wa != wb) return false;
  }
  return true;
}

bool operator<(const AtomSet& a, const AtomSet& b) {
  const std::size_t n = std::max(a.words_.size(), b.words_.size());
  for (std::size_t w = n; w-- > 0;) {
    const std::uint64_t wa = w < a.words_.size() ? a.words_[w] : 0;
    const std::uint64_t wb = w < b.words_.size() ? b.words_[w] : 0;
    if (wa != wb) return wa < wb;
  }
  return false;
}

std::size_t AtomSet::hash() const {
  std::size_t h = 0xcbf29ce484222325ull;
  std::size_t top = words_.size();
  while (top > 0 && words_[top - 1] == 0) --top;  // trailing zeros do not matter
  for (std::size_t w = 0; w < top; ++w) {
    h ^= static_cast<std::size_t>(words_[w]);
    h *= 0x100000001b3ull;
  }
  return h;
}

namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

Rule Rule::make(std::vector<int> head, std::vector<int> positive, std::vector<int> negative) {
  Rule r;
  r.head = sorted_unique(std::move(head));
  r.positive_body = sorted_unique(std::move(positive));
  r.negative_body = sorted_unique(std::move(negative));
  if (r.head.empty() && r.positive_body.empty() && r.negative_body.empty())
    throw std::invalid_argument("rule with empty head and empty body");
  return r;
}

WeakConstraint WeakConstraint::make(std::vector<int> positive, std::vector<int> negative) {
  WeakConstraint w;
  w.positive_body = sorted_unique(std::move(positive));
  w.negative_body = sorted_unique(std::move(negative));
  if (w.positive_body.empty() && w.negative_body.empty())
    throw std::invalid_argument("weak constraint with empty body");
  return w;
}

bool WeakConstraint::is_vacuous() const {
  // Both lists are sorted.
  auto a = positive_body.begin();
  auto b = negative_body.begin();
  while (a != positive_body.end() && b != negative_body.end()) {
    if (*a == *b) return true;
    (*a < *b) ? ++a : ++b;
  }
  return false;
}

namespace {

void check_ids(const std::vector<int>& ids, int limit) {
  for (int id : ids)
    if (id < 0 || id >= limit) throw std::out_of_range("atom id not in signature");
}

}  // namespace

void Program::add_rule(Rule r) {
  r = Rule::make(std::move(r.head), std::move(r.positive_body), std::move(r.negative_body));
  check_ids(r.head, signature_.size());
  check_ids(r.positive_body, signature_.size());
  check_ids(r.negative_body, signature_.size());
  for (int a : r.head) atoms_.set(a);
  for (int a : r.positive_body) atoms_.set(a);
  for (int a : r.negative_body) atoms_.set(a);
  statements_.push_back({false, rules_.size()});
  rules_.push_back(std::move(r));
}

void Program::add_rules(const std::vector<Rule>& rules) {
  for (const Rule& r : rules) add_rule(r);
}

void Program::add_weak(WeakConstraint w) {
  w = WeakConstraint::make(std::move(w.positive_body), std::move(w.negative_body));
  check_ids(w.positive_body, signature_.size());
  check_ids(w.negative_body, signature_.size());
  if (w.is_vacuous()) return;
  for (int a : w.positive_body) atoms_.set(a);
  for (int a : w.negative_body) atoms_.set(a);
  statements_.push_back({true, weak_.size()});
  weak_.push_back(std::move(w));
}

namespace {

// Iterative Tarjan SCC over the positive dependency graph (edges from head
// atoms to positive body atoms).
std::vector<int> positive_sccs(const Program& p) {
  const int n = p.signature().size();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (const Rule& r : p.rules())
    for (int h : r.head)
      for (int b : r.positive_body) adj[static_cast<std::size_t>(h)].push_back(b);

  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0), num(static_cast<std::size_t>(n), -1);
  std::vector<int> stack;
  std::vector<bool> on_stack(static_cast<std::size_t>(n), false);
  int counter = 0, comps = 0;

  struct Frame {
    int v;
    std::size_t edge;
  };
  for (int root = 0; root < n; ++root) {
    if (num[static_cast<std::size_t>(root)] != -1) continue;
    std::vector<Frame> frames{{root, 0}};
    num[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = counter++;
    stack.push_back(root);
    on_stack[static_cast<std::size_t>(root)] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      const auto v = static_cast<std::size_t>(f.v);
      if (f.edge < adj[v].size()) {
        const int w = adj[v][f.edge++];
        const auto wi = static_cast<std::size_t>(w);
        if (num[wi] == -1) {
          num[wi] = low[wi] = counter++;
          stack.push_back(w);
          on_stack[wi] = true;
          frames.push_back({w, 0});
        } else if (on_stack[wi]) {
          low[v] = std::min(low[v], num[wi]);
        }
      } else {
        if (low[v] == num[v]) {
          while (true) {
            const int w = stack.back();
            stack.pop_back();
            on_stack[static_cast<std::size_t>(w)] = false;
            comp[static_cast<std::size_t>(w)] = comps;
            if (w == f.v) break;
          }
          ++comps;
        }
        const int child = f.v;
        frames.pop_back();
        if (!frames.empty()) {
          const auto parent = static_cast<std::size_t>(frames.back().v);
          low[parent] = std::min(low[parent], low[static_cast<std::size_t>(child)]);
        }
      }
    }
  }
  return comp;
}

}  // namespace

ProgramClass classify(const Program& p) {
  ProgramClass c;
  for (const Rule& r : p.rules()) {
    if (!r.is_normal()) c.normal = false;
    if (!r.is_positive()) c.positive = false;
    if (r.is_constraint()) c.has_constraints = true;
  }
  if (!c.normal) {
    const std::vector<int> comp = positive_sccs(p);
    for (const Rule& r : p.rules()) {
      for (std::size_t i = 0; i + 1 < r.head.size() && c.head_cycle_free; ++i)
        for (std::size_t j = i + 1; j < r.head.size(); ++j)
          if (comp[static_cast<std::size_t>(r.head[i])] ==
              comp[static_cast<std::size_t>(r.head[j])]) {
            c.head_cycle_free = false;
            break;
          }
      if (!c.head_cycle_free) break;
    }
  }
  return c;
}

Interpretation make_interpretation(const Signature& sig, const std::vector<std::string>& names) {
  Interpretation i;
  for (const std::string& name : names) {
    const int id = sig.find(name);
    if (id < 0) throw std::invalid_argument("unknown atom name: " + name);
    i.set(id);
  }
  return i;
}

std::vector<std::string> atom_names(const Interpretation& i, const Signature& sig) {
  std::vector<std::string> out;
  i.for_each([&](int id) { out.push_back(sig[id].name); });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace pcasp

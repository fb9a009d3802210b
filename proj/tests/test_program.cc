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

#include <doctest.h>

#include "pcasp/oracle.h"
#include "pcasp/parser.h"
#include "pcasp/transform.h"

using namespace pcasp;

namespace {

// Example program used throughout: b :- not a. c :- not b. a :- c. d :- not d.
const char* kExampleP = "b :- not a. c :- not b. a :- c. d :- not d.";

bool structurally_equal(const Program& x, const Program& y) {
  if (x.signature().size() != y.signature().size()) return false;
  for (int id = 0; id < x.signature().size(); ++id)
    if (x.signature()[id].name != y.signature()[id].name ||
        x.signature()[id].kind != y.signature()[id].kind)
      return false;
  return x.rules() == y.rules() && x.weak() == y.weak();
}

}  // namespace

TEST_CASE("parse maps the grammar onto rules") {
  const Program p = parse("b :- not a.");
  REQUIRE(p.rules().size() == 1);
  const Rule& r = p.rules()[0];
  CHECK(r.head == std::vector<int>{p.signature().find("b")});
  CHECK(r.positive_body.empty());
  CHECK(r.negative_body == std::vector<int>{p.signature().find("a")});

  const Program fact = parse("a | b.");
  REQUIRE(fact.rules().size() == 1);
  CHECK(fact.rules()[0].head.size() == 2);
  CHECK(fact.rules()[0].is_fact());

  const Program constraint = parse(":- a, not b.");
  REQUIRE(constraint.rules().size() == 1);
  CHECK(constraint.rules()[0].is_constraint());
  CHECK(constraint.rules()[0].positive_body == std::vector<int>{constraint.signature().find("a")});
  CHECK(constraint.rules()[0].negative_body == std::vector<int>{constraint.signature().find("b")});
}

TEST_CASE("parse assigns ids in first-occurrence order") {
  const Program p = parse(kExampleP);
  CHECK(p.signature().find("b") == 0);
  CHECK(p.signature().find("a") == 1);
  CHECK(p.signature().find("c") == 2);
  CHECK(p.signature().find("d") == 3);
}

TEST_CASE("parse errors carry line and column") {
  CHECK_THROWS_AS(parse("a :- b"), ParseError);  // missing dot
  CHECK_THROWS_AS(parse("."), ParseError);       // empty statement
  CHECK_THROWS_AS(parse("a :- ."), ParseError);  // body required after ':-'
  CHECK_THROWS_AS(parse("not a."), ParseError);  // negation outside body? head literal
  CHECK_THROWS_AS(parse("a | ."), ParseError);
  try {
    parse("a.\n  b :- % comment\n.");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 1);
  }
}

TEST_CASE("parse rejects reserved prefixes in user input") {
  CHECK_THROWS_AS(parse("k_a."), ParseError);
  CHECK_THROWS_AS(parse("gap_k_a."), ParseError);
  CHECK_THROWS_AS(parse("b :- lam_0_0."), ParseError);
  ParseOptions allow;
  allow.allow_reserved = true;
  CHECK(parse("k_a.", allow).rules().size() == 1);
}

TEST_CASE("parse rejects weak-constraint weight annotations") {
  CHECK_THROWS_AS(parse(":~ a. [1@1]"), ParseError);
  CHECK_THROWS_AS(parse(":~ b. [2]"), ParseError);
  CHECK(parse(":~ a, not b.").weak().size() == 1);
}

TEST_CASE("duplicate literals are dropped, duplicate rules kept") {
  const Program p = parse("a | a :- b, b, not c, not c. a | a :- b, b, not c, not c.");
  REQUIRE(p.rules().size() == 2);
  CHECK(p.rules()[0].head.size() == 1);
  CHECK(p.rules()[0].positive_body.size() == 1);
  CHECK(p.rules()[0].negative_body.size() == 1);
  CHECK(p.rules()[0] == p.rules()[1]);
}

TEST_CASE("vacuous weak constraints are dropped") {
  CHECK(parse(":~ a, not a.").weak().empty());
  CHECK(parse(":~ a, not b.").weak().size() == 1);
}

TEST_CASE("print is canonical and round-trips") {
  CHECK(print(parse("b:-not a.")) == "b :- not a.\n");
  CHECK(print(Program{}) == "");

  const Program example = parse(kExampleP);
  CHECK(print(example) == "b :- not a.\nc :- not b.\na :- c.\nd :- not d.\n");

  const char* samples[] = {
      kExampleP,
      "a | b. :- a, not b. x :- y, not z. :~ x, not y. q.",
      ":~ a. :- not a.",
      "p | q | r :- s, not t, not u.",
  };
  for (const char* text : samples) {
    const Program p = parse(text);
    CHECK(structurally_equal(parse(print(p)), p));
  }
}

TEST_CASE("round-trip holds on random programs") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    RandomProgramParams params;
    params.atoms = 5;
    params.rules = 8;
    params.neg_prob = 0.4;
    params.seed = seed;
    // canonicalize once: the generator's signature may list unused atoms,
    // the parser's never does
    const Program p = parse(print(random_program(params)));
    CAPTURE(seed);
    CHECK(structurally_equal(parse(print(p)), p));
  }
}

TEST_CASE("atoms_of collects exactly the occurring atoms") {
  const Program example = parse(kExampleP);
  CHECK(atom_names(example.atoms(), example.signature()) ==
        std::vector<std::string>{"a", "b", "c", "d"});
  CHECK(Program{}.atoms().empty());
  const Program c = parse(":- a.");
  CHECK(atom_names(c.atoms(), c.signature()) == std::vector<std::string>{"a"});
}

TEST_CASE("classify reports normal/positive flags") {
  const Program example = parse(kExampleP);
  CHECK(classify(example).normal);
  CHECK_FALSE(classify(example).positive);

  const TransformedProgram kappa = kappa_transform(example, {.with_gap = false});
  CHECK(classify(kappa.program).positive);
  CHECK_FALSE(classify(kappa.program).normal);

  const Program fact = parse("a.");
  CHECK(classify(fact).normal);
  CHECK(classify(fact).positive);
  CHECK_FALSE(classify(fact).has_constraints);

  CHECK(classify(parse(":- a.")).has_constraints);
  CHECK(classify(parse("a | b. a :- b. b :- a.")).head_cycle_free == false);
  CHECK(classify(parse("a | b. a :- c. c :- a.")).head_cycle_free);
}

TEST_CASE("kappa transformation is always positive") {
  for (std::uint64_t seed = 100; seed < 140; ++seed) {
    RandomProgramParams params;
    params.atoms = 5;
    params.rules = 7;
    params.neg_prob = 0.6;
    params.seed = seed;
    const Program p = random_program(params);
    CAPTURE(seed);
    CHECK(classify(kappa_transform(p, {.with_gap = false}).program).positive);
  }
}

TEST_CASE("interpretation helpers") {
  const Program p = parse(kExampleP);
  const Interpretation i = make_interpretation(p.signature(), {"b", "d"});
  CHECK(i.test(p.signature().find("b")));
  CHECK(i.test(p.signature().find("d")));
  CHECK(i.count() == 2);
  CHECK_THROWS_AS(make_interpretation(p.signature(), {"zz"}), std::invalid_argument);

  AtomSet small = AtomSet::of({1, 3});
  AtomSet big = AtomSet::of({1, 2, 3});
  CHECK(small.subset_of(big));
  CHECK(small.proper_subset_of(big));
  CHECK_FALSE(big.subset_of(small));
  CHECK(small == AtomSet::of({3, 1}));
  AtomSet padded = AtomSet::of({1, 3, 200});
  padded.reset(200);
  CHECK(padded == small);  // zero-extension
  CHECK(padded.hash() == small.hash());
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include <eqlog/eqlog.hpp>

#include "support/generators.hpp"

using namespace eqlog;

namespace {

std::vector<AnswerSet> sets(std::vector<AnswerSet> s) { return s; }

// Literal conjunction over the given atoms: each atom appears positively,
// negated, or not at all.
FormulaPtr random_literal_conjunction(testgen::Rng& rng,
                                      const std::vector<std::string>& atoms) {
  std::vector<FormulaPtr> parts;
  for (const auto& a : atoms) {
    switch (rng.below(3)) {
      case 0:
        parts.push_back(Formula::atom(a));
        break;
      case 1:
        parts.push_back(Formula::negation(Formula::atom(a)));
        break;
      default:
        break;
    }
  }
  if (parts.empty()) {
    parts.push_back(Formula::atom(atoms[rng.below(
        static_cast<int>(atoms.size()))]));
  }
  return Formula::conjunction_of(parts);
}

}  // namespace

TEST_CASE("forgetting one atom, worked examples") {
  ForgetResult r1 = forget_atom(parse_program("a | b."), "a");
  CHECK(r1.program.rules.empty());
  CHECK(r1.minimal_sets == sets({{}}));
  CHECK(r1.retained_vocab.atoms() == std::vector<std::string>{"b"});
  CHECK(answer_sets(r1.program, r1.retained_vocab) == sets({{}}));

  ForgetResult r2 = forget_atom(parse_program("b :- not a."), "a");
  CHECK(r2.minimal_sets == sets({{"b"}}));
  REQUIRE(r2.program.rules.size() == 1);
  CHECK(render_rule(r2.program.rules[0]) == "b.");

  ForgetResult r3 = forget_atom(parse_program("a."), "a");
  CHECK(r3.program.rules.empty());
  CHECK(r3.minimal_sets == sets({{}}));
  CHECK(r3.retained_vocab.empty());
}

TEST_CASE("forgetting an atom outside the program is the identity") {
  const Program p = parse_program("a | b.");
  ForgetResult r = forget_atom(p, "z");
  CHECK(r.program == p);
  CHECK(r.forgotten == std::vector<std::string>{"z"});
  CHECK(r.minimal_sets == sets({{"a"}, {"b"}}));
}

TEST_CASE("forgetting requires coherence") {
  CHECK_THROWS_AS(forget_atom(parse_program("a.\n:- a."), "a"),
                  precondition_error);
  CHECK_THROWS_AS(forget_set(parse_program("a.\n:- a."), {"b"}),
                  precondition_error);
  CHECK_THROWS_AS(
      uniform_interpolant_program(parse_program("a.\n:- a."), Vocabulary()),
      precondition_error);
}

TEST_CASE("rebuilt rules negate the missing retained atoms") {
  // Answer sets {a},{b} survive forgetting c and regenerate as an even
  // negative loop.
  ForgetResult r = forget_set(parse_program("a | b.\nc :- b."), {"c"});
  CHECK(r.minimal_sets == sets({{"a"}, {"b"}}));
  REQUIRE(r.program.rules.size() == 2);
  CHECK(render_rule(r.program.rules[0]) == "a :- not b.");
  CHECK(render_rule(r.program.rules[1]) == "b :- not a.");
}

TEST_CASE("forget_set basics") {
  const Program p = parse_program("a | b.");
  ForgetResult nothing = forget_set(p, {});
  CHECK(nothing.program == p);
  CHECK(nothing.minimal_sets == sets({{"a"}, {"b"}}));

  ForgetResult r = forget_set(parse_program("a | b.\nc :- b."), {"c", "zz"});
  CHECK(r.forgotten == (std::vector<std::string>{"c", "zz"}));
  CHECK(r.retained_vocab.atoms() == (std::vector<std::string>{"a", "b"}));
  CHECK(r.minimal_sets == sets({{"a"}, {"b"}}));
}

TEST_CASE("atom entailment survives forgetting, both ways") {
  testgen::Rng rng(500);
  const std::vector<std::string> atoms{"a", "b", "c", "d"};
  int done = 0;
  while (done < 120) {
    Program p = testgen::random_coherent_program(rng, atoms, 5);
    const Vocabulary vp = vocabulary_of(p);
    if (vp.size() < 2) {
      continue;
    }
    const std::string forget = vp.atom(rng.below(static_cast<int>(vp.size())));
    Program q = forget_atom(p, forget).program;
    for (const auto& kept : vp) {
      if (kept == forget) {
        continue;
      }
      FormulaPtr b = Formula::atom(kept);
      CHECK(entails_as(p, b) == entails_as(q, b));
    }
    ++done;
  }
}

TEST_CASE("literal and conjunction entailment transfers forward") {
  testgen::Rng rng(501);
  const std::vector<std::string> atoms{"a", "b", "c", "d"};
  int done = 0;
  while (done < 120) {
    Program p = testgen::random_coherent_program(rng, atoms, 5);
    const Vocabulary vp = vocabulary_of(p);
    if (vp.size() < 2) {
      continue;
    }
    const std::string forget = vp.atom(rng.below(static_cast<int>(vp.size())));
    Program q = forget_atom(p, forget).program;
    const std::vector<std::string> kept =
        vp.minus(Vocabulary({forget})).atoms();
    for (int k = 0; k < 5; ++k) {
      FormulaPtr phi = random_literal_conjunction(rng, kept);
      if (entails_as(p, phi)) {
        CHECK(entails_as(q, phi));
      }
    }
    ++done;
  }
}

TEST_CASE("negated-atom entailment does not transfer backward") {
  // q is in an answer set of the source but in no answer set of the
  // reduced program, so the reduced program entails -q while the source
  // does not.
  const Program p = parse_program("q | a.\nc.");
  CHECK(answer_sets(p, vocabulary_of(p)) ==
        sets({{"a", "c"}, {"c", "q"}}));
  ForgetResult r = forget_atom(p, "a");
  CHECK(r.minimal_sets == sets({{"c"}}));
  CHECK_FALSE(entails_as(p, parse_formula("-q")));
  CHECK(entails_as(r.program, parse_formula("-q")));
}

TEST_CASE("the fold order does not change the answer sets") {
  testgen::Rng rng(502);
  const std::vector<std::string> atoms{"a", "b", "c", "d"};
  int done = 0;
  while (done < 60) {
    Program p = testgen::random_coherent_program(rng, atoms, 5);
    const Vocabulary vp = vocabulary_of(p);
    if (vp.size() < 3) {
      continue;
    }
    std::vector<std::string> xs{vp.atom(0), vp.atom(2)};
    ForgetResult canonical = forget_set(p, xs);
    // Fold manually in the reversed order.
    Program manual = forget_atom(p, xs[1]).program;
    manual = forget_atom(manual, xs[0]).program;
    CHECK(answer_sets(manual, canonical.retained_vocab) ==
          canonical.minimal_sets);
    ++done;
  }
}

TEST_CASE("uniform interpolant examples") {
  ForgetResult r1 = uniform_interpolant_program(parse_program("b :- not a."),
                                                Vocabulary({"b"}));
  CHECK(r1.minimal_sets == sets({{"b"}}));
  CHECK(entails_as(parse_program("b :- not a."), parse_formula("b")));
  CHECK(entails_as(r1.program, parse_formula("b")));

  ForgetResult r2 = uniform_interpolant_program(parse_program("a | b."),
                                                Vocabulary({"b"}));
  CHECK(r2.minimal_sets == sets({{}}));
  CHECK_FALSE(entails_as(parse_program("a | b."), parse_formula("b")));
  CHECK_FALSE(entails_as(r2.program, parse_formula("b")));

  // Keeping the whole vocabulary (or more) changes nothing.
  const Program p = parse_program("a | b.\nc :- b.");
  ForgetResult r3 =
      uniform_interpolant_program(p, Vocabulary({"a", "b", "c", "z"}));
  CHECK(answer_sets(r3.program, vocabulary_of(p)) ==
        answer_sets(p, vocabulary_of(p)));
}

TEST_CASE("the source program entails every rule of its uniform "
          "interpolant") {
  testgen::Rng rng(503);
  const std::vector<std::string> atoms{"a", "b", "c", "d"};
  int done = 0;
  while (done < 40) {
    Program p = testgen::random_coherent_program(rng, atoms, 5);
    const Vocabulary vp = vocabulary_of(p);
    if (vp.empty()) {
      continue;
    }
    std::vector<std::string> kept;
    for (const auto& a : vp) {
      if (rng.coin()) {
        kept.push_back(a);
      }
    }
    // uniform_interpolant_program re-checks the entailment internally
    // and would throw; assert it explicitly as well.
    ForgetResult r = uniform_interpolant_program(p, Vocabulary(kept));
    const EquilibriumReport rep = equilibrium_models(program_to_theory(p), vp);
    for (const auto& m : rep.models.members()) {
      for (const auto& rule : r.program.rules) {
        CHECK(satisfies(m, *rule_to_formula(rule)));
      }
    }
    ++done;
  }
}

TEST_CASE("forgetting may lose disjunctions") {
  // The fixed witness: both disjuncts are individually open, so the
  // minimized projection keeps only the empty set and the disjunction
  // stops being entailed.
  const Program p = parse_program("a | b.");
  const FormulaPtr disj = parse_formula("a | b");
  REQUIRE(entails_as(p, disj));
  ForgetResult r = forget_atom(p, "a");
  CHECK_FALSE(entails_as(r.program, disj));
}

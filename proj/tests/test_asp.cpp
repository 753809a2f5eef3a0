#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <eqlog/eqlog.hpp>

#include "support/generators.hpp"

using namespace eqlog;

namespace {

std::vector<AnswerSet> sets(std::vector<AnswerSet> s) { return s; }

}  // namespace

TEST_CASE("rule translation") {
  CHECK(render_formula(rule_to_formula(parse_program("b :- not a.").rules[0])) ==
        "-a -> b");
  CHECK(render_formula(rule_to_formula(parse_program("a | b.").rules[0])) ==
        "a | b");
  CHECK(render_formula(rule_to_formula(parse_program(":- a.").rules[0])) ==
        "a -> _|_");
  CHECK(render_formula(rule_to_formula(
            parse_program("c | d :- a, b, not e.").rules[0])) ==
        "a & b & -e -> c | d");
  CHECK(render_formula(rule_to_formula(parse_program(":-.").rules[0])) ==
        "_|_");
}

TEST_CASE("reduct oracle examples") {
  CHECK(gl_answer_sets_oracle(parse_program("b :- not a."),
                              Vocabulary({"a", "b"})) == sets({{"b"}}));
  CHECK(gl_answer_sets_oracle(parse_program("a | b."),
                              Vocabulary({"a", "b"})) == sets({{"a"}, {"b"}}));
  CHECK(gl_answer_sets_oracle(parse_program("a :- a."), Vocabulary({"a"})) ==
        sets({{}}));
  CHECK(gl_answer_sets_oracle(parse_program("a.\n:- a."), Vocabulary({"a"}))
            .empty());
}

TEST_CASE("answer sets agree with the oracle on the examples") {
  CHECK(answer_sets(parse_program("b :- not a."), Vocabulary({"a", "b"})) ==
        sets({{"b"}}));
  CHECK(answer_sets(parse_program("a.\n:- a."), Vocabulary({"a"})).empty());
  CHECK(answer_sets(Program{}, Vocabulary()) == sets({{}}));
  CHECK(answer_sets(Program{}, Vocabulary({"a"})) == sets({{}}));
  // Even loops give two answer sets.
  CHECK(answer_sets(parse_program("a :- not b.\nb :- not a."),
                    Vocabulary({"a", "b"})) == sets({{"a"}, {"b"}}));
}

TEST_CASE("the two answer-set routes agree on random programs") {
  testgen::Rng rng(400);
  const std::vector<std::string> atoms{"a", "b", "c", "d", "e"};
  for (int i = 0; i < 300; ++i) {
    Program p = testgen::random_program(rng, atoms, 6);
    const Vocabulary v = vocabulary_of(p);
    // answer_sets cross-checks against the oracle internally and throws
    // on any disagreement.
    CHECK_NOTHROW(answer_sets(p, v));
  }
}

TEST_CASE("program queries") {
  const Program p = parse_program("b :- not a.");
  CHECK(entails_as(p, parse_formula("b & -c")));
  CHECK(entails_as(p, parse_formula("b")));
  CHECK_FALSE(entails_as(p, parse_formula("a")));

  const Program disj = parse_program("a | b.");
  CHECK_FALSE(entails_as(disj, parse_formula("a")));
  CHECK(entails_as(disj, parse_formula("a | b")));
}

TEST_CASE("queries outside the fragment are rejected") {
  const Program p = parse_program("a.");
  CHECK_THROWS_AS(entails_as(p, parse_formula("a -> a")), precondition_error);
  CHECK_THROWS_AS(entails_as(p, parse_formula("#t")), precondition_error);
  CHECK_THROWS_AS(entails_as(p, parse_formula("_|_")), precondition_error);
  CHECK_NOTHROW(entails_as(p, parse_formula("-(a & -a) | a")));
}

TEST_CASE("negated atom queries read as constraint satisfaction") {
  testgen::Rng rng(401);
  const std::vector<std::string> atoms{"a", "b", "c"};
  for (int i = 0; i < 100; ++i) {
    Program p = testgen::random_coherent_program(rng, atoms, 4);
    const Vocabulary v = vocabulary_of(p);
    for (const auto& atom : atoms) {
      bool somewhere = false;
      for (const auto& as : answer_sets(p, v)) {
        if (std::find(as.begin(), as.end(), atom) != as.end()) {
          somewhere = true;
          break;
        }
      }
      CHECK(entails_as(p, Formula::negation(Formula::atom(atom))) ==
            !somewhere);
    }
  }
}

TEST_CASE("interpolation transfers to program entailment") {
  testgen::Rng rng(402);
  const std::vector<std::string> atoms{"a", "b", "c"};
  const std::vector<std::string> query_atoms{"b", "c", "d"};
  int done = 0;
  while (done < 60) {
    Program p = testgen::random_coherent_program(rng, atoms, 4);
    FormulaPtr premise = Formula::conjunction_of(program_to_theory(p));
    FormulaPtr query = testgen::random_formula(rng, query_atoms, 2);
    if (!entails({premise}, query, EntailmentMode::cw)) {
      continue;
    }
    InterpolationResult r = interpolant_cw(premise, query);
    CHECK(verify_interpolant(premise, query, r).ok);
    ++done;
  }
}

TEST_CASE("vocabulary and cap errors") {
  const Program p = parse_program("a :- b.");
  CHECK_THROWS_AS(answer_sets(p, Vocabulary({"a"})), vocabulary_error);
  CHECK_THROWS_AS(gl_answer_sets_oracle(p, Vocabulary({"a"})),
                  vocabulary_error);
  Limits tiny{1};
  CHECK_THROWS_AS(answer_sets(p, vocabulary_of(p), tiny), cap_error);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include <eqlog/eqlog.hpp>

#include "support/classical.hpp"
#include "support/generators.hpp"

using namespace eqlog;

namespace {

Interpretation interp(const Vocabulary& v, std::vector<std::string> here,
                      std::vector<std::string> there) {
  return Interpretation::from_atoms(v, here, there);
}

}  // namespace

TEST_CASE("satisfaction at worlds") {
  const Vocabulary v({"a"});
  const Interpretation m = interp(v, {}, {"a"});

  CHECK(satisfies_at(m, World::here, *parse_formula("--a")));
  CHECK_FALSE(satisfies_at(m, World::here, *parse_formula("a")));
  CHECK(satisfies_at(m, World::there, *parse_formula("a")));
  // Negation demands failure at every later world.
  CHECK_FALSE(satisfies_at(m, World::here, *parse_formula("-a")));
  CHECK_FALSE(satisfies_at(m, World::there, *parse_formula("-a")));
}

TEST_CASE("satisfies requires both worlds") {
  const Vocabulary v({"a"});
  const Interpretation m = interp(v, {}, {"a"});
  CHECK(satisfies(m, *parse_formula("--a")));
  CHECK_FALSE(satisfies(m, *parse_formula("a")));
  CHECK_FALSE(satisfies(m, *parse_formula("a | -a")));
}

TEST_CASE("the characteristic axiom holds in every interpretation") {
  testgen::Rng rng(42);
  const std::vector<std::string> atoms{"a", "b", "c"};
  for (int i = 0; i < 100; ++i) {
    FormulaPtr alpha = testgen::random_formula(rng, atoms, 3);
    FormulaPtr beta = testgen::random_formula(rng, atoms, 3);
    FormulaPtr axiom = Formula::disjunction(
        alpha, Formula::disjunction(Formula::negation(beta),
                                    Formula::implication(alpha, beta)));
    const Vocabulary v = vocabulary_of(*axiom).unioned(Vocabulary({"a"}));
    for (const Interpretation& m : enumerate_interpretations(v)) {
      CHECK(satisfies(m, *axiom));
    }
  }
}

TEST_CASE("persistence: truth here implies truth there") {
  testgen::Rng rng(43);
  const std::vector<std::string> atoms{"a", "b", "c"};
  const Vocabulary v({"a", "b", "c"});
  for (int i = 0; i < 200; ++i) {
    FormulaPtr f = testgen::random_formula(rng, atoms, 4);
    for (const Interpretation& m : enumerate_interpretations(v)) {
      if (satisfies_at(m, World::here, *f)) {
        CHECK(satisfies_at(m, World::there, *f));
      }
    }
  }
}

TEST_CASE("total interpretations collapse to classical truth") {
  testgen::Rng rng(44);
  const std::vector<std::string> atoms{"a", "b", "c"};
  const Vocabulary v({"a", "b", "c"});
  for (int i = 0; i < 300; ++i) {
    FormulaPtr f = testgen::random_formula(rng, atoms, 4);
    for (const Interpretation& m : enumerate_interpretations(v)) {
      if (!m.is_total()) {
        continue;
      }
      std::set<std::string> truth;
      for (const auto& a : m.there_atoms()) {
        truth.insert(a);
      }
      CHECK(satisfies(m, *f) == testoracle::classical_true(*f, truth));
    }
  }
}

TEST_CASE("negation desugars to implication into falsum") {
  testgen::Rng rng(45);
  const std::vector<std::string> atoms{"a", "b"};
  const Vocabulary v({"a", "b"});
  for (int i = 0; i < 200; ++i) {
    FormulaPtr f = testgen::random_formula(rng, atoms, 3);
    FormulaPtr direct = Formula::negation(f);
    FormulaPtr sugar = Formula::implication(f, Formula::falsum());
    for (const Interpretation& m : enumerate_interpretations(v)) {
      CHECK(satisfies_at(m, World::here, *direct) ==
            satisfies_at(m, World::here, *sugar));
      CHECK(satisfies_at(m, World::there, *direct) ==
            satisfies_at(m, World::there, *sugar));
    }
  }
}

TEST_CASE("enumeration counts and determinism") {
  std::size_t count = 0;
  for ([[maybe_unused]] const Interpretation& m :
       enumerate_interpretations(Vocabulary())) {
    ++count;
  }
  CHECK(count == 1);

  count = 0;
  for ([[maybe_unused]] const Interpretation& m :
       enumerate_interpretations(Vocabulary({"a"}))) {
    ++count;
  }
  CHECK(count == 3);

  std::vector<std::string> order;
  for (const Interpretation& m :
       enumerate_interpretations(Vocabulary({"a", "b"}))) {
    order.push_back(to_json(m));
  }
  CHECK(order.size() == 9);
  std::vector<std::string> again;
  for (const Interpretation& m :
       enumerate_interpretations(Vocabulary({"a", "b"}))) {
    again.push_back(to_json(m));
  }
  CHECK(order == again);
  CHECK(order.front() == R"({"here":[],"there":[]})");
}

TEST_CASE("enumeration cap") {
  std::vector<std::string> names;
  for (char c = 'a'; c <= 'q'; ++c) {  // 17 atoms
    names.push_back(std::string(1, c));
  }
  CHECK_THROWS_AS(enumerate_interpretations(Vocabulary(names)), cap_error);
  CHECK_THROWS_AS(models_of({}, Vocabulary(names)), cap_error);
  // The cap is adjustable.
  Limits raised{20};
  CHECK_NOTHROW(enumerate_interpretations(Vocabulary(names), raised));
  Limits lowered{2};
  CHECK_THROWS_AS(consequence({parse_formula("a & b & c")},
                              parse_formula("a"), lowered),
                  cap_error);
}

TEST_CASE("models_of examples") {
  const Vocabulary v({"a"});
  ModelSet excluded_middle = models_of({parse_formula("a | -a")}, v);
  REQUIRE(excluded_middle.size() == 2);
  CHECK(excluded_middle.contains(interp(v, {}, {})));
  CHECK(excluded_middle.contains(interp(v, {"a"}, {"a"})));

  CHECK(models_of({}, v).size() == 3);
  CHECK(models_of({Formula::falsum()}, v).empty());
  CHECK_THROWS_AS(models_of({parse_formula("a & b")}, v), vocabulary_error);
}

TEST_CASE("consequence examples") {
  CHECK(consequence({}, parse_formula("a | (-b | (a -> b))")));
  CHECK(consequence({parse_formula("a")}, parse_formula("--a")));
  CHECK_FALSE(consequence({parse_formula("--a")}, parse_formula("a")));
}

TEST_CASE("consequence is language invariant") {
  testgen::Rng rng(46);
  const std::vector<std::string> atoms{"a", "b"};
  for (int i = 0; i < 100; ++i) {
    Theory t = testgen::random_theory(rng, atoms, 2, 3);
    FormulaPtr f = testgen::random_formula(rng, atoms, 3);
    const bool narrow = consequence(t, f);
    CHECK(narrow == consequence(t, f, Vocabulary({"x9", "y9"})));
  }
}

TEST_CASE("equivalence examples") {
  testgen::Rng rng(47);
  const std::vector<std::string> atoms{"a", "b"};
  for (int i = 0; i < 100; ++i) {
    FormulaPtr f = testgen::random_formula(rng, atoms, 3);
    // Triple negation collapses to single negation.
    CHECK(equivalent({Formula::negation(f)},
                     {Formula::negation(Formula::negation(
                         Formula::negation(f)))}));
  }
  CHECK_FALSE(equivalent({parse_formula("a | -a")}, {}));
  // Material implication is weaker than the conditional here.
  CHECK_FALSE(equivalent({parse_formula("p -> q")}, {parse_formula("-p | q")}));
  CHECK(consequence({parse_formula("-p | q")}, parse_formula("p -> q")));
}

TEST_CASE("reduct examples and model preservation") {
  const Vocabulary big({"a", "b"});
  const Vocabulary small({"a"});
  CHECK(reduct(interp(big, {"a"}, {"a", "b"}), small) ==
        interp(small, {"a"}, {"a"}));
  CHECK(reduct(interp(big, {}, {"b"}), small) == interp(small, {}, {}));
  CHECK_THROWS_AS(reduct(interp(small, {}, {}), big), vocabulary_error);

  // Models of a theory reduce to models of the same theory.
  testgen::Rng rng(48);
  const std::vector<std::string> atoms{"a", "b"};
  for (int i = 0; i < 50; ++i) {
    Theory t = testgen::random_theory(rng, atoms, 2, 3);
    const Vocabulary tv = vocabulary_of(t);
    const ModelSet wide_models = models_of(t, big);
    for (const Interpretation& m : wide_models.members()) {
      CHECK(satisfies(reduct(m, tv), t));
    }
  }
}

TEST_CASE("expansions") {
  const Vocabulary empty;
  const Vocabulary q({"q"});
  std::size_t count = 0;
  for ([[maybe_unused]] const Interpretation& e :
       expansions_to(interp(empty, {}, {}), q)) {
    ++count;
  }
  CHECK(count == 3);

  const Vocabulary a({"a"});
  const Interpretation total_a = interp(a, {"a"}, {"a"});
  count = 0;
  for (const Interpretation& e : expansions_to(total_a, a)) {
    CHECK(e == total_a);
    ++count;
  }
  CHECK(count == 1);

  // Expansion then reduct is the identity.
  const Vocabulary ab({"a", "b"});
  for (const Interpretation& m : enumerate_interpretations(a)) {
    for (const Interpretation& e : expansions_to(m, ab)) {
      CHECK(reduct(e, a) == m);
    }
  }
  CHECK_THROWS_AS(expansions_to(interp(ab, {}, {}), a), vocabulary_error);
}

TEST_CASE("interpretation invariants") {
  const Vocabulary v({"a", "b"});
  CHECK_THROWS_AS(Interpretation(v, 0b01, 0b00), precondition_error);
  CHECK_THROWS_AS(Interpretation(v, 0, 0b100), vocabulary_error);
  CHECK_THROWS_AS(Interpretation::from_atoms(v, {{"z"}}, {{"z"}}),
                  vocabulary_error);
  const Interpretation m = interp(v, {}, {"b"});
  CHECK(m.total_companion() == interp(v, {"b"}, {"b"}));
  CHECK(m.there_contains("b"));
  CHECK_FALSE(m.here_contains("b"));
}

TEST_CASE("interpretation JSON form") {
  const Vocabulary v({"a", "b"});
  CHECK(to_json(interp(v, {"a"}, {"a", "b"})) ==
        R"({"here":["a"],"there":["a","b"]})");
  ModelSet s(v, {interp(v, {}, {}), interp(v, {"a"}, {"a"})});
  CHECK(to_json(s) ==
        R"({"vocab":["a","b"],"models":[{"here":[],"there":[]},{"here":["a"],"there":["a"]}]})");
}

#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "eqlog/vocabulary.hpp"

namespace eqlog {

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// A theory is a finite list of formulas; it may be empty.
using Theory = std::vector<FormulaPtr>;

enum class Connective { atom, verum, falsum, neg, conj, disj, impl };

// Immutable propositional formula over &, |, ->, -, _|_, #t and atoms.
// -f is kept as its own node but behaves exactly like f -> _|_ under
// every semantic operation.
class Formula {
 public:
  Connective kind() const { return kind_; }

  const std::string& atom_name() const;  // kind() == atom
  const FormulaPtr& child() const;       // kind() == neg
  const FormulaPtr& left() const;        // binary connectives
  const FormulaPtr& right() const;

  static FormulaPtr atom(std::string name);
  static FormulaPtr verum();
  static FormulaPtr falsum();
  static FormulaPtr negation(FormulaPtr f);
  static FormulaPtr conjunction(FormulaPtr l, FormulaPtr r);
  static FormulaPtr disjunction(FormulaPtr l, FormulaPtr r);
  static FormulaPtr implication(FormulaPtr l, FormulaPtr r);

  // Left-associated folds; the empty conjunction is #t, the empty
  // disjunction is _|_.
  static FormulaPtr conjunction_of(std::span<const FormulaPtr> fs);
  static FormulaPtr disjunction_of(std::span<const FormulaPtr> fs);

 private:
  Formula(Connective kind, std::string name, FormulaPtr l, FormulaPtr r);

  Connective kind_;
  std::string name_;
  FormulaPtr left_;
  FormulaPtr right_;
};

bool structurally_equal(const Formula& a, const Formula& b);
bool structurally_equal(const FormulaPtr& a, const FormulaPtr& b);

// Minimal-parentheses text form; parse_formula(render_formula(f)) is
// structurally equal to f.
std::string render_formula(const Formula& f);
std::string render_formula(const FormulaPtr& f);

Vocabulary vocabulary_of(const Formula& f);
Vocabulary vocabulary_of(const Theory& t);

// Drops syntactically duplicate disjuncts from the top-level
// disjunction chain. Purely cosmetic; never changes the models.
FormulaPtr dedupe_disjuncts(const FormulaPtr& f);

}  // namespace eqlog

#include "eqlog/formula.hpp"

#include <cassert>
#include <set>
#include <utility>

#include "eqlog/error.hpp"

namespace eqlog {

Formula::Formula(Connective kind, std::string name, FormulaPtr l, FormulaPtr r)
    : kind_(kind), name_(std::move(name)), left_(std::move(l)),
      right_(std::move(r)) {}

const std::string& Formula::atom_name() const {
  assert(kind_ == Connective::atom);
  return name_;
}

const FormulaPtr& Formula::child() const {
  assert(kind_ == Connective::neg);
  return left_;
}

const FormulaPtr& Formula::left() const {
  assert(kind_ == Connective::conj || kind_ == Connective::disj ||
         kind_ == Connective::impl);
  return left_;
}

const FormulaPtr& Formula::right() const {
  assert(kind_ == Connective::conj || kind_ == Connective::disj ||
         kind_ == Connective::impl);
  return right_;
}

FormulaPtr Formula::atom(std::string name) {
  if (!is_valid_atom_name(name)) {
    throw error("invalid atom name '" + name + "'");
  }
  return FormulaPtr(
      new Formula(Connective::atom, std::move(name), nullptr, nullptr));
}

FormulaPtr Formula::verum() {
  static const FormulaPtr instance(
      new Formula(Connective::verum, "", nullptr, nullptr));
  return instance;
}

FormulaPtr Formula::falsum() {
  static const FormulaPtr instance(
      new Formula(Connective::falsum, "", nullptr, nullptr));
  return instance;
}

FormulaPtr Formula::negation(FormulaPtr f) {
  assert(f != nullptr);
  return FormulaPtr(
      new Formula(Connective::neg, "", std::move(f), nullptr));
}

FormulaPtr Formula::conjunction(FormulaPtr l, FormulaPtr r) {
  assert(l != nullptr && r != nullptr);
  return FormulaPtr(
      new Formula(Connective::conj, "", std::move(l), std::move(r)));
}

FormulaPtr Formula::disjunction(FormulaPtr l, FormulaPtr r) {
  assert(l != nullptr && r != nullptr);
  return FormulaPtr(
      new Formula(Connective::disj, "", std::move(l), std::move(r)));
}

FormulaPtr Formula::implication(FormulaPtr l, FormulaPtr r) {
  assert(l != nullptr && r != nullptr);
  return FormulaPtr(
      new Formula(Connective::impl, "", std::move(l), std::move(r)));
}

FormulaPtr Formula::conjunction_of(std::span<const FormulaPtr> fs) {
  if (fs.empty()) {
    return verum();
  }
  FormulaPtr out = fs[0];
  for (std::size_t i = 1; i < fs.size(); ++i) {
    out = conjunction(std::move(out), fs[i]);
  }
  return out;
}

FormulaPtr Formula::disjunction_of(std::span<const FormulaPtr> fs) {
  if (fs.empty()) {
    return falsum();
  }
  FormulaPtr out = fs[0];
  for (std::size_t i = 1; i < fs.size(); ++i) {
    out = disjunction(std::move(out), fs[i]);
  }
  return out;
}

bool structurally_equal(const Formula& a, const Formula& b) {
  if (&a == &b) {
    return true;
  }
  if (a.kind() != b.kind()) {
    return false;
  }
  switch (a.kind()) {
    case Connective::atom:
      return a.atom_name() == b.atom_name();
    case Connective::verum:
    case Connective::falsum:
      return true;
    case Connective::neg:
      return structurally_equal(*a.child(), *b.child());
    case Connective::conj:
    case Connective::disj:
    case Connective::impl:
      return structurally_equal(*a.left(), *b.left()) &&
             structurally_equal(*a.right(), *b.right());
  }
  return false;
}

bool structurally_equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a == b) {
    return true;
  }
  if (a == nullptr || b == nullptr) {
    return false;
  }
  return structurally_equal(*a, *b);
}

namespace {

// Precedence levels: -> is 0, | is 1, & is 2, - is 3, primaries are 4.
int precedence(Connective k) {
  switch (k) {
    case Connective::impl:
      return 0;
    case Connective::disj:
      return 1;
    case Connective::conj:
      return 2;
    case Connective::neg:
      return 3;
    default:
      return 4;
  }
}

void render_into(const Formula& f, int min_prec, std::string& out) {
  const bool parens = precedence(f.kind()) < min_prec;
  if (parens) {
    out += '(';
  }
  switch (f.kind()) {
    case Connective::atom:
      out += f.atom_name();
      break;
    case Connective::verum:
      out += "#t";
      break;
    case Connective::falsum:
      out += "_|_";
      break;
    case Connective::neg:
      out += '-';
      render_into(*f.child(), 3, out);
      break;
    case Connective::conj:
      render_into(*f.left(), 2, out);
      out += " & ";
      render_into(*f.right(), 3, out);
      break;
    case Connective::disj:
      render_into(*f.left(), 1, out);
      out += " | ";
      render_into(*f.right(), 2, out);
      break;
    case Connective::impl:
      // Right-associative: the right side may be another implication.
      render_into(*f.left(), 1, out);
      out += " -> ";
      render_into(*f.right(), 0, out);
      break;
  }
  if (parens) {
    out += ')';
  }
}

void collect_atoms(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Connective::atom:
      out.insert(f.atom_name());
      break;
    case Connective::verum:
    case Connective::falsum:
      break;
    case Connective::neg:
      collect_atoms(*f.child(), out);
      break;
    case Connective::conj:
    case Connective::disj:
    case Connective::impl:
      collect_atoms(*f.left(), out);
      collect_atoms(*f.right(), out);
      break;
  }
}

void flatten_disjuncts(const FormulaPtr& f, std::vector<FormulaPtr>& out) {
  if (f->kind() == Connective::disj) {
    flatten_disjuncts(f->left(), out);
    flatten_disjuncts(f->right(), out);
  } else {
    out.push_back(f);
  }
}

}  // namespace

std::string render_formula(const Formula& f) {
  std::string out;
  render_into(f, 0, out);
  return out;
}

std::string render_formula(const FormulaPtr& f) {
  assert(f != nullptr);
  return render_formula(*f);
}

Vocabulary vocabulary_of(const Formula& f) {
  std::set<std::string> atoms;
  collect_atoms(f, atoms);
  return Vocabulary(std::vector<std::string>(atoms.begin(), atoms.end()));
}

Vocabulary vocabulary_of(const Theory& t) {
  std::set<std::string> atoms;
  for (const auto& f : t) {
    collect_atoms(*f, atoms);
  }
  return Vocabulary(std::vector<std::string>(atoms.begin(), atoms.end()));
}

FormulaPtr dedupe_disjuncts(const FormulaPtr& f) {
  if (f == nullptr || f->kind() != Connective::disj) {
    return f;
  }
  std::vector<FormulaPtr> disjuncts;
  flatten_disjuncts(f, disjuncts);
  std::vector<FormulaPtr> kept;
  for (const auto& d : disjuncts) {
    bool seen = false;
    for (const auto& k : kept) {
      if (structurally_equal(k, d)) {
        seen = true;
        break;
      }
    }
    if (!seen) {
      kept.push_back(d);
    }
  }
  return Formula::disjunction_of(kept);
}

}  // namespace eqlog

#pragma once

#include "eqlog/equilibrium.hpp"

namespace eqlog {

// Model set closed under total expansion: whenever <H,T> is a member,
// <T,T> is too. Every set of reducts of a theory's models has this
// property (truth at the there-world only depends on T), and it is
// exactly what makes a model set definable by a formula.
class ClosedModelSet {
 public:
  explicit ClosedModelSet(ModelSet base);

  const ModelSet& base() const { return base_; }

 private:
  ModelSet base_;
};

// Formula over v whose only model over v is <T,T>: the conjunction of
// the atoms in T and the negated disjunction of the atoms outside T.
// Empty conjunctions render as #t, empty disjunctions as _|_ (the
// -_|_ conjunct is dropped).
FormulaPtr total_char_formula(std::span<const std::string> there,
                              const Vocabulary& v);

// Formula over v whose models over v are exactly the equilibrium models
// of t: the disjunction of the total characteristic formulas of those
// models. Requires a coherent theory, so the disjunction is never empty.
FormulaPtr equilibrium_defining_formula(const Theory& t, const Vocabulary& v,
                                        const Limits& limits = {});

// Formula over m's vocabulary whose models are exactly {<H,T>, <T,T>},
// the smallest definable set containing m.
FormulaPtr pair_char_formula(const Interpretation& m);

// Disjunction of pair characteristic formulas; models_of(result) equals
// the given set exactly. The empty set yields _|_.
FormulaPtr define_set(const ClosedModelSet& s);

// The strongest consequence of t expressible over the sub-vocabulary w:
// defines the set of w-reducts of the models of t. Every w-formula
// entailed by t is entailed by the result.
FormulaPtr project(const Theory& t, const Vocabulary& w,
                   const Limits& limits = {});

}  // namespace eqlog

#include "eqlog/definability.hpp"

#include <string>
#include <vector>

#include "eqlog/error.hpp"

namespace eqlog {

ClosedModelSet::ClosedModelSet(ModelSet base) : base_(std::move(base)) {
  for (const auto& m : base_.members()) {
    if (!base_.contains(m.total_companion())) {
      throw precondition_error(
          "model set is not closed under total expansion: contains <H,T> "
          "without <T,T>");
    }
  }
}

FormulaPtr total_char_formula(std::span<const std::string> there,
                              const Vocabulary& v) {
  for (const auto& a : there) {
    if (!v.contains(a)) {
      throw vocabulary_error("atom '" + a + "' is outside the vocabulary");
    }
  }
  const Vocabulary t_vocab(std::vector<std::string>(there.begin(), there.end()));
  std::vector<FormulaPtr> positives;
  std::vector<FormulaPtr> complement;
  for (const auto& a : v) {
    if (t_vocab.contains(a)) {
      positives.push_back(Formula::atom(a));
    } else {
      complement.push_back(Formula::atom(a));
    }
  }
  std::vector<FormulaPtr> parts = std::move(positives);
  if (!complement.empty()) {
    parts.push_back(Formula::negation(Formula::disjunction_of(complement)));
  }
  return Formula::conjunction_of(parts);
}

FormulaPtr equilibrium_defining_formula(const Theory& t, const Vocabulary& v,
                                        const Limits& limits) {
  EquilibriumReport rep = equilibrium_models(t, v, limits);
  if (rep.used_fallback) {
    throw precondition_error(
        "theory has no equilibrium models over the given vocabulary");
  }
  std::vector<FormulaPtr> disjuncts;
  disjuncts.reserve(rep.models.size());
  for (const auto& m : rep.models.members()) {
    disjuncts.push_back(total_char_formula(m.there_atoms(), v));
  }
  return Formula::disjunction_of(disjuncts);
}

FormulaPtr pair_char_formula(const Interpretation& m) {
  const Vocabulary& v = m.vocab();
  std::vector<FormulaPtr> parts;
  std::vector<std::string> between;  // T minus H
  for (std::size_t i = 0; i < v.size(); ++i) {
    const bool in_here = (m.here_bits() >> i) & 1;
    const bool in_there = (m.there_bits() >> i) & 1;
    if (in_here) {
      parts.push_back(Formula::atom(v.atom(i)));
    } else if (in_there) {
      between.push_back(v.atom(i));
    }
  }
  for (const auto& a : between) {
    parts.push_back(Formula::negation(Formula::negation(Formula::atom(a))));
  }
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (((m.there_bits() >> i) & 1) == 0) {
      parts.push_back(Formula::negation(Formula::atom(v.atom(i))));
    }
  }
  // The implications between the undecided atoms force H to take them
  // all or none, so the only models are <H,T> itself and <T,T>.
  for (const auto& a : between) {
    for (const auto& b : between) {
      if (a != b) {
        parts.push_back(
            Formula::implication(Formula::atom(a), Formula::atom(b)));
      }
    }
  }
  return Formula::conjunction_of(parts);
}

FormulaPtr define_set(const ClosedModelSet& s) {
  std::vector<FormulaPtr> disjuncts;
  disjuncts.reserve(s.base().size());
  for (const auto& m : s.base().members()) {
    disjuncts.push_back(pair_char_formula(m));
  }
  return Formula::disjunction_of(disjuncts);
}

FormulaPtr project(const Theory& t, const Vocabulary& w, const Limits& limits) {
  const Vocabulary tv = vocabulary_of(t);
  if (!tv.includes(w)) {
    throw vocabulary_error("projection target is not a sub-vocabulary");
  }
  const ModelSet models = models_of(t, tv, limits);
  std::vector<Interpretation> reducts;
  reducts.reserve(models.size());
  for (const auto& m : models.members()) {
    reducts.push_back(reduct(m, w));
  }
  return define_set(ClosedModelSet(ModelSet(w, std::move(reducts))));
}

}  // namespace eqlog

#include "eqlog/interpolation.hpp"

#include <string>
#include <utility>
#include <vector>

#include "eqlog/error.hpp"

namespace eqlog {

namespace {

FormulaPtr with_negated_atoms(const FormulaPtr& g,
                              const std::vector<std::string>& atoms) {
  std::vector<FormulaPtr> parts{g};
  for (const auto& a : atoms) {
    parts.push_back(Formula::negation(Formula::atom(a)));
  }
  return Formula::conjunction_of(parts);
}

// Constructions are theorem-backed, so a failed post-check is a bug in
// the construction, never a property of the input.
void require_internal(bool ok, const std::string& what) {
  if (!ok) {
    throw internal_error("constructed interpolant failed verification: " +
                         what);
  }
}

void check_vocab_containment(const FormulaPtr& g, const Vocabulary& shared) {
  require_internal(shared.includes(vocabulary_of(*g)),
                   "interpolant mentions atoms outside the shared vocabulary");
}

}  // namespace

FormulaPtr ht_interpolant(const FormulaPtr& a, const FormulaPtr& b,
                          const Limits& limits) {
  const Theory premise{a};
  if (!consequence(premise, b, limits)) {
    throw precondition_error(
        "interpolation requires the consequence to hold, but '" +
        render_formula(a) + "' does not entail '" + render_formula(b) + "'");
  }
  const Vocabulary shared = vocabulary_of(*a).intersected(vocabulary_of(*b));
  FormulaPtr g = project(premise, shared, limits);
  check_vocab_containment(g, shared);
  require_internal(consequence(premise, g, limits),
                   "premise does not entail the interpolant");
  require_internal(consequence({g}, b, limits),
                   "interpolant does not entail the conclusion");
  return g;
}

InterpolationResult interpolant_cw(const FormulaPtr& a, const FormulaPtr& b,
                                   const Limits& limits) {
  const Vocabulary va = vocabulary_of(*a);
  const Vocabulary vb = vocabulary_of(*b);
  InterpolationResult r;
  r.mode = EntailmentMode::cw;
  r.shared_vocab = va.intersected(vb);
  r.fresh_query_atoms = vb.minus(va).atoms();

  const Theory premise{a};
  const EntailmentResult pre = entails_ex(premise, b, EntailmentMode::cw,
                                          limits);
  if (!pre.holds) {
    throw precondition_error("'" + render_formula(a) +
                             "' does not cw-entail '" + render_formula(b) +
                             "'");
  }

  if (pre.used_fallback) {
    // No equilibrium models, so the hypothesis degenerates to plain
    // consequence and a Craig interpolant suffices.
    r.interpolant = ht_interpolant(a, b, limits);
    r.used_fallback = true;
  } else {
    // The defining theory of the equilibrium models of `a` over the
    // joint vocabulary: fresh query atoms pinned false, conjoined with
    // the formula defining the equilibrium models over V(a).
    const FormulaPtr defining = with_negated_atoms(
        equilibrium_defining_formula(premise, va, limits),
        r.fresh_query_atoms);
    r.interpolant = project({defining}, r.shared_vocab, limits);
  }

  check_vocab_containment(r.interpolant, r.shared_vocab);
  require_internal(
      entails({a}, r.interpolant, EntailmentMode::cw, limits),
      "premise does not cw-entail the interpolant");
  require_internal(
      consequence({with_negated_atoms(r.interpolant, r.fresh_query_atoms)}, b,
                  limits),
      "interpolant with fresh atoms negated does not entail the conclusion");
  require_internal(entails({r.interpolant}, b, EntailmentMode::cw, limits),
                   "interpolant does not cw-entail the conclusion");
  return r;
}

InterpolationResult interpolant_cw_subvocab(const FormulaPtr& a,
                                            const FormulaPtr& b,
                                            const Limits& limits) {
  const Vocabulary va = vocabulary_of(*a);
  const Vocabulary vb = vocabulary_of(*b);
  if (!va.includes(vb)) {
    throw vocabulary_error(
        "the conclusion's vocabulary is not contained in the premise's");
  }
  InterpolationResult r = interpolant_cw(a, b, limits);
  // With no fresh query atoms the second condition strengthens to plain
  // consequence.
  require_internal(r.fresh_query_atoms.empty(), "fresh atoms in a sub-vocabulary instance");
  require_internal(consequence({r.interpolant}, b, limits),
                   "interpolant does not entail the conclusion");
  return r;
}

InterpolationResult interpolant_ow(const FormulaPtr& a, const FormulaPtr& b,
                                   const Limits& limits) {
  const Vocabulary va = vocabulary_of(*a);
  const Vocabulary vb = vocabulary_of(*b);
  InterpolationResult r;
  r.mode = EntailmentMode::ow;
  r.shared_vocab = va.intersected(vb);
  r.fresh_query_atoms = vb.minus(va).atoms();

  const Theory premise{a};
  const EntailmentResult pre = entails_ex(premise, b, EntailmentMode::ow,
                                          limits);
  if (!pre.holds) {
    throw precondition_error("'" + render_formula(a) +
                             "' does not ow-entail '" + render_formula(b) +
                             "'");
  }

  if (pre.used_fallback) {
    r.interpolant = ht_interpolant(a, b, limits);
    r.used_fallback = true;
  } else {
    const FormulaPtr defining =
        equilibrium_defining_formula(premise, va, limits);
    r.interpolant = project({defining}, r.shared_vocab, limits);
  }

  check_vocab_containment(r.interpolant, r.shared_vocab);
  require_internal(entails({a}, r.interpolant, EntailmentMode::ow, limits),
                   "premise does not ow-entail the interpolant");
  require_internal(consequence({r.interpolant}, b, limits),
                   "interpolant does not entail the conclusion");
  return r;
}

VerifyReport verify_interpolant(const FormulaPtr& a, const FormulaPtr& b,
                                const InterpolationResult& r,
                                const Limits& limits) {
  if (r.interpolant == nullptr) {
    return {false, "missing interpolant"};
  }
  const Vocabulary shared = vocabulary_of(*a).intersected(vocabulary_of(*b));
  const Vocabulary vg = vocabulary_of(*r.interpolant);
  if (!shared.includes(vg)) {
    for (const auto& atom : vg) {
      if (!shared.contains(atom)) {
        return {false, "vocabulary violation: atom '" + atom +
                           "' is outside the shared vocabulary"};
      }
    }
  }
  bool first = false;
  bool second = false;
  switch (r.mode) {
    case EntailmentMode::base:
      first = consequence({a}, r.interpolant, limits);
      second = consequence({r.interpolant}, b, limits);
      break;
    case EntailmentMode::cw:
      first = entails({a}, r.interpolant, EntailmentMode::cw, limits);
      second = entails({r.interpolant}, b, EntailmentMode::cw, limits);
      break;
    case EntailmentMode::ow:
      first = entails({a}, r.interpolant, EntailmentMode::ow, limits);
      second = consequence({r.interpolant}, b, limits);
      break;
  }
  if (!first) {
    return {false, "first entailment failed: premise does not entail the "
                   "interpolant under mode " +
                       std::string(to_string(r.mode))};
  }
  if (!second) {
    return {false, "second entailment failed: interpolant does not entail "
                   "the conclusion under mode " +
                       std::string(to_string(r.mode))};
  }
  return {true, ""};
}

}  // namespace eqlog

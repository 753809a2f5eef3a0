#include "eqlog/equilibrium.hpp"

#include <cstdint>

#include "eqlog/error.hpp"
#include "eval.hpp"

namespace eqlog {

const char* to_string(EntailmentMode mode) {
  switch (mode) {
    case EntailmentMode::cw:
      return "cw";
    case EntailmentMode::ow:
      return "ow";
    case EntailmentMode::base:
      return "base";
  }
  return "?";
}

std::optional<EntailmentMode> entailment_mode_from_string(std::string_view s) {
  if (s == "cw") {
    return EntailmentMode::cw;
  }
  if (s == "ow") {
    return EntailmentMode::ow;
  }
  if (s == "base") {
    return EntailmentMode::base;
  }
  return std::nullopt;
}

bool order_lt(const Interpretation& m1, const Interpretation& m2) {
  if (!(m1.vocab() == m2.vocab())) {
    throw vocabulary_error("interpretations over different vocabularies");
  }
  return m1.there_bits() == m2.there_bits() &&
         m1.here_bits() != m2.here_bits() &&
         (m1.here_bits() & ~m2.here_bits()) == 0;
}

EquilibriumReport equilibrium_models(const Theory& t, const Vocabulary& v,
                                     const Limits& limits) {
  if (!v.includes(vocabulary_of(t))) {
    throw vocabulary_error(
        "vocabulary too small: the theory mentions atoms outside it");
  }
  if (v.size() > limits.max_atoms) {
    throw cap_error("vocabulary of " + std::to_string(v.size()) +
                    " atoms exceeds the enumeration cap of " +
                    std::to_string(limits.max_atoms) +
                    " (raise Limits::max_atoms / --max-atoms)");
  }
  detail::Evaluator ev(t, v);
  std::vector<std::pair<bool, bool>> scratch;
  std::vector<Interpretation> eq;
  const std::uint64_t mask =
      v.size() >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << v.size()) - 1;
  for (std::uint64_t there = 0;; ++there) {
    if (ev.all_true(there, there, scratch)) {
      // Search for a countermodel witness among the proper subsets of T
      // only; any <H,T> model with H smaller than T disqualifies <T,T>.
      bool minimal = true;
      for (std::uint64_t here = 0; here != there;
           here = (here - there) & there) {
        if (ev.all_true(here, there, scratch)) {
          minimal = false;
          break;
        }
      }
      if (minimal) {
        eq.emplace_back(v, there, there);
      }
    }
    if (there == mask) {
      break;
    }
  }
  const bool fallback = t.empty() || eq.empty();
  return EquilibriumReport{v, ModelSet(v, std::move(eq)), fallback};
}

bool is_coherent(const Theory& t, const Vocabulary& v, const Limits& limits) {
  return !equilibrium_models(t, v, limits).used_fallback;
}

EntailmentResult entails_ex(const Theory& t, const FormulaPtr& f,
                            EntailmentMode mode, const Limits& limits) {
  return entails_ex(t, f, mode, Vocabulary(), limits);
}

EntailmentResult entails_ex(const Theory& t, const FormulaPtr& f,
                            EntailmentMode mode, const Vocabulary& ambient,
                            const Limits& limits) {
  const Vocabulary query_vocab = vocabulary_of(*f);
  const Vocabulary theory_vocab = vocabulary_of(t).unioned(ambient);
  const Vocabulary joint = theory_vocab.unioned(query_vocab);

  if (mode == EntailmentMode::base) {
    return {consequence(t, f, ambient, limits), false, mode};
  }

  if (mode == EntailmentMode::cw) {
    EquilibriumReport rep = equilibrium_models(t, joint, limits);
    if (rep.used_fallback) {
      return {consequence(t, f, ambient, limits), true, mode};
    }
    detail::Evaluator ev(*f, joint);
    std::vector<std::pair<bool, bool>> scratch;
    for (const Interpretation& m : rep.models.members()) {
      if (!ev.all_true(m.here_bits(), m.there_bits(), scratch)) {
        return {false, false, mode};
      }
    }
    return {true, false, mode};
  }

  // ow: equilibrium models over the theory's own vocabulary, expanded
  // arbitrarily to the joint vocabulary.
  EquilibriumReport rep = equilibrium_models(t, theory_vocab, limits);
  if (rep.used_fallback) {
    return {consequence(t, f, ambient, limits), true, mode};
  }
  detail::Evaluator ev(*f, joint);
  std::vector<std::pair<bool, bool>> scratch;
  for (const Interpretation& m : rep.models.members()) {
    for (const Interpretation& e : expansions_to(m, joint, limits)) {
      if (!ev.all_true(e.here_bits(), e.there_bits(), scratch)) {
        return {false, false, mode};
      }
    }
  }
  return {true, false, mode};
}

bool entails(const Theory& t, const FormulaPtr& f, EntailmentMode mode,
             const Limits& limits) {
  return entails_ex(t, f, mode, limits).holds;
}

}  // namespace eqlog

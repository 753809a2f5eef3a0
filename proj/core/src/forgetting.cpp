#include "eqlog/forgetting.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "eqlog/error.hpp"

namespace eqlog {

namespace {

std::vector<AnswerSet> coherent_answer_sets(const Program& p,
                                            const Vocabulary& v,
                                            const Limits& limits) {
  std::vector<AnswerSet> as = answer_sets(p, v, limits);
  if (as.empty()) {
    throw precondition_error(
        "program is incoherent (no answer sets); forgetting is defined for "
        "coherent programs only");
  }
  return as;
}

// minimal_sets are kept lexicographic by atom list, which differs from
// the canonical answer-set order (ascending bit patterns) once three or
// more atoms are involved.
std::vector<AnswerSet> lex_sorted(std::vector<AnswerSet> sets) {
  std::sort(sets.begin(), sets.end());
  return sets;
}

// Keep the minimal elements under set inclusion; inputs are sorted atom
// lists, so std::includes decides subset-hood.
std::vector<AnswerSet> minimal_antichain(std::vector<AnswerSet> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<AnswerSet> out;
  for (const auto& candidate : sets) {
    bool dominated = false;
    for (const auto& other : sets) {
      if (other != candidate &&
          std::includes(candidate.begin(), candidate.end(), other.begin(),
                        other.end())) {
        dominated = true;
        break;
      }
    }
    if (!dominated) {
      out.push_back(candidate);
    }
  }
  return out;
}

}  // namespace

ForgetResult forget_atom(const Program& p, const std::string& atom,
                         const Limits& limits) {
  const Vocabulary vp = vocabulary_of(p);
  std::vector<AnswerSet> as = coherent_answer_sets(p, vp, limits);

  if (!vp.contains(atom)) {
    return ForgetResult{p, {atom}, vp, lex_sorted(std::move(as))};
  }

  const Vocabulary retained = vp.minus(Vocabulary({atom}));

  std::vector<AnswerSet> projected;
  projected.reserve(as.size());
  for (const auto& t : as) {
    AnswerSet s;
    s.reserve(t.size());
    for (const auto& a : t) {
      if (a != atom) {
        s.push_back(a);
      }
    }
    projected.push_back(std::move(s));
  }
  std::vector<AnswerSet> minimal = minimal_antichain(std::move(projected));

  Program rebuilt;
  for (const auto& kept : minimal) {
    // One rule per element of the set:  a' :- not x1, ..., not xk.
    // where the x are the retained atoms missing from the set. Taking
    // the complement against the retained vocabulary keeps the
    // forgotten atom out of the new program.
    std::vector<std::string> complement;
    for (const auto& a : retained) {
      if (!std::binary_search(kept.begin(), kept.end(), a)) {
        complement.push_back(a);
      }
    }
    for (const auto& derived : kept) {
      rebuilt.rules.push_back(Rule{{derived}, {}, complement});
    }
  }

  const std::vector<AnswerSet> check =
      lex_sorted(answer_sets(rebuilt, retained, limits));
  if (check != minimal) {
    throw internal_error(
        "rebuilt program does not have the minimized projections as its "
        "answer sets:\n" +
        render_program(rebuilt));
  }
  return ForgetResult{std::move(rebuilt), {atom}, retained,
                      std::move(minimal)};
}

ForgetResult forget_set(const Program& p, std::vector<std::string> atoms,
                        const Limits& limits) {
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());

  const Vocabulary vp = vocabulary_of(p);
  coherent_answer_sets(p, vp, limits);

  Program current = p;
  for (const auto& a : atoms) {
    current = forget_atom(current, a, limits).program;
  }
  const Vocabulary retained = vp.minus(Vocabulary(atoms));
  std::vector<AnswerSet> minimal = answer_sets(current, retained, limits);
  return ForgetResult{std::move(current), std::move(atoms), retained,
                      std::move(minimal)};
}

ForgetResult uniform_interpolant_program(const Program& p, const Vocabulary& w,
                                         const Limits& limits) {
  const Vocabulary vp = vocabulary_of(p);
  // Atoms of w outside the program are forgotten trivially; listing them
  // keeps the full query vocabulary accounted for.
  const Vocabulary to_forget = vp.minus(w).unioned(w.minus(vp));
  ForgetResult result = forget_set(p, to_forget.atoms(), limits);

  // The original program must entail every rule of the result: each
  // equilibrium model of p satisfies each rebuilt rule read as a formula.
  const EquilibriumReport rep =
      equilibrium_models(program_to_theory(p), vp, limits);
  for (const auto& m : rep.models.members()) {
    for (const auto& rule : result.program.rules) {
      if (!satisfies(m, *rule_to_formula(rule))) {
        throw internal_error(
            "uniform interpolant is not entailed by the source program: "
            "rule '" +
            render_rule(rule) + "' fails in an equilibrium model");
      }
    }
  }
  return result;
}

}  // namespace eqlog

#include "eqlog/asp.hpp"

#include <cstdint>
#include <string>
#include <vector>

#include "eqlog/error.hpp"

namespace eqlog {

FormulaPtr rule_to_formula(const Rule& r) {
  std::vector<FormulaPtr> heads;
  heads.reserve(r.heads.size());
  for (const auto& a : r.heads) {
    heads.push_back(Formula::atom(a));
  }
  FormulaPtr head = Formula::disjunction_of(heads);
  if (r.pos_body.empty() && r.neg_body.empty()) {
    return head;
  }
  std::vector<FormulaPtr> body;
  body.reserve(r.pos_body.size() + r.neg_body.size());
  for (const auto& a : r.pos_body) {
    body.push_back(Formula::atom(a));
  }
  for (const auto& a : r.neg_body) {
    body.push_back(Formula::negation(Formula::atom(a)));
  }
  return Formula::implication(Formula::conjunction_of(body), std::move(head));
}

Theory program_to_theory(const Program& p) {
  Theory t;
  t.reserve(p.rules.size());
  for (const auto& r : p.rules) {
    t.push_back(rule_to_formula(r));
  }
  return t;
}

namespace {

struct RuleBits {
  std::uint64_t heads;
  std::uint64_t pos;
  std::uint64_t neg;
};

// Classical satisfaction of a positive rule set, straight off the bit
// masks; deliberately shares nothing with the here-and-there evaluator.
bool classical_model_of_reduct(const std::vector<RuleBits>& reduct,
                               std::uint64_t x) {
  for (const auto& r : reduct) {
    if ((r.pos & x) == r.pos && (r.heads & x) == 0) {
      return false;
    }
  }
  return true;
}

}  // namespace

std::vector<AnswerSet> gl_answer_sets_oracle(const Program& p,
                                             const Vocabulary& v,
                                             const Limits& limits) {
  if (!v.includes(vocabulary_of(p))) {
    throw vocabulary_error(
        "vocabulary too small: the program mentions atoms outside it");
  }
  if (v.size() > limits.max_atoms) {
    throw cap_error("vocabulary of " + std::to_string(v.size()) +
                    " atoms exceeds the enumeration cap of " +
                    std::to_string(limits.max_atoms) +
                    " (raise Limits::max_atoms / --max-atoms)");
  }
  std::vector<RuleBits> rules;
  rules.reserve(p.rules.size());
  for (const auto& r : p.rules) {
    rules.push_back(RuleBits{atom_bits(v, r.heads), atom_bits(v, r.pos_body),
                             atom_bits(v, r.neg_body)});
  }
  const std::uint64_t mask =
      v.size() >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << v.size()) - 1;
  std::vector<AnswerSet> out;
  for (std::uint64_t x = 0;; ++x) {
    // Reduct w.r.t. x: delete rules blocked by the negative body, strip
    // the negative body from the rest.
    std::vector<RuleBits> reduct;
    for (const auto& r : rules) {
      if ((r.neg & x) == 0) {
        reduct.push_back(RuleBits{r.heads, r.pos, 0});
      }
    }
    if (classical_model_of_reduct(reduct, x)) {
      bool minimal = true;
      for (std::uint64_t y = 0; y != x; y = (y - x) & x) {
        if (classical_model_of_reduct(reduct, y)) {
          minimal = false;
          break;
        }
      }
      if (minimal) {
        out.push_back(atoms_from_bits(v, x));
      }
    }
    if (x == mask) {
      break;
    }
  }
  return out;
}

std::vector<AnswerSet> answer_sets(const Program& p, const Vocabulary& v,
                                   const Limits& limits) {
  const EquilibriumReport rep =
      equilibrium_models(program_to_theory(p), v, limits);
  std::vector<AnswerSet> out;
  out.reserve(rep.models.size());
  for (const auto& m : rep.models.members()) {
    out.push_back(m.there_atoms());
  }
  const std::vector<AnswerSet> oracle = gl_answer_sets_oracle(p, v, limits);
  if (out != oracle) {
    throw internal_error(
        "answer set routes disagree: equilibrium models and reduct oracle "
        "computed different sets for program:\n" +
        render_program(p));
  }
  return out;
}

namespace {

bool in_query_fragment(const Formula& f) {
  switch (f.kind()) {
    case Connective::atom:
      return true;
    case Connective::neg:
      return in_query_fragment(*f.child());
    case Connective::conj:
    case Connective::disj:
      return in_query_fragment(*f.left()) && in_query_fragment(*f.right());
    case Connective::verum:
    case Connective::falsum:
    case Connective::impl:
      return false;
  }
  return false;
}

}  // namespace

EntailmentResult entails_as_ex(const Program& p, const FormulaPtr& query,
                               const Limits& limits) {
  if (!in_query_fragment(*query)) {
    throw precondition_error(
        "query outside the atom/and/or/not fragment: '" +
        render_formula(query) + "'");
  }
  const Theory theory = program_to_theory(p);
  const Vocabulary joint =
      vocabulary_of(theory).unioned(vocabulary_of(*query));
  const EquilibriumReport rep = equilibrium_models(theory, joint, limits);
  // The empty program still has the empty answer set, so unlike plain
  // theory entailment only genuine incoherence falls back to monotonic
  // consequence here.
  if (rep.models.empty()) {
    return {consequence(theory, query, limits), true, EntailmentMode::cw};
  }
  for (const Interpretation& m : rep.models.members()) {
    if (!satisfies(m, *query)) {
      return {false, false, EntailmentMode::cw};
    }
  }
  return {true, false, EntailmentMode::cw};
}

bool entails_as(const Program& p, const FormulaPtr& query,
                const Limits& limits) {
  return entails_as_ex(p, query, limits).holds;
}

}  // namespace eqlog

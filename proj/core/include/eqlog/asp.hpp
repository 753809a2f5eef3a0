#pragma once

#include "eqlog/equilibrium.hpp"
#include "eqlog/program.hpp"

namespace eqlog {

// Canonically sorted atom set; always a classical model of its program.
using AnswerSet = std::vector<std::string>;

// h1 | ... | hk :- p1, ..., pm, not n1, ..., not nj.   becomes
// p1 & ... & pm & -n1 & ... & -nj -> h1 | ... | hk; an empty body
// leaves the bare head disjunction, an empty head becomes _|_.
FormulaPtr rule_to_formula(const Rule& r);
Theory program_to_theory(const Program& p);

// Independent reduct-based oracle: X is an answer set iff X is a
// minimal classical model of the program reduct w.r.t. X (delete rules
// whose negative body meets X, drop negative bodies otherwise).
// Exhaustive over all 2^|v| candidates; shares no evaluator with the
// here-and-there machinery.
std::vector<AnswerSet> gl_answer_sets_oracle(const Program& p,
                                             const Vocabulary& v,
                                             const Limits& limits = {});

// Answer sets via the equilibrium-model route. Cross-checked against
// gl_answer_sets_oracle on every call; a mismatch is an internal_error.
std::vector<AnswerSet> answer_sets(const Program& p, const Vocabulary& v,
                                   const Limits& limits = {});

// Skeptical program entailment: the query (atoms, &, |, - only) must
// hold in every answer set, computed over the joint program+query
// vocabulary so that unknown atoms come out false. Negated queries read
// as constraint satisfaction: -a holds iff no answer set contains a.
// The empty program has the empty answer set; only incoherent programs
// fall back to monotonic consequence.
bool entails_as(const Program& p, const FormulaPtr& query,
                const Limits& limits = {});
EntailmentResult entails_as_ex(const Program& p, const FormulaPtr& query,
                               const Limits& limits = {});

}  // namespace eqlog

#pragma once

#include "eqlog/asp.hpp"

namespace eqlog {

struct ForgetResult {
  Program program;
  std::vector<std::string> forgotten;   // canonical order
  Vocabulary retained_vocab;
  // The minimized projections A_1..A_m of the original answer sets,
  // lexicographic by sorted atom list. Equal to the answer sets of
  // `program` over retained_vocab (checked on construction).
  std::vector<AnswerSet> minimal_sets;
};

// Removes one atom from a coherent program in four steps: compute the
// answer sets, drop the atom from each, discard non-minimal results,
// and rebuild a program with exactly those answer sets. The rebuilt
// rules have the form
//
//   a' :- not x1, ..., not xk.     { x1..xk } = retained vocab minus A_i
//
// one per element a' of each A_i (a fact when the complement is empty).
// Complements are taken against the retained vocabulary so the dropped
// atom cannot reappear. Forgetting an atom outside the program's
// vocabulary returns the program unchanged.
ForgetResult forget_atom(const Program& p, const std::string& atom,
                         const Limits& limits = {});

// Left fold of forget_atom in canonical atom order. The answer sets of
// the result do not depend on the fold order (tested property).
ForgetResult forget_set(const Program& p, std::vector<std::string> atoms,
                        const Limits& limits = {});

// Uniform interpolant of a coherent program for the query vocabulary w:
// forgets every atom of V(p) outside w (atoms of w outside V(p) are
// forgotten trivially). Each rule of the result, read as a formula,
// holds in every equilibrium model of p (checked on construction), and
// every literal conjunction over w entailed by p is entailed by the
// result.
ForgetResult uniform_interpolant_program(const Program& p, const Vocabulary& w,
                                         const Limits& limits = {});

}  // namespace eqlog

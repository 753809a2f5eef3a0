#pragma once

#include "eqlog/definability.hpp"

namespace eqlog {

struct InterpolationResult {
  FormulaPtr interpolant;
  EntailmentMode mode = EntailmentMode::base;
  Vocabulary shared_vocab;                      // V(a) intersect V(b)
  std::vector<std::string> fresh_query_atoms;   // V(b) minus V(a)
  // True when the construction went through the monotonic fallback
  // because `a` has no equilibrium models.
  bool used_fallback = false;
};

// Craig interpolant for a |- b in here-and-there: the projection of a
// onto the shared vocabulary. Guarantees {a} |- g and {g} |- b with
// V(g) inside the shared vocabulary. Throws precondition_error if the
// consequence does not hold.
FormulaPtr ht_interpolant(const FormulaPtr& a, const FormulaPtr& b,
                          const Limits& limits = {});

// Interpolant for a |~cw b. With fresh query atoms B1..Bn
// (= V(b) minus V(a)) the result g satisfies
//   a |~ g,   g & -B1 & ... & -Bn  |-  b,   and   g |~cw b.
// Every result is re-verified before being returned; a verification
// failure aborts with internal_error.
InterpolationResult interpolant_cw(const FormulaPtr& a, const FormulaPtr& b,
                                   const Limits& limits = {});

// As interpolant_cw but additionally requires V(b) to be contained in
// V(a); the fresh-atom list is then empty and the second condition
// strengthens to plain consequence: a |~cw g and g |- b.
InterpolationResult interpolant_cw_subvocab(const FormulaPtr& a,
                                            const FormulaPtr& b,
                                            const Limits& limits = {});

// Interpolant for a |~ow b with a |~ow g and g |- b.
InterpolationResult interpolant_ow(const FormulaPtr& a, const FormulaPtr& b,
                                   const Limits& limits = {});

struct VerifyReport {
  bool ok = false;
  std::string reason;

  explicit operator bool() const { return ok; }
};

// Re-checks vocabulary containment plus the mode-specific pair of
// entailments:
//   base: {a} |- g  and  {g} |- b
//   cw:   a |~cw g  and  g |~cw b
//   ow:   a |~ow g  and  {g} |- b
VerifyReport verify_interpolant(const FormulaPtr& a, const FormulaPtr& b,
                                const InterpolationResult& r,
                                const Limits& limits = {});

}  // namespace eqlog

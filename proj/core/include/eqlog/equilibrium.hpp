#pragma once

#include <optional>
#include <string_view>

#include "eqlog/ht.hpp"

namespace eqlog {

// cw: equilibrium entailment over the joint theory+query vocabulary.
// ow: equilibrium entailment via arbitrary expansions of theory-vocabulary
//     equilibrium models to the query vocabulary.
// base: plain monotonic consequence.
enum class EntailmentMode { cw, ow, base };

const char* to_string(EntailmentMode mode);
std::optional<EntailmentMode> entailment_mode_from_string(std::string_view s);

struct EquilibriumReport {
  Vocabulary vocab;
  ModelSet models;     // every member is total
  // True iff the theory is empty or has no equilibrium models; entailment
  // then falls back to monotonic consequence.
  bool used_fallback = false;
};

// Strict order: same there-set and strictly smaller here-set.
bool order_lt(const Interpretation& m1, const Interpretation& m2);

// Total models <T,T> of t with no model <H,T>, H proper subset of T.
EquilibriumReport equilibrium_models(const Theory& t, const Vocabulary& v,
                                     const Limits& limits = {});

// Non-empty theory with at least one equilibrium model.
bool is_coherent(const Theory& t, const Vocabulary& v,
                 const Limits& limits = {});

struct EntailmentResult {
  bool holds = false;
  bool used_fallback = false;
  EntailmentMode mode = EntailmentMode::base;
};

EntailmentResult entails_ex(const Theory& t, const FormulaPtr& f,
                            EntailmentMode mode, const Limits& limits = {});
// `ambient` forces extra atoms into the vocabularies: for cw into the joint
// vocabulary, for ow into the theory-side vocabulary. Results are
// vocabulary-sensitive by design, so this is scriptable.
EntailmentResult entails_ex(const Theory& t, const FormulaPtr& f,
                            EntailmentMode mode, const Vocabulary& ambient,
                            const Limits& limits = {});
bool entails(const Theory& t, const FormulaPtr& f, EntailmentMode mode,
             const Limits& limits = {});

}  // namespace eqlog

#pragma once

#include <string>

#include "eqlog/equilibrium.hpp"

namespace eqlog {

// {"here":[...],"there":[...]}, atom lists in canonical order.
std::string to_json(const Interpretation& m);

// {"vocab":[...],"models":[{"here":[...],"there":[...]},...]}
std::string to_json(const ModelSet& s);

// {"vocab":[...],"equilibrium_models":[{"atoms":[...]},...],"fallback":bool}
std::string to_json(const EquilibriumReport& r);

}  // namespace eqlog

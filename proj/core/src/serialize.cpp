#include "eqlog/serialize.hpp"

#include <json.hpp>

namespace eqlog {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json interpretation_json(const Interpretation& m) {
  ordered_json j;
  j["here"] = m.here_atoms();
  j["there"] = m.there_atoms();
  return j;
}

}  // namespace

std::string to_json(const Interpretation& m) {
  return interpretation_json(m).dump();
}

std::string to_json(const ModelSet& s) {
  ordered_json j;
  j["vocab"] = s.vocab().atoms();
  ordered_json models = ordered_json::array();
  for (const auto& m : s.members()) {
    models.push_back(interpretation_json(m));
  }
  j["models"] = std::move(models);
  return j.dump();
}

std::string to_json(const EquilibriumReport& r) {
  ordered_json j;
  j["vocab"] = r.vocab.atoms();
  ordered_json models = ordered_json::array();
  for (const auto& m : r.models.members()) {
    ordered_json entry;
    entry["atoms"] = m.there_atoms();
    models.push_back(std::move(entry));
  }
  j["equilibrium_models"] = std::move(models);
  j["fallback"] = r.used_fallback;
  return j.dump();
}

}  // namespace eqlog

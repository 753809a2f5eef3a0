#include "eqlog/vocabulary.hpp"

#include <algorithm>
#include <cctype>

#include "eqlog/error.hpp"

namespace eqlog {

namespace {

const std::shared_ptr<const std::vector<std::string>>& empty_atoms() {
  static const auto empty =
      std::make_shared<const std::vector<std::string>>();
  return empty;
}

}  // namespace

bool is_valid_atom_name(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) {
    return false;
  }
  return std::all_of(name.begin() + 1, name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

Vocabulary::Vocabulary() : atoms_(empty_atoms()) {}

Vocabulary::Vocabulary(std::vector<std::string> atoms) {
  for (const auto& a : atoms) {
    if (!is_valid_atom_name(a)) {
      throw vocabulary_error("invalid atom name '" + a + "'");
    }
  }
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
  atoms_ = std::make_shared<const std::vector<std::string>>(std::move(atoms));
}

std::optional<std::size_t> Vocabulary::index_of(std::string_view name) const {
  auto it = std::lower_bound(atoms_->begin(), atoms_->end(), name);
  if (it == atoms_->end() || *it != name) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(it - atoms_->begin());
}

bool Vocabulary::contains(std::string_view name) const {
  return index_of(name).has_value();
}

bool Vocabulary::includes(const Vocabulary& other) const {
  return std::includes(atoms_->begin(), atoms_->end(), other.atoms_->begin(),
                       other.atoms_->end());
}

Vocabulary Vocabulary::unioned(const Vocabulary& other) const {
  std::vector<std::string> out;
  out.reserve(size() + other.size());
  std::set_union(atoms_->begin(), atoms_->end(), other.atoms_->begin(),
                 other.atoms_->end(), std::back_inserter(out));
  return Vocabulary(std::move(out));
}

Vocabulary Vocabulary::intersected(const Vocabulary& other) const {
  std::vector<std::string> out;
  std::set_intersection(atoms_->begin(), atoms_->end(), other.atoms_->begin(),
                        other.atoms_->end(), std::back_inserter(out));
  return Vocabulary(std::move(out));
}

Vocabulary Vocabulary::minus(const Vocabulary& other) const {
  std::vector<std::string> out;
  std::set_difference(atoms_->begin(), atoms_->end(), other.atoms_->begin(),
                      other.atoms_->end(), std::back_inserter(out));
  return Vocabulary(std::move(out));
}

bool Vocabulary::operator==(const Vocabulary& other) const {
  return atoms_ == other.atoms_ || *atoms_ == *other.atoms_;
}

}  // namespace eqlog

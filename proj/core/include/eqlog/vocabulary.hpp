#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace eqlog {

// Atom names match [a-zA-Z][a-zA-Z0-9_]*.
bool is_valid_atom_name(std::string_view name);

// Immutable, duplicate-free set of atom names in lexicographic order.
// The iteration order is the canonical order used by every enumeration
// and formula synthesis routine, so results are deterministic.
// Copies are cheap (shared storage).
class Vocabulary {
 public:
  Vocabulary();
  explicit Vocabulary(std::vector<std::string> atoms);

  std::size_t size() const { return atoms_->size(); }
  bool empty() const { return atoms_->empty(); }
  const std::string& atom(std::size_t i) const { return (*atoms_)[i]; }
  const std::vector<std::string>& atoms() const { return *atoms_; }

  std::optional<std::size_t> index_of(std::string_view name) const;
  bool contains(std::string_view name) const;
  // True if every atom of `other` is in this vocabulary.
  bool includes(const Vocabulary& other) const;

  Vocabulary unioned(const Vocabulary& other) const;
  Vocabulary intersected(const Vocabulary& other) const;
  Vocabulary minus(const Vocabulary& other) const;

  bool operator==(const Vocabulary& other) const;

  auto begin() const { return atoms_->begin(); }
  auto end() const { return atoms_->end(); }

 private:
  std::shared_ptr<const std::vector<std::string>> atoms_;
};

}  // namespace eqlog

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "eqlog/error.hpp"
#include "eqlog/formula.hpp"

namespace eqlog::detail {

// Formulas compiled against a vocabulary: a flat node arena in
// child-before-parent order with atoms resolved to bit masks. Evaluation
// returns the (here, there) truth pair of each root for a given <H,T>.
//
// Truth at `there` only looks at T; truth at `here` of an implication also
// requires truth at `there`, and a negation holds at a world iff its body
// fails at every later world.
class Evaluator {
 public:
  Evaluator(const Theory& t, const Vocabulary& v) {
    roots_.reserve(t.size());
    for (const auto& f : t) {
      roots_.push_back(add(*f, v));
    }
  }

  Evaluator(const Formula& f, const Vocabulary& v) {
    roots_.push_back(add(f, v));
  }

  std::size_t root_count() const { return roots_.size(); }

  // Every root true at both worlds.
  bool all_true(std::uint64_t here, std::uint64_t there,
                std::vector<std::pair<bool, bool>>& scratch) const {
    eval_nodes(here, there, scratch);
    for (int r : roots_) {
      const auto& v = scratch[static_cast<std::size_t>(r)];
      if (!v.first || !v.second) {
        return false;
      }
    }
    return true;
  }

  bool all_true(std::uint64_t here, std::uint64_t there) const {
    std::vector<std::pair<bool, bool>> scratch;
    return all_true(here, there, scratch);
  }

  // (here, there) truth pair of root i.
  std::pair<bool, bool> value(std::size_t i, std::uint64_t here,
                              std::uint64_t there,
                              std::vector<std::pair<bool, bool>>& scratch)
      const {
    eval_nodes(here, there, scratch);
    return scratch[static_cast<std::size_t>(roots_[i])];
  }

  std::pair<bool, bool> value(std::size_t i, std::uint64_t here,
                              std::uint64_t there) const {
    std::vector<std::pair<bool, bool>> scratch;
    return value(i, here, there, scratch);
  }

 private:
  struct Node {
    Connective kind;
    std::uint64_t atom_mask;
    int left;
    int right;
  };

  int add(const Formula& f, const Vocabulary& v) {
    switch (f.kind()) {
      case Connective::atom: {
        auto idx = v.index_of(f.atom_name());
        if (!idx) {
          throw vocabulary_error("atom '" + f.atom_name() +
                                 "' is outside the vocabulary");
        }
        nodes_.push_back({f.kind(), std::uint64_t{1} << *idx, -1, -1});
        break;
      }
      case Connective::verum:
      case Connective::falsum:
        nodes_.push_back({f.kind(), 0, -1, -1});
        break;
      case Connective::neg: {
        int c = add(*f.child(), v);
        nodes_.push_back({f.kind(), 0, c, -1});
        break;
      }
      case Connective::conj:
      case Connective::disj:
      case Connective::impl: {
        int l = add(*f.left(), v);
        int r = add(*f.right(), v);
        nodes_.push_back({f.kind(), 0, l, r});
        break;
      }
    }
    return static_cast<int>(nodes_.size()) - 1;
  }

  void eval_nodes(std::uint64_t here, std::uint64_t there,
                  std::vector<std::pair<bool, bool>>& vals) const {
    vals.resize(nodes_.size());
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      const Node& n = nodes_[i];
      switch (n.kind) {
        case Connective::atom:
          vals[i] = {(here & n.atom_mask) != 0, (there & n.atom_mask) != 0};
          break;
        case Connective::verum:
          vals[i] = {true, true};
          break;
        case Connective::falsum:
          vals[i] = {false, false};
          break;
        case Connective::neg: {
          const auto& c = vals[static_cast<std::size_t>(n.left)];
          vals[i] = {!c.first && !c.second, !c.second};
          break;
        }
        case Connective::conj: {
          const auto& l = vals[static_cast<std::size_t>(n.left)];
          const auto& r = vals[static_cast<std::size_t>(n.right)];
          vals[i] = {l.first && r.first, l.second && r.second};
          break;
        }
        case Connective::disj: {
          const auto& l = vals[static_cast<std::size_t>(n.left)];
          const auto& r = vals[static_cast<std::size_t>(n.right)];
          vals[i] = {l.first || r.first, l.second || r.second};
          break;
        }
        case Connective::impl: {
          const auto& l = vals[static_cast<std::size_t>(n.left)];
          const auto& r = vals[static_cast<std::size_t>(n.right)];
          const bool at_there = !l.second || r.second;
          vals[i] = {(!l.first || r.first) && at_there, at_there};
          break;
        }
      }
    }
  }

  std::vector<Node> nodes_;
  std::vector<int> roots_;
};

}  // namespace eqlog::detail

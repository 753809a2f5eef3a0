#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <span>
#include <string_view>
#include <vector>

#include "eqlog/formula.hpp"

namespace eqlog {

// Guardrail for the 3^n enumerations. Operations that enumerate
// interpretations refuse vocabularies larger than max_atoms.
struct Limits {
  std::size_t max_atoms = 16;
};

// The two worlds of a here-and-there frame, with here <= there.
enum class World { here, there };

// A pair <H,T> of atom sets with H subset-of T subset-of vocab, encoded as two
// bit vectors indexed by the canonical atom order of the vocabulary.
class Interpretation {
 public:
  Interpretation(Vocabulary vocab, std::uint64_t here_bits,
                 std::uint64_t there_bits);

  static Interpretation from_atoms(Vocabulary vocab,
                                   std::span<const std::string> here,
                                   std::span<const std::string> there);
  static Interpretation total(Vocabulary vocab,
                              std::span<const std::string> atoms);

  const Vocabulary& vocab() const { return vocab_; }
  std::uint64_t here_bits() const { return here_; }
  std::uint64_t there_bits() const { return there_; }

  bool is_total() const { return here_ == there_; }
  bool here_contains(std::string_view atom) const;
  bool there_contains(std::string_view atom) const;
  std::vector<std::string> here_atoms() const;
  std::vector<std::string> there_atoms() const;

  // <T,T> over the same vocabulary.
  Interpretation total_companion() const;

  bool operator==(const Interpretation& other) const;

 private:
  Vocabulary vocab_;
  std::uint64_t here_;
  std::uint64_t there_;
};

// Lazy range over all interpretations that extend a fixed partial
// assignment on some bit positions by arbitrary values on the free
// positions. Yields 3^(free atoms) interpretations in canonical order:
// T ascending as a bit pattern, and H ascending within each T.
class InterpretationRange {
 public:
  class iterator {
   public:
    using value_type = Interpretation;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator() : range_(nullptr), t_(0), h_(0), done_(true) {}

    Interpretation operator*() const;
    iterator& operator++();
    iterator operator++(int);
    bool operator==(const iterator& other) const;

   private:
    friend class InterpretationRange;
    iterator(const InterpretationRange* range, bool done)
        : range_(range), t_(0), h_(0), done_(done) {}

    const InterpretationRange* range_;
    std::uint64_t t_;
    std::uint64_t h_;
    bool done_;
  };

  iterator begin() const { return iterator(this, false); }
  iterator end() const { return iterator(this, true); }

 private:
  friend InterpretationRange enumerate_interpretations(const Vocabulary&,
                                                       const Limits&);
  friend InterpretationRange expansions_to(const Interpretation&,
                                           const Vocabulary&, const Limits&);

  InterpretationRange(Vocabulary vocab, std::uint64_t fixed_here,
                      std::uint64_t fixed_there, std::uint64_t free_mask)
      : vocab_(std::move(vocab)),
        fixed_here_(fixed_here),
        fixed_there_(fixed_there),
        free_mask_(free_mask) {}

  Vocabulary vocab_;
  std::uint64_t fixed_here_;
  std::uint64_t fixed_there_;
  std::uint64_t free_mask_;
};

// All 3^|v| interpretations over v.
InterpretationRange enumerate_interpretations(const Vocabulary& v,
                                              const Limits& limits = {});

// All interpretations over v (a super-vocabulary of m's) whose reduct
// to m.vocab() equals m; there are 3^|v minus m.vocab| of them.
InterpretationRange expansions_to(const Interpretation& m, const Vocabulary& v,
                                  const Limits& limits = {});

// <H intersect v, T intersect v> over v; v must be a sub-vocabulary.
Interpretation reduct(const Interpretation& m, const Vocabulary& v);

bool satisfies_at(const Interpretation& m, World w, const Formula& f);
bool satisfies(const Interpretation& m, const Formula& f);
bool satisfies(const Interpretation& m, const Theory& t);

// Finite set of interpretations over one vocabulary, kept sorted in
// canonical order (there-bits, then here-bits) and duplicate-free.
class ModelSet {
 public:
  ModelSet();
  explicit ModelSet(Vocabulary vocab);
  ModelSet(Vocabulary vocab, std::vector<Interpretation> members);

  const Vocabulary& vocab() const { return vocab_; }
  const std::vector<Interpretation>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(const Interpretation& m) const;

  bool operator==(const ModelSet& other) const;

 private:
  Vocabulary vocab_;
  std::vector<Interpretation> members_;
};

// All interpretations over v satisfying every formula of t.
ModelSet models_of(const Theory& t, const Vocabulary& v,
                   const Limits& limits = {});

// Truth of f in every model of t over the joint vocabulary. The joint
// vocabulary is the smallest sound choice; any larger one gives the
// same answer (use the ambient overload to check).
bool consequence(const Theory& t, const FormulaPtr& f,
                 const Limits& limits = {});
bool consequence(const Theory& t, const FormulaPtr& f,
                 const Vocabulary& ambient, const Limits& limits = {});

// Mutual consequence, i.e. equal model sets over the union vocabulary.
bool equivalent(const Theory& t1, const Theory& t2, const Limits& limits = {});

// Bit-vector helpers over the canonical atom order.
std::uint64_t atom_bits(const Vocabulary& v, std::span<const std::string> atoms);
std::vector<std::string> atoms_from_bits(const Vocabulary& v,
                                         std::uint64_t bits);

}  // namespace eqlog

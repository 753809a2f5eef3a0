#include "eqlog/ht.hpp"

#include <algorithm>
#include <cassert>

#include "eqlog/error.hpp"
#include "eval.hpp"

namespace eqlog {

namespace {

std::uint64_t full_mask(std::size_t n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

void check_cap(const Vocabulary& v, const Limits& limits) {
  if (v.size() > 64) {
    throw cap_error("vocabulary of " + std::to_string(v.size()) +
                    " atoms exceeds the 64-atom hard limit");
  }
  if (v.size() > limits.max_atoms) {
    throw cap_error("vocabulary of " + std::to_string(v.size()) +
                    " atoms exceeds the enumeration cap of " +
                    std::to_string(limits.max_atoms) +
                    " (raise Limits::max_atoms / --max-atoms)");
  }
}

void check_contains(const Vocabulary& big, const Vocabulary& small,
                    const char* what) {
  if (!big.includes(small)) {
    throw vocabulary_error(what);
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Interpretation

Interpretation::Interpretation(Vocabulary vocab, std::uint64_t here_bits,
                               std::uint64_t there_bits)
    : vocab_(std::move(vocab)), here_(here_bits), there_(there_bits) {
  if (vocab_.size() > 64) {
    throw cap_error("vocabulary exceeds the 64-atom hard limit");
  }
  const std::uint64_t mask = full_mask(vocab_.size());
  if ((there_ & ~mask) != 0) {
    throw vocabulary_error("there-bits outside the vocabulary");
  }
  if ((here_ & ~there_) != 0) {
    throw precondition_error("here must be a subset of there");
  }
}

Interpretation Interpretation::from_atoms(Vocabulary vocab,
                                          std::span<const std::string> here,
                                          std::span<const std::string> there) {
  const std::uint64_t h = atom_bits(vocab, here);
  const std::uint64_t t = atom_bits(vocab, there);
  return Interpretation(std::move(vocab), h, t);
}

Interpretation Interpretation::total(Vocabulary vocab,
                                     std::span<const std::string> atoms) {
  const std::uint64_t t = atom_bits(vocab, atoms);
  return Interpretation(std::move(vocab), t, t);
}

bool Interpretation::here_contains(std::string_view atom) const {
  auto idx = vocab_.index_of(atom);
  return idx && (here_ >> *idx) & 1;
}

bool Interpretation::there_contains(std::string_view atom) const {
  auto idx = vocab_.index_of(atom);
  return idx && (there_ >> *idx) & 1;
}

std::vector<std::string> Interpretation::here_atoms() const {
  return atoms_from_bits(vocab_, here_);
}

std::vector<std::string> Interpretation::there_atoms() const {
  return atoms_from_bits(vocab_, there_);
}

Interpretation Interpretation::total_companion() const {
  return Interpretation(vocab_, there_, there_);
}

bool Interpretation::operator==(const Interpretation& other) const {
  return here_ == other.here_ && there_ == other.there_ &&
         vocab_ == other.vocab_;
}

// ---------------------------------------------------------------------------
// Enumeration

Interpretation InterpretationRange::iterator::operator*() const {
  assert(!done_);
  return Interpretation(range_->vocab_, range_->fixed_here_ | h_,
                        range_->fixed_there_ | t_);
}

InterpretationRange::iterator& InterpretationRange::iterator::operator++() {
  assert(!done_);
  if (h_ == t_) {
    if (t_ == range_->free_mask_) {
      done_ = true;
    } else {
      // Next free there-pattern in ascending order; restart here at empty.
      t_ = (t_ - range_->free_mask_) & range_->free_mask_;
      h_ = 0;
    }
  } else {
    h_ = (h_ - t_) & t_;
  }
  return *this;
}

InterpretationRange::iterator InterpretationRange::iterator::operator++(int) {
  iterator copy = *this;
  ++*this;
  return copy;
}

bool InterpretationRange::iterator::operator==(const iterator& other) const {
  if (done_ != other.done_) {
    return false;
  }
  return done_ || (t_ == other.t_ && h_ == other.h_);
}

InterpretationRange enumerate_interpretations(const Vocabulary& v,
                                              const Limits& limits) {
  check_cap(v, limits);
  return InterpretationRange(v, 0, 0, full_mask(v.size()));
}

InterpretationRange expansions_to(const Interpretation& m, const Vocabulary& v,
                                  const Limits& limits) {
  check_contains(v, m.vocab(), "expansion target is not a super-vocabulary");
  check_cap(v, limits);
  std::uint64_t fixed_here = 0;
  std::uint64_t fixed_there = 0;
  std::uint64_t pinned = 0;
  for (std::size_t i = 0; i < m.vocab().size(); ++i) {
    const auto j = v.index_of(m.vocab().atom(i));
    assert(j.has_value());
    pinned |= std::uint64_t{1} << *j;
    if ((m.here_bits() >> i) & 1) {
      fixed_here |= std::uint64_t{1} << *j;
    }
    if ((m.there_bits() >> i) & 1) {
      fixed_there |= std::uint64_t{1} << *j;
    }
  }
  return InterpretationRange(v, fixed_here, fixed_there,
                             full_mask(v.size()) & ~pinned);
}

Interpretation reduct(const Interpretation& m, const Vocabulary& v) {
  check_contains(m.vocab(), v, "reduct target is not a sub-vocabulary");
  std::uint64_t here = 0;
  std::uint64_t there = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto j = m.vocab().index_of(v.atom(i));
    assert(j.has_value());
    if ((m.here_bits() >> *j) & 1) {
      here |= std::uint64_t{1} << i;
    }
    if ((m.there_bits() >> *j) & 1) {
      there |= std::uint64_t{1} << i;
    }
  }
  return Interpretation(v, here, there);
}

// ---------------------------------------------------------------------------
// Satisfaction

bool satisfies_at(const Interpretation& m, World w, const Formula& f) {
  detail::Evaluator ev(f, m.vocab());
  const auto [at_here, at_there] = ev.value(0, m.here_bits(), m.there_bits());
  return w == World::here ? at_here : at_there;
}

bool satisfies(const Interpretation& m, const Formula& f) {
  detail::Evaluator ev(f, m.vocab());
  return ev.all_true(m.here_bits(), m.there_bits());
}

bool satisfies(const Interpretation& m, const Theory& t) {
  detail::Evaluator ev(t, m.vocab());
  return ev.all_true(m.here_bits(), m.there_bits());
}

// ---------------------------------------------------------------------------
// ModelSet

namespace {

bool canonical_before(const Interpretation& a, const Interpretation& b) {
  if (a.there_bits() != b.there_bits()) {
    return a.there_bits() < b.there_bits();
  }
  return a.here_bits() < b.here_bits();
}

}  // namespace

ModelSet::ModelSet() = default;

ModelSet::ModelSet(Vocabulary vocab) : vocab_(std::move(vocab)) {}

ModelSet::ModelSet(Vocabulary vocab, std::vector<Interpretation> members)
    : vocab_(std::move(vocab)), members_(std::move(members)) {
  for (const auto& m : members_) {
    if (!(m.vocab() == vocab_)) {
      throw vocabulary_error("model set members must share the vocabulary");
    }
  }
  std::sort(members_.begin(), members_.end(), canonical_before);
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
}

bool ModelSet::contains(const Interpretation& m) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), m,
                             canonical_before);
  return it != members_.end() && *it == m;
}

bool ModelSet::operator==(const ModelSet& other) const {
  return vocab_ == other.vocab_ && members_ == other.members_;
}

// ---------------------------------------------------------------------------
// Model-theoretic operations

ModelSet models_of(const Theory& t, const Vocabulary& v, const Limits& limits) {
  check_contains(v, vocabulary_of(t),
                 "vocabulary too small: the theory mentions atoms outside it");
  check_cap(v, limits);
  detail::Evaluator ev(t, v);
  std::vector<std::pair<bool, bool>> scratch;
  std::vector<Interpretation> members;
  for (const Interpretation& m : enumerate_interpretations(v, limits)) {
    if (ev.all_true(m.here_bits(), m.there_bits(), scratch)) {
      members.push_back(m);
    }
  }
  return ModelSet(v, std::move(members));
}

bool consequence(const Theory& t, const FormulaPtr& f, const Limits& limits) {
  return consequence(t, f, Vocabulary(), limits);
}

bool consequence(const Theory& t, const FormulaPtr& f,
                 const Vocabulary& ambient, const Limits& limits) {
  const Vocabulary joint =
      vocabulary_of(t).unioned(vocabulary_of(*f)).unioned(ambient);
  check_cap(joint, limits);
  detail::Evaluator theory_ev(t, joint);
  detail::Evaluator query_ev(*f, joint);
  std::vector<std::pair<bool, bool>> scratch;
  for (const Interpretation& m : enumerate_interpretations(joint, limits)) {
    if (theory_ev.all_true(m.here_bits(), m.there_bits(), scratch) &&
        !query_ev.all_true(m.here_bits(), m.there_bits(), scratch)) {
      return false;
    }
  }
  return true;
}

bool equivalent(const Theory& t1, const Theory& t2, const Limits& limits) {
  const Vocabulary joint = vocabulary_of(t1).unioned(vocabulary_of(t2));
  check_cap(joint, limits);
  detail::Evaluator ev1(t1, joint);
  detail::Evaluator ev2(t2, joint);
  std::vector<std::pair<bool, bool>> scratch;
  for (const Interpretation& m : enumerate_interpretations(joint, limits)) {
    if (ev1.all_true(m.here_bits(), m.there_bits(), scratch) !=
        ev2.all_true(m.here_bits(), m.there_bits(), scratch)) {
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Bit helpers

std::uint64_t atom_bits(const Vocabulary& v,
                        std::span<const std::string> atoms) {
  std::uint64_t bits = 0;
  for (const auto& a : atoms) {
    const auto idx = v.index_of(a);
    if (!idx) {
      throw vocabulary_error("atom '" + a + "' is outside the vocabulary");
    }
    bits |= std::uint64_t{1} << *idx;
  }
  return bits;
}

std::vector<std::string> atoms_from_bits(const Vocabulary& v,
                                         std::uint64_t bits) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if ((bits >> i) & 1) {
      out.push_back(v.atom(i));
    }
  }
  return out;
}

}  // namespace eqlog

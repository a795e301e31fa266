#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "orbitkit/automaton.hpp"

namespace orbitkit {

/// An ultimately periodic omega-word pre * per^omega in canonical form:
/// `per` is primitive and, if `pre` is non-empty, the last letters of `pre`
/// and `per` differ. Two canonical UPWords denote the same omega-word iff they
/// are equal member-wise.
///
/// Only normalize() produces instances; the members are read-only.
class UPWord {
 public:
  [[nodiscard]] const Word& pre() const noexcept { return pre_; }
  [[nodiscard]] const Word& per() const noexcept { return per_; }

  /// Letter at position i (0-based) of the infinite word.
  [[nodiscard]] Letter at(std::size_t i) const noexcept {
    return i < pre_.size() ? pre_[i] : per_[(i - pre_.size()) % per_.size()];
  }

  /// The first n letters.
  [[nodiscard]] Word prefix(std::size_t n) const;

  friend bool operator==(const UPWord&, const UPWord&) = default;

 private:
  friend UPWord normalize(Word pre, Word per);
  UPWord(Word pre, Word per) : pre_(std::move(pre)), per_(std::move(per)) {}

  Word pre_;
  Word per_;
};

/// Length of the primitive root of a non-empty word (border / failure function).
std::size_t primitive_root_length(const Word& w);

/// Canonical form of pre * per^omega. Throws PreconditionError if per is empty.
UPWord normalize(Word pre, Word per);

/// Structural equality of canonical forms, i.e. equality of the omega-words.
inline bool upword_equal(const UPWord& lhs, const UPWord& rhs) { return lhs == rhs; }

/// Letters occurring infinitely often, in order of first occurrence in `per`.
std::vector<Letter> tail_letters(const UPWord& w);

struct UPWordHash {
  std::size_t operator()(const UPWord& w) const noexcept;
};

}  // namespace orbitkit

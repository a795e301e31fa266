#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "orbitkit/automaton.hpp"

namespace orbitkit {

/// Default cap on the states of any product machine built by searches whose
/// element sizes can grow exponentially (torsion loops, prefix scans).
inline constexpr std::size_t kDefaultMachineLimit = std::size_t{1} << 20;

/// The partial map induced by a state sequence, stored as a minimal
/// deterministic transducer whose states are numbered canonically (breadth
/// first from the initial state 0, letters in order). Two elements over the
/// same alphabet induce the same partial map on finite words iff they compare
/// equal, so elements can be hashed and deduplicated exactly.
class Element {
 public:
  static constexpr std::uint32_t kNone = 0xFFFFFFFFu;

  struct Step {
    Letter out;
    std::uint32_t dst;
  };

  /// The identity map (one state looping on every letter).
  static Element identity(std::size_t num_letters);

  /// The map of a single state. Requires a deterministic automaton.
  static Element of_state(const Automaton& a, State q);

  /// The map of a whole sequence (back() reads first). `max_states` bounds
  /// every intermediate product; 0 means unbounded. Throws ResourceLimit.
  static Element of_sequence(const Automaton& a, const StateSeq& s, std::size_t max_states = 0);

  /// outer after inner: inner reads the input, outer reads inner's output.
  static Element compose(const Element& outer, const Element& inner, std::size_t max_states = 0);

  [[nodiscard]] std::size_t num_states() const noexcept { return n_; }
  [[nodiscard]] std::size_t num_letters() const noexcept { return m_; }
  [[nodiscard]] bool is_identity() const noexcept;

  [[nodiscard]] std::optional<Step> step(std::uint32_t x, Letter a) const noexcept {
    const std::size_t k = 2 * (x * m_ + index(a));
    if (table_[k + 1] == kNone) return std::nullopt;
    return Step{Letter{table_[k]}, table_[k + 1]};
  }

  [[nodiscard]] std::uint64_t hash() const noexcept { return hash_; }

  friend bool operator==(const Element& l, const Element& r) noexcept {
    return l.hash_ == r.hash_ && l.m_ == r.m_ && l.table_ == r.table_;
  }

 private:
  // `table` holds (out, dst) per (state, letter) for states reachable from 0.
  Element(std::size_t num_letters, std::vector<std::uint32_t> table);

  std::size_t m_ = 0;
  std::size_t n_ = 0;
  std::vector<std::uint32_t> table_;
  std::uint64_t hash_ = 0;
};

struct ElementHash {
  std::size_t operator()(const Element& e) const noexcept {
    return static_cast<std::size_t>(e.hash());
  }
};

}  // namespace orbitkit

#pragma once

#include <cstddef>
#include <optional>
#include <variant>

#include "orbitkit/automaton.hpp"
#include "orbitkit/upword.hpp"

namespace orbitkit {

/// Where a partial action got stuck: `state` has no transition on `letter`
/// at word `position`, while applying element `layer` of the state sequence
/// (0 = leftmost).
struct Undefined {
  State state;
  Letter letter;
  std::size_t position = 0;
  std::size_t layer = 0;

  friend bool operator==(const Undefined&, const Undefined&) = default;
};

/// s o u and s . u for one cross diagram.
struct ActResult {
  Word output;
  StateSeq next;

  friend bool operator==(const ActResult&, const ActResult&) = default;
};

template <class T>
using Partial = std::variant<T, Undefined>;

template <class T>
bool defined(const Partial<T>& p) noexcept {
  return std::holds_alternative<T>(p);
}

/// Run the state sequence over the word; the rightmost state reads first.
/// Requires a deterministic automaton.
Partial<ActResult> act(const Automaton& a, const StateSeq& seq, const Word& word);

/// The action of the dual: act(dual(a), letters-as-states, states-as-letters).
/// The result is expressed in the dual's alphabet, i.e. `output` holds states
/// of `a` (as Letter ids) and `next` holds letters of `a` (as State ids).
Partial<ActResult> act_dual(const Automaton& a, const Word& seq, const StateSeq& word);

/// Reinterpret ids across the dual.
StateSeq as_states(const Word& w);
Word as_letters(const StateSeq& s);

struct EqualityOptions {
  /// Abort with ResourceLimit once any intermediate product machine, or the
  /// final pair search, reaches this many states; 0 means unlimited.
  std::size_t max_pairs = 0;
};

struct EqualityVerdict {
  bool equal = false;
  /// Shortlex-least word on which the two sequences disagree, if unequal.
  Word witness;
  /// Number of state pairs of the two minimal machines explored.
  std::size_t pairs_visited = 0;
};

/// Decide whether lhs and rhs induce the same partial map on all finite
/// words ("both undefined" counts as agreement). Requires determinism.
EqualityVerdict compare_functions(const Automaton& a, const StateSeq& lhs, const StateSeq& rhs,
                                  const EqualityOptions& options = {});

inline bool function_equal(const Automaton& a, const StateSeq& lhs, const StateSeq& rhs,
                           const EqualityOptions& options = {}) {
  return compare_functions(a, lhs, rhs, options).equal;
}

namespace reference {
/// The same decision by breadth-first search over pairs of raw state tuples
/// (identity states dropped). Kept as an independent check of the above.
EqualityVerdict compare_functions(const Automaton& a, const StateSeq& lhs, const StateSeq& rhs,
                                  const EqualityOptions& options = {});

inline bool function_equal(const Automaton& a, const StateSeq& lhs, const StateSeq& rhs,
                           const EqualityOptions& options = {}) {
  return reference::compare_functions(a, lhs, rhs, options).equal;
}
}  // namespace reference

/// Equality restricted to the finite prefixes of w.
bool function_equal_on_upword(const Automaton& a, const StateSeq& lhs, const StateSeq& rhs,
                              const UPWord& w);

/// s o w for an ultimately periodic omega-word; undefined if any prefix is.
Partial<UPWord> act_on_upword(const Automaton& a, const StateSeq& seq, const UPWord& w);

/// Drop identity states; the action is unchanged.
StateSeq reduce_sequence(const Automaton& a, StateSeq seq);

/// s repeated n times.
StateSeq power(const StateSeq& s, std::size_t n);

}  // namespace orbitkit

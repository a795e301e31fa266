#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "orbitkit/automaton.hpp"

namespace orbitkit {

// ---------------------------------------------------------------------------
// Text format
//
//   # comment to end of line
//   @states   q id
//   @alphabet 0 1
//   q 1 0 q          SRC IN OUT DST
//
// Tokens are whitespace separated; a backslash makes the next character
// literal, so a token that starts with '#' is written as \#.
// ---------------------------------------------------------------------------

/// Parse the automaton text format. States and letters are ordered by first
/// appearance, declarations included. Throws ParseError.
Automaton parse_automaton(std::string_view text);
Automaton read_automaton(const std::filesystem::path& path);

/// Inverse of parse_automaton(): headers first, then one line per transition.
std::string format_automaton(const Automaton& a);

/// Graphviz digraph, one node per state and one edge per transition "IN/OUT".
std::string automaton_to_dot(const Automaton& a);

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

struct Classification {
  bool deterministic = false;
  bool complete = false;
  bool invertible = false;
  bool reversible = false;
  bool inverse_reversible = false;
  bool bireversible = false;

  /// Deterministic, complete and invertible: generates a group.
  [[nodiscard]] bool g_automaton() const noexcept {
    return deterministic && complete && invertible;
  }
  friend bool operator==(const Classification&, const Classification&) = default;
};

Classification classify(const Automaton& a);

// ---------------------------------------------------------------------------
// Structural transforms
// ---------------------------------------------------------------------------

/// Swap states and letters; (p,a,b,q) becomes (a,p,q,b). An involution.
Automaton dual(const Automaton& a);

/// Suffix appended to state tokens by inverse().
inline constexpr std::string_view kInverseSuffix = "^-1";

/// Rename p to p^-1 and swap input/output on every transition.
/// Throws NotInvertible naming the first offending (state, output letter).
Automaton inverse(const Automaton& a);

/// Disjoint union of a and inverse(a). Requires a G-automaton.
Automaton group_closure(const Automaton& a);

/// Add every missing (state, letter) as an identity transition into `id_token`.
/// The identity state is created (with loops on every letter) when absent.
Automaton identity_completion(const Automaton& a, const std::string& id_token);

// ---------------------------------------------------------------------------
// Strongly connected components of the state digraph
// ---------------------------------------------------------------------------

struct SccComponent {
  std::vector<State> states;  // in state order
  bool closed = false;        // no transition leaves the component
  bool bireversible = false;  // on the transitions internal to the component
};

struct SccReport {
  // Ordered by the first state of each component.
  std::vector<SccComponent> components;

  /// Index of the component containing q.
  [[nodiscard]] std::size_t component_of(State q) const;
};

SccReport scc_analysis(const Automaton& a);

}  // namespace orbitkit

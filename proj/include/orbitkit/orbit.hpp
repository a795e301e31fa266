#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "orbitkit/algebra.hpp"
#include "orbitkit/automaton.hpp"
#include "orbitkit/upword.hpp"

namespace orbitkit {

struct OrbitEdge {
  std::size_t from;
  State label;
  std::size_t to;

  friend bool operator==(const OrbitEdge&, const OrbitEdge&) = default;
};

/// Orbital graph of an ultimately periodic word: an edge q from x to q o x.
/// Node 0 is the start word; nodes are in BFS discovery order.
struct OrbitGraph {
  std::vector<UPWord> nodes;
  std::vector<OrbitEdge> edges;
  std::size_t root = 0;

  friend bool operator==(const OrbitGraph&, const OrbitGraph&) = default;
};

/// The orbit is finite. `size` is set when the graph was closed under every
/// state; `torsion` is set when finiteness came from a torsion certificate of
/// the period in the dual semigroup (the graph may then be partial).
struct FiniteOrbit {
  OrbitGraph graph;
  std::optional<std::size_t> size;
  std::optional<Torsion> torsion;
};

/// The orbit is provably infinite: the period contains a letter of a
/// non-bireversible closed component of the dual of a reversible,
/// non-bireversible G-automaton.
struct CertifiedInfinite {
  std::string reason;
  std::vector<Letter> gamma;  // letters of all such components
  Letter witness;             // a letter of the period lying in gamma
  std::size_t component = 0;  // index of its component in scc_analysis(dual(A))
};

/// No conclusion within the bounds. Both bounds zero means "not applicable".
struct BoundExceeded {
  OrbitGraph partial;
  std::size_t node_bound = 0;
  std::size_t step_bound = 0;
};

using OrbitVerdict = std::variant<FiniteOrbit, CertifiedInfinite, BoundExceeded>;

/// Breadth-first orbit exploration under all single states; undefined actions
/// add no edge. Finite if the orbit closes with at most node_bound nodes.
/// Each BFS level is expanded in parallel and merged in order, giving exactly
/// the graph of reference::orbit_explore.
OrbitVerdict orbit_explore(const Automaton& a, const UPWord& w, std::size_t node_bound);

namespace reference {
OrbitVerdict orbit_explore(const Automaton& a, const UPWord& w, std::size_t node_bound);
}  // namespace reference

/// Round-robin of orbit BFS (one node per step) and the torsion loop of
/// rev(per) in S(dual(A)) (one power per step); the first to conclude wins.
/// Torsion of rev(per) makes the orbit of every u per^omega finite; its
/// absence says nothing when pre is non-empty.
OrbitVerdict orbit_semidecide(const Automaton& a, const UPWord& w, std::size_t step_bound,
                              std::size_t node_bound);

/// orbit_semidecide on the purely periodic word v^omega.
OrbitVerdict orbit_finite_periodic(const Automaton& a, const Word& v, std::size_t step_bound,
                                   std::size_t node_bound = 10000);

/// Infinitude certificate for reversible, non-bireversible G-automata.
/// Returns BoundExceeded{{}, 0, 0} when the criterion does not apply.
OrbitVerdict certify_infinite(const Automaton& a, const UPWord& w);

/// Letters of the non-bireversible closed components of dual(A), when A is a
/// reversible but not bireversible G-automaton; empty otherwise.
std::vector<Letter> infinite_orbit_letters(const Automaton& a);

struct PeriodicExtraction {
  Word u;
  Word v;
  std::size_t k = 0;  // |u|
  std::size_t l = 0;  // |u| + |v|
};

/// First k < l <= index_bound with rev(a_1..a_k) == rev(a_1..a_l) in
/// S(dual(A)); then u v^omega = a_1..a_k (a_{k+1}..a_l)^omega has a finite
/// orbit. nullopt if no such pair exists within the bound, or if a prefix
/// element outgrows `max_states`.
std::optional<PeriodicExtraction> extract_periodic_finite(
    const Automaton& a, const UPWord& w, std::size_t index_bound,
    std::size_t max_states = kDefaultMachineLimit);

/// "pre (per)^w" with escaped tokens.
std::string format_upword(const Automaton& a, const UPWord& w);

std::string orbit_to_dot(const Automaton& a, const OrbitGraph& g);

}  // namespace orbitkit

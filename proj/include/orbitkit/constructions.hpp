#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "orbitkit/automaton.hpp"

namespace orbitkit {

/// q: 1/0 loop, 0/1 to id. q^i adds i to a binary number written LSB first.
Automaton adding_machine();

/// The five-state automaton a, b, c, d, id over {0, 1} generating the
/// Grigorchuk group.
Automaton grigorchuk();

/// Three-state G-automaton over {0, 1, 0', 1'} in which 1'0^omega has the
/// two-element orbit {1'0^omega, 0'0^omega} while every periodic word has an
/// infinite orbit.
Automaton pq_automaton();

/// Partial two-state automaton q -a/b-> p, p -a/a-> q, p -b/b-> p; reversible
/// and invertible, generating a semigroup of seven elements.
Automaton t1_automaton();

/// lambda(empty) = empty, lambda(p' p) = lambda(p) p' lambda(p).
/// |lambda(p)| = 2^|p| - 1.
StateSeq lambda(const StateSeq& p);

struct GillibertInput {
  Automaton base;      // a G-automaton
  std::string dollar;  // one of its states
};

/// The extension of a G-automaton by a binary counter that reads markers
/// (a_p, i), writes the counter carry pattern lambda(p) as state sequence and
/// hands over to $ on '#'. Base states and letters keep their ids.
struct GillibertAutomaton {
  Automaton automaton;
  std::size_t base_states = 0;
  std::size_t base_letters = 0;
  Letter star;
  Letter hash;
  std::vector<Letter> marker0;  // (a_p, 0), indexed by base state
  std::vector<Letter> marker1;  // (a_p, 1)
  State s;
  State t;
  State id;
  std::vector<State> hash_state;  // #_p
  State dollar;
};

/// Throws PreconditionError if the base is not a G-automaton or the dollar
/// token is not one of its states. New tokens are prefixed with '!' until they
/// do not clash with base tokens.
GillibertAutomaton gillibert_extend(const GillibertInput& in);

/// w = * (a_{p1},0) ... (a_{pl},0) # for p = p_l ... p_1 (base states).
Word reduction_word(const GillibertAutomaton& g, const StateSeq& p);

/// #_{lambda(p)}: lambda(p) with every base state p replaced by #_p.
StateSeq hash_lambda(const GillibertAutomaton& g, const StateSeq& p);

/// Whether t^{t_power} maps w' = reduction_word(p) without its '*' to itself
/// with successor sequence ($ lambda(p))^k.
bool dagger_check(const GillibertAutomaton& g, const StateSeq& p, std::size_t t_power,
                  std::size_t k);

/// dagger_check with t_power = k (|lambda(p)| + 1), together with
/// #_{lambda(p)} . # == lambda(p). p is over the base states; requires
/// k >= 1 and a non-empty p.
bool verify_dagger(const GillibertInput& in, const StateSeq& p, std::size_t k);

}  // namespace orbitkit

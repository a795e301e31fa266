#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "orbitkit/automaton.hpp"
#include "orbitkit/element.hpp"

namespace orbitkit {

/// Edge of a left Cayley graph: generator * element(from) == element(to).
struct CayleyEdge {
  std::size_t from;
  State generator;
  std::size_t to;

  friend bool operator==(const CayleyEdge&, const CayleyEdge&) = default;
};

/// Distinct semigroup elements, each named by its shortest (then earliest
/// found) state sequence, together with the left Cayley graph among them.
struct ElementSet {
  std::vector<StateSeq> elements;
  std::vector<CayleyEdge> edges;

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
};

struct Enumeration {
  ElementSet set;
  bool complete = false;  // closure reached within the bound
  std::size_t bound = 0;
};

/// Breadth-first enumeration of S(A) = Q^+ modulo function equality.
/// The minimal machines of all candidates of one product length are built in
/// parallel; deduplication is a serial merge in candidate order, so results
/// are identical to reference::semigroup_enumerate.
Enumeration semigroup_enumerate(const Automaton& a, std::size_t element_bound);

/// S s united with {s}: all left multiples of s by non-empty generator words,
/// plus s itself. An empty s yields the monoid S(A) with the identity.
Enumeration left_ideal(const Automaton& a, const StateSeq& s, std::size_t element_bound);

namespace reference {
// Serial versions comparing every candidate against every known element with
// reference::function_equal. Used to validate the kernels above.
Enumeration semigroup_enumerate(const Automaton& a, std::size_t element_bound);
Enumeration left_ideal(const Automaton& a, const StateSeq& s, std::size_t element_bound);
}  // namespace reference

struct Torsion {
  std::size_t i;  // s^i == s^j with i < j, j minimal
  std::size_t j;

  friend bool operator==(const Torsion&, const Torsion&) = default;
};

/// No coincidence among s^1..s^bound. `limited` is set when the search
/// stopped early because a power outgrew the machine limit; `bound` is then
/// the last power examined.
struct NoneFound {
  std::size_t bound;
  bool limited = false;

  friend bool operator==(const NoneFound&, const NoneFound&) = default;
};

using TorsionVerdict = std::variant<Torsion, NoneFound>;

/// Resumable search for the first coincidence s^i == s^j among s^1..s^bound.
/// One step() computes the next power and tests it against all earlier ones.
/// Powers are minimal machines; the search stops as exhausted once one would
/// exceed `max_states` (0 = no limit).
class PowerSearch {
 public:
  enum class Status { running, found, exhausted };

  PowerSearch(const Automaton& a, const StateSeq& base, std::size_t bound,
              std::size_t max_states = kDefaultMachineLimit);

  Status step();
  [[nodiscard]] Status status() const noexcept { return status_; }
  [[nodiscard]] std::size_t exponent() const noexcept { return exponent_; }
  [[nodiscard]] const std::optional<Torsion>& result() const noexcept { return result_; }
  [[nodiscard]] bool limited() const noexcept { return limited_; }
  [[nodiscard]] TorsionVerdict verdict() const;

 private:
  Element base_;
  Element current_;
  std::size_t bound_;
  std::size_t max_states_;
  std::size_t exponent_ = 0;
  bool limited_ = false;
  Status status_ = Status::running;
  std::unordered_map<Element, std::size_t, ElementHash> seen_;
  std::optional<Torsion> result_;
};

/// Torsion test of s among its first `bound` powers.
TorsionVerdict element_order(const Automaton& a, const StateSeq& s, std::size_t bound,
                             std::size_t max_states = kDefaultMachineLimit);

struct CrosscheckBounds {
  std::size_t element_bound = 200;
  std::size_t node_bound = 2000;
  std::size_t period_length = 1;  // sample every period of length 1..period_length
};

struct CrosscheckSample {
  enum class Outcome { finite, certified_infinite, unknown };
  Word period;
  Outcome outcome = Outcome::unknown;
  std::size_t nodes = 0;  // orbit nodes found (all of them when finite)
};

/// Compares the left ideal of rev(w) in S(dual(A)) with the orbits of
/// w * per^omega under A. A finite ideal forces every such orbit to be finite;
/// a certified infinite orbit next to a complete ideal is a contradiction.
struct CrosscheckReport {
  std::size_t ideal_size = 0;
  bool ideal_complete = false;
  std::vector<CrosscheckSample> samples;
  std::size_t contradictions = 0;

  [[nodiscard]] bool consistent() const noexcept { return contradictions == 0; }
};

CrosscheckReport ideal_vs_orbit_crosscheck(const Automaton& a, const Word& w,
                                           const CrosscheckBounds& bounds = {});

/// Left Cayley graph as Graphviz, nodes labelled by witnesses.
std::string cayley_to_dot(const Automaton& a, const ElementSet& set);

}  // namespace orbitkit

#include "enumerate.hpp"
#include "orbitkit/action.hpp"
#include "orbitkit/algebra.hpp"

namespace orbitkit::reference {

namespace {

// Plain BFS: every candidate is compared with every known element.
Enumeration enumerate(const Automaton& a, const std::vector<StateSeq>& seeds, std::size_t bound) {
  a.require_deterministic("semigroup enumeration");
  Enumeration out;
  out.bound = bound;
  auto& elements = out.set.elements;

  auto lookup = [&](const StateSeq& cand) -> std::optional<std::size_t> {
    for (std::size_t k = 0; k < elements.size(); ++k) {
      if (reference::function_equal(a, elements[k], cand)) return k;
    }
    return std::nullopt;
  };

  for (const auto& seed : seeds) {
    if (lookup(seed)) continue;
    if (elements.size() >= bound) return out;
    elements.push_back(seed);
  }
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t q = 0; q < a.num_states(); ++q) {
      StateSeq cand{state_at(q)};
      cand.insert(cand.end(), elements[i].begin(), elements[i].end());
      if (const auto k = lookup(cand)) {
        out.set.edges.push_back({i, state_at(q), *k});
        continue;
      }
      if (elements.size() >= bound) return out;
      elements.push_back(std::move(cand));
      out.set.edges.push_back({i, state_at(q), elements.size() - 1});
    }
  }
  out.complete = true;
  return out;
}

}  // namespace

Enumeration semigroup_enumerate(const Automaton& a, std::size_t element_bound) {
  return enumerate(a, detail::generator_seeds(a), element_bound);
}

Enumeration left_ideal(const Automaton& a, const StateSeq& s, std::size_t element_bound) {
  return enumerate(a, {s}, element_bound);
}

}  // namespace orbitkit::reference

#include "orbit_search.hpp"
#include "orbitkit/orbit.hpp"

namespace orbitkit::reference {

OrbitVerdict orbit_explore(const Automaton& a, const UPWord& w, std::size_t node_bound) {
  detail::OrbitSearch search(a, w, node_bound);
  while (search.step() == detail::OrbitSearch::Status::running) {
  }
  return search.verdict();
}

}  // namespace orbitkit::reference

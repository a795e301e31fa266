#pragma once

#include <vector>

#include "orbitkit/automaton.hpp"

namespace orbitkit::detail {

/// The single-state sequences (q) in state order.
std::vector<StateSeq> generator_seeds(const Automaton& a);

}  // namespace orbitkit::detail

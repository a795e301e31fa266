#pragma once

// Internal helpers for running a tuple of states column by column.

#include <cstdint>
#include <optional>
#include <vector>

#include "orbitkit/automaton.hpp"

namespace orbitkit::detail {

/// Feed one letter through the tuple (back() first), replacing every state by
/// its successor. Returns the letter leaving the top of the column, or nullopt
/// if some transition is missing. On failure `failed_layer` receives the index
/// of the stuck state; the tuple is then in an unspecified state.
inline std::optional<Letter> feed(const Automaton& a, StateSeq& tuple, Letter x,
                                  std::size_t* failed_layer = nullptr) {
  for (std::size_t k = tuple.size(); k-- > 0;) {
    const auto s = a.step(tuple[k], x);
    if (!s) {
      if (failed_layer) *failed_layer = k;
      return std::nullopt;
    }
    x = s->out;
    tuple[k] = s->dst;
  }
  return x;
}

inline void drop_identities(const Automaton& a, StateSeq& tuple) {
  std::erase_if(tuple, [&](State q) { return a.is_identity_state(q); });
}

struct VectorHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (const std::uint32_t x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    h ^= v.size();
    return static_cast<std::size_t>(h);
  }
};

// Key for a pair of tuples; the separator cannot be a state id.
inline std::vector<std::uint32_t> pair_key(const StateSeq& l, const StateSeq& r) {
  std::vector<std::uint32_t> key;
  key.reserve(l.size() + r.size() + 1);
  for (const State q : l) key.push_back(static_cast<std::uint32_t>(q));
  key.push_back(0xFFFFFFFFu);
  for (const State q : r) key.push_back(static_cast<std::uint32_t>(q));
  return key;
}

}  // namespace orbitkit::detail

#include <unordered_set>

#include "orbitkit/action.hpp"
#include "orbitkit/error.hpp"
#include "tuple.hpp"

namespace orbitkit::reference {

// Direct search over pairs of state tuples, as they stand after reading each
// prefix. Exponential in the worst case, but free of any minimization.
EqualityVerdict compare_functions(const Automaton& a, const StateSeq& lhs, const StateSeq& rhs,
                                  const EqualityOptions& options) {
  a.require_deterministic("function_equal");
  EqualityVerdict verdict;

  struct Node {
    StateSeq left;
    StateSeq right;
    std::size_t parent;
    Letter via;
  };
  constexpr std::size_t kRoot = static_cast<std::size_t>(-1);

  std::vector<Node> nodes;
  std::unordered_set<std::vector<std::uint32_t>, detail::VectorHash> visited;
  const auto witness_to = [&](std::size_t n, Letter last) {
    Word w{last};
    for (; n != kRoot && nodes[n].parent != kRoot; n = nodes[n].parent) w.push_back(nodes[n].via);
    return Word(w.rbegin(), w.rend());
  };

  const auto admit = [&](StateSeq l, StateSeq r, std::size_t parent, Letter via) {
    detail::drop_identities(a, l);
    detail::drop_identities(a, r);
    // Identical tuples act identically on everything that follows.
    if (l == r) return;
    if (!visited.insert(detail::pair_key(l, r)).second) return;
    if (options.max_pairs != 0 && visited.size() > options.max_pairs) {
      throw ResourceLimit("function_equal exceeded " + std::to_string(options.max_pairs) +
                          " visited pairs");
    }
    nodes.push_back({std::move(l), std::move(r), parent, via});
  };

  admit(lhs, rhs, kRoot, Letter{});
  for (std::size_t n = 0; n < nodes.size(); ++n) {
    for (std::size_t x = 0; x < a.num_letters(); ++x) {
      StateSeq l = nodes[n].left;
      StateSeq r = nodes[n].right;
      const auto out_l = detail::feed(a, l, letter_at(x));
      const auto out_r = detail::feed(a, r, letter_at(x));
      if (!out_l && !out_r) continue;
      if (!out_l || !out_r || *out_l != *out_r) {
        verdict.witness = witness_to(n, letter_at(x));
        verdict.pairs_visited = visited.size();
        return verdict;
      }
      admit(std::move(l), std::move(r), n, letter_at(x));
    }
  }
  verdict.equal = true;
  verdict.pairs_visited = visited.size();
  return verdict;
}

}  // namespace orbitkit::reference

#include "orbitkit/action.hpp"

#include <unordered_map>
#include <unordered_set>

#include "orbitkit/element.hpp"
#include "orbitkit/error.hpp"
#include "orbitkit/mealy.hpp"
#include "tuple.hpp"

namespace orbitkit {

Partial<ActResult> act(const Automaton& a, const StateSeq& seq, const Word& word) {
  a.require_deterministic("act");
  ActResult r{word, seq};
  for (std::size_t pos = 0; pos < r.output.size(); ++pos) {
    Letter x = r.output[pos];
    for (std::size_t k = r.next.size(); k-- > 0;) {
      const auto s = a.step(r.next[k], x);
      if (!s) return Undefined{r.next[k], x, pos, k};
      x = s->out;
      r.next[k] = s->dst;
    }
    r.output[pos] = x;
  }
  return r;
}

StateSeq as_states(const Word& w) {
  StateSeq s;
  s.reserve(w.size());
  for (const Letter x : w) s.push_back(as_state(x));
  return s;
}

Word as_letters(const StateSeq& s) {
  Word w;
  w.reserve(s.size());
  for (const State q : s) w.push_back(as_letter(q));
  return w;
}

Partial<ActResult> act_dual(const Automaton& a, const Word& seq, const StateSeq& word) {
  return act(dual(a), as_states(seq), as_letters(word));
}

StateSeq reduce_sequence(const Automaton& a, StateSeq seq) {
  detail::drop_identities(a, seq);
  return seq;
}

StateSeq power(const StateSeq& s, std::size_t n) {
  StateSeq out;
  out.reserve(s.size() * n);
  for (std::size_t i = 0; i < n; ++i) out.insert(out.end(), s.begin(), s.end());
  return out;
}

EqualityVerdict compare_functions(const Automaton& a, const StateSeq& lhs, const StateSeq& rhs,
                                  const EqualityOptions& options) {
  a.require_deterministic("function_equal");
  const std::size_t cap = options.max_pairs;
  const Element l = Element::of_sequence(a, lhs, cap);
  const Element r = Element::of_sequence(a, rhs, cap);

  // Breadth-first search of the product of the two minimal machines for the
  // shortlex-least word on which they disagree.
  struct Node {
    std::uint32_t x;
    std::uint32_t y;
    std::size_t parent;
    Letter via;
  };
  constexpr std::size_t kRoot = static_cast<std::size_t>(-1);
  std::vector<Node> nodes{{0, 0, kRoot, Letter{}}};
  std::unordered_map<std::uint64_t, std::size_t> seen{{0, 0}};
  const auto key = [&](std::uint32_t x, std::uint32_t y) {
    return static_cast<std::uint64_t>(x) * r.num_states() + y;
  };

  EqualityVerdict verdict;
  for (std::size_t n = 0; n < nodes.size(); ++n) {
    for (std::size_t c = 0; c < a.num_letters(); ++c) {
      const auto sl = l.step(nodes[n].x, letter_at(c));
      const auto sr = r.step(nodes[n].y, letter_at(c));
      if (!sl && !sr) continue;
      if (!sl || !sr || sl->out != sr->out) {
        Word w{letter_at(c)};
        for (std::size_t k = n; nodes[k].parent != kRoot; k = nodes[k].parent) {
          w.push_back(nodes[k].via);
        }
        verdict.witness.assign(w.rbegin(), w.rend());
        verdict.pairs_visited = nodes.size();
        return verdict;
      }
      if (seen.emplace(key(sl->dst, sr->dst), nodes.size()).second) {
        if (cap != 0 && nodes.size() >= cap) {
          throw ResourceLimit("function_equal exceeded " + std::to_string(cap) + " pairs");
        }
        nodes.push_back({sl->dst, sr->dst, n, letter_at(c)});
      }
    }
  }
  verdict.equal = true;
  verdict.pairs_visited = nodes.size();
  return verdict;
}

bool function_equal_on_upword(const Automaton& a, const StateSeq& lhs, const StateSeq& rhs,
                              const UPWord& w) {
  a.require_deterministic("function_equal_on_upword");
  StateSeq l = reduce_sequence(a, lhs);
  StateSeq r = reduce_sequence(a, rhs);

  // 0: keep going, 1: equal from here on, 2: unequal
  const auto step = [&](Letter x) -> int {
    if (l == r) return 1;
    const auto out_l = detail::feed(a, l, x);
    const auto out_r = detail::feed(a, r, x);
    if (!out_l && !out_r) return 1;
    if (!out_l || !out_r || *out_l != *out_r) return 2;
    detail::drop_identities(a, l);
    detail::drop_identities(a, r);
    return 0;
  };

  for (const Letter x : w.pre()) {
    if (const int s = step(x)) return s == 1;
  }
  std::unordered_set<std::vector<std::uint32_t>, detail::VectorHash> seen;
  while (seen.insert(detail::pair_key(l, r)).second) {
    for (const Letter x : w.per()) {
      if (const int s = step(x)) return s == 1;
    }
  }
  return true;
}

}  // namespace orbitkit

#include "orbitkit/upword.hpp"

#include <algorithm>
#include <unordered_map>

#include "orbitkit/action.hpp"
#include "orbitkit/error.hpp"
#include "tuple.hpp"

namespace orbitkit {

Word UPWord::prefix(std::size_t n) const {
  Word w;
  w.reserve(n);
  for (std::size_t i = 0; i < n; ++i) w.push_back(at(i));
  return w;
}

std::size_t primitive_root_length(const Word& w) {
  const std::size_t n = w.size();
  if (n == 0) return 0;
  std::vector<std::size_t> border(n, 0);
  for (std::size_t i = 1, k = 0; i < n; ++i) {
    while (k > 0 && w[i] != w[k]) k = border[k - 1];
    if (w[i] == w[k]) ++k;
    border[i] = k;
  }
  const std::size_t p = n - border[n - 1];
  return n % p == 0 ? p : n;
}

UPWord normalize(Word pre, Word per) {
  if (per.empty()) throw PreconditionError("the period of an ultimately periodic word is empty");
  per.resize(primitive_root_length(per));
  while (!pre.empty() && pre.back() == per.back()) {
    pre.pop_back();
    std::rotate(per.rbegin(), per.rbegin() + 1, per.rend());
  }
  return UPWord(std::move(pre), std::move(per));
}

std::vector<Letter> tail_letters(const UPWord& w) {
  std::vector<Letter> out;
  for (const Letter x : w.per()) {
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
  }
  return out;
}

std::size_t UPWordHash::operator()(const UPWord& w) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ull;
  const auto mix = [&](std::uint64_t x) {
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  for (const Letter x : w.pre()) mix(static_cast<std::uint64_t>(x));
  mix(0xFFFFFFFFull);
  for (const Letter x : w.per()) mix(static_cast<std::uint64_t>(x));
  return static_cast<std::size_t>(h);
}

Partial<UPWord> act_on_upword(const Automaton& a, const StateSeq& seq, const UPWord& w) {
  a.require_deterministic("act_on_upword");
  StateSeq tuple = seq;
  std::size_t position = 0;

  const auto run = [&](const Word& in, Word& out) -> std::optional<Undefined> {
    for (const Letter letter : in) {
      Letter x = letter;
      for (std::size_t k = tuple.size(); k-- > 0;) {
        const auto s = a.step(tuple[k], x);
        if (!s) return Undefined{tuple[k], x, position, k};
        x = s->out;
        tuple[k] = s->dst;
      }
      out.push_back(x);
      ++position;
    }
    return std::nullopt;
  };

  Word out_pre;
  if (auto failure = run(w.pre(), out_pre)) return *failure;

  // The tuple at the start of each pass over the period determines the rest of
  // the output, so the first repeated (reduced) tuple closes the cycle.
  std::unordered_map<std::vector<std::uint32_t>, std::size_t, detail::VectorHash> pass_of;
  std::vector<Word> passes;
  for (;;) {
    StateSeq reduced = tuple;
    detail::drop_identities(a, reduced);
    std::vector<std::uint32_t> key(reduced.size());
    std::transform(reduced.begin(), reduced.end(), key.begin(),
                   [](State q) { return static_cast<std::uint32_t>(q); });
    const auto [it, inserted] = pass_of.emplace(std::move(key), passes.size());
    if (!inserted) {
      const std::size_t start = it->second;
      for (std::size_t i = 0; i < start; ++i) {
        out_pre.insert(out_pre.end(), passes[i].begin(), passes[i].end());
      }
      Word out_per;
      for (std::size_t i = start; i < passes.size(); ++i) {
        out_per.insert(out_per.end(), passes[i].begin(), passes[i].end());
      }
      return normalize(std::move(out_pre), std::move(out_per));
    }
    Word pass;
    if (auto failure = run(w.per(), pass)) return *failure;
    passes.push_back(std::move(pass));
  }
}

}  // namespace orbitkit

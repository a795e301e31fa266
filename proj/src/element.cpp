#include "orbitkit/element.hpp"

#include <algorithm>
#include <unordered_map>

#include "orbitkit/error.hpp"
#include "tuple.hpp"

namespace orbitkit {

namespace {

// Coarsest partition of the states of a partial Mealy machine into classes of
// equal partial maps (Hopcroft's refinement). Missing transitions lead to an
// extra sink state with its own initial block. Returns the class of each
// state and the number of classes.
std::pair<std::vector<std::uint32_t>, std::size_t> minimal_classes(
    std::size_t m, const std::vector<std::uint32_t>& table) {
  constexpr std::uint32_t kNone = Element::kNone;
  const std::size_t n = table.size() / (2 * m);
  const std::size_t total = n + 1;
  const auto sink = static_cast<std::uint32_t>(n);
  const auto target = [&](std::size_t x, std::size_t a) -> std::uint32_t {
    if (x == n) return sink;
    const std::uint32_t d = table[2 * (x * m + a) + 1];
    return d == kNone ? sink : d;
  };

  // Predecessor lists per letter, in CSR layout.
  std::vector<std::uint32_t> pred_start(m * (total + 1), 0);
  std::vector<std::uint32_t> preds(m * total);
  for (std::size_t a = 0; a < m; ++a) {
    std::uint32_t* start = &pred_start[a * (total + 1)];
    for (std::size_t x = 0; x < total; ++x) ++start[target(x, a) + 1];
    for (std::size_t y = 0; y < total; ++y) start[y + 1] += start[y];
    std::vector<std::uint32_t> fill(start, start + total);
    for (std::size_t x = 0; x < total; ++x) {
      preds[a * total + fill[target(x, a)]++] = static_cast<std::uint32_t>(x);
    }
  }

  // Initial blocks by output signature; the sink gets one of its own.
  std::vector<std::uint32_t> blk(total);
  {
    std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, detail::VectorHash> ids;
    std::vector<std::uint32_t> sig(m + 1);
    for (std::size_t x = 0; x < total; ++x) {
      sig[0] = x == n ? 1 : 0;
      for (std::size_t a = 0; a < m; ++a) {
        const std::size_t k = 2 * (x * m + a);
        sig[1 + a] = (x == n || table[k + 1] == kNone) ? kNone : table[k];
      }
      blk[x] = ids.emplace(sig, static_cast<std::uint32_t>(ids.size())).first->second;
    }
  }
  std::size_t blocks = 1 + *std::max_element(blk.begin(), blk.end());

  // Elements grouped by block; each block is a range [first, end) with the
  // marked elements moved to [first, mid).
  std::vector<std::uint32_t> elems(total);
  std::vector<std::uint32_t> loc(total);
  std::vector<std::uint32_t> first(blocks + 1, 0);
  for (std::size_t x = 0; x < total; ++x) ++first[blk[x] + 1];
  for (std::size_t b = 0; b < blocks; ++b) first[b + 1] += first[b];
  std::vector<std::uint32_t> end(first.begin() + 1, first.end());
  first.pop_back();
  {
    std::vector<std::uint32_t> fill = first;
    for (std::size_t x = 0; x < total; ++x) {
      loc[x] = fill[blk[x]]++;
      elems[loc[x]] = static_cast<std::uint32_t>(x);
    }
  }
  std::vector<std::uint32_t> mid = first;

  std::vector<char> pending(blocks * m, 1);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> work;
  for (std::size_t b = 0; b < blocks; ++b) {
    for (std::size_t a = 0; a < m; ++a) {
      work.emplace_back(static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(a));
    }
  }

  std::vector<std::uint32_t> touched;
  std::vector<std::uint32_t> splitter;
  while (!work.empty()) {
    const auto [b, a] = work.back();
    work.pop_back();
    pending[b * m + a] = 0;

    splitter.assign(elems.begin() + first[b], elems.begin() + end[b]);
    const std::uint32_t* start = &pred_start[a * (total + 1)];
    for (const std::uint32_t y : splitter) {
      for (std::uint32_t k = start[y]; k < start[y + 1]; ++k) {
        const std::uint32_t x = preds[a * total + k];
        const std::uint32_t c = blk[x];
        if (loc[x] < mid[c]) continue;
        if (mid[c] == first[c]) touched.push_back(c);
        const std::uint32_t other = elems[mid[c]];
        std::swap(elems[loc[x]], elems[mid[c]]);
        loc[other] = loc[x];
        loc[x] = mid[c]++;
      }
    }

    for (const std::uint32_t c : touched) {
      if (mid[c] == end[c]) {
        mid[c] = first[c];
        continue;
      }
      // The marked part becomes a new block.
      const auto nb = static_cast<std::uint32_t>(blocks++);
      first.push_back(first[c]);
      end.push_back(mid[c]);
      mid.push_back(first[c]);
      first[c] = mid[c];
      for (std::uint32_t i = first[nb]; i < end[nb]; ++i) blk[elems[i]] = nb;
      pending.resize(blocks * m, 0);
      const bool new_smaller = end[nb] - first[nb] <= end[c] - first[c];
      for (std::size_t l = 0; l < m; ++l) {
        if (pending[c * m + l] || new_smaller) {
          pending[nb * m + l] = 1;
          work.emplace_back(nb, static_cast<std::uint32_t>(l));
        } else {
          pending[c * m + l] = 1;
          work.emplace_back(c, static_cast<std::uint32_t>(l));
        }
      }
    }
    touched.clear();
  }
  blk.pop_back();
  return {std::move(blk), blocks};
}

}  // namespace

Element::Element(std::size_t num_letters, std::vector<std::uint32_t> table) : m_(num_letters) {
  const std::size_t m = m_;
  if (m == 0) {
    n_ = 1;
    hash_ = 0x9E3779B97F4A7C15ull;
    return;
  }
  const auto [cls, count] = minimal_classes(m, table);

  // Quotient, numbered breadth-first from the class of state 0.
  std::vector<std::uint32_t> order(count, kNone);
  std::vector<std::uint32_t> rep{0};
  order[cls[0]] = 0;
  for (std::size_t h = 0; h < rep.size(); ++h) {
    for (std::size_t a = 0; a < m; ++a) {
      const std::uint32_t dst = table[2 * (rep[h] * m + a) + 1];
      if (dst != kNone && order[cls[dst]] == kNone) {
        order[cls[dst]] = static_cast<std::uint32_t>(rep.size());
        rep.push_back(dst);
      }
    }
  }
  n_ = rep.size();
  table_.resize(2 * n_ * m);
  for (std::size_t h = 0; h < n_; ++h) {
    for (std::size_t a = 0; a < m; ++a) {
      const std::size_t k = 2 * (rep[h] * m + a);
      const std::size_t o = 2 * (h * m + a);
      if (table[k + 1] == kNone) {
        table_[o] = kNone;
        table_[o + 1] = kNone;
      } else {
        table_[o] = table[k];
        table_[o + 1] = order[cls[table[k + 1]]];
      }
    }
  }
  hash_ = detail::VectorHash{}(table_) ^ (m_ * 0x9E3779B97F4A7C15ull);
}

Element Element::identity(std::size_t num_letters) {
  std::vector<std::uint32_t> table;
  for (std::size_t a = 0; a < num_letters; ++a) {
    table.push_back(static_cast<std::uint32_t>(a));
    table.push_back(0);
  }
  return Element(num_letters, std::move(table));
}

bool Element::is_identity() const noexcept {
  if (n_ != 1) return false;
  for (std::size_t a = 0; a < m_; ++a) {
    if (table_[2 * a] != a || table_[2 * a + 1] != 0) return false;
  }
  return true;
}

Element Element::of_state(const Automaton& a, State q) {
  a.require_deterministic("element construction");
  const std::size_t m = a.num_letters();
  std::vector<std::uint32_t> local(a.num_states(), kNone);
  std::vector<State> queue{q};
  local[index(q)] = 0;
  std::vector<std::uint32_t> table;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    for (std::size_t c = 0; c < m; ++c) {
      const auto s = a.step(queue[h], letter_at(c));
      if (!s) {
        table.push_back(kNone);
        table.push_back(kNone);
        continue;
      }
      std::uint32_t& id = local[index(s->dst)];
      if (id == kNone) {
        id = static_cast<std::uint32_t>(queue.size());
        queue.push_back(s->dst);
      }
      table.push_back(static_cast<std::uint32_t>(s->out));
      table.push_back(id);
    }
  }
  return Element(m, std::move(table));
}

Element Element::of_sequence(const Automaton& a, const StateSeq& s, std::size_t max_states) {
  a.require_deterministic("element construction");
  std::vector<std::optional<Element>> generators(a.num_states());
  Element e = identity(a.num_letters());
  for (std::size_t k = s.size(); k-- > 0;) {
    const State q = s[k];
    if (a.is_identity_state(q)) continue;
    auto& g = generators[index(q)];
    if (!g) g = of_state(a, q);
    e = compose(*g, e, max_states);
  }
  return e;
}

Element Element::compose(const Element& outer, const Element& inner, std::size_t max_states) {
  if (outer.m_ != inner.m_) throw PreconditionError("composing elements over different alphabets");
  if (outer.is_identity()) return inner;
  if (inner.is_identity()) return outer;

  const std::size_t m = inner.m_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> queue{{0, 0}};
  std::unordered_map<std::uint64_t, std::uint32_t> ids{{0, 0}};
  std::vector<std::uint32_t> table;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    const auto [xi, xo] = queue[h];
    for (std::size_t c = 0; c < m; ++c) {
      const auto si = inner.step(xi, letter_at(c));
      const auto so = si ? outer.step(xo, si->out) : std::nullopt;
      if (!so) {
        table.push_back(kNone);
        table.push_back(kNone);
        continue;
      }
      const std::uint64_t key = static_cast<std::uint64_t>(si->dst) * outer.n_ + so->dst;
      const auto [it, fresh] = ids.emplace(key, static_cast<std::uint32_t>(queue.size()));
      if (fresh) {
        if (max_states != 0 && queue.size() >= max_states) {
          throw ResourceLimit("product machine exceeded " + std::to_string(max_states) +
                              " states");
        }
        queue.emplace_back(si->dst, so->dst);
      }
      table.push_back(static_cast<std::uint32_t>(so->out));
      table.push_back(it->second);
    }
  }
  return Element(m, std::move(table));
}

}  // namespace orbitkit

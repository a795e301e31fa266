#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "orbitkit/error.hpp"
#include "orbitkit/mealy.hpp"

namespace orbitkit {

namespace {

// True iff no two transitions in `range` share the key.
template <class Range, class Key>
bool key_is_unique(const Range& range, Key key) {
  std::set<decltype(key(std::declval<const Transition&>()))> seen;
  for (const Transition& t : range) {
    if (!seen.insert(key(t)).second) return false;
  }
  return true;
}

auto by_input_target(const Transition& t) { return std::pair{index(t.in), index(t.dst)}; }
auto by_output_target(const Transition& t) { return std::pair{index(t.out), index(t.dst)}; }
auto by_source_output(const Transition& t) { return std::pair{index(t.src), index(t.out)}; }

}  // namespace

Classification classify(const Automaton& a) {
  Classification c;
  c.deterministic = a.is_deterministic();
  c.complete = true;
  for (std::size_t q = 0; q < a.num_states() && c.complete; ++q) {
    for (std::size_t x = 0; x < a.num_letters(); ++x) {
      if (a.out_degree(state_at(q), letter_at(x)) == 0) {
        c.complete = false;
        break;
      }
    }
  }
  const auto ts = a.transitions();
  c.invertible = key_is_unique(ts, by_source_output);
  c.reversible = key_is_unique(ts, by_input_target);
  c.inverse_reversible = key_is_unique(ts, by_output_target);
  c.bireversible = c.reversible && c.inverse_reversible;
  return c;
}

Automaton dual(const Automaton& a) {
  std::vector<Transition> ts;
  ts.reserve(a.transitions().size());
  for (const Transition& t : a.transitions()) {
    ts.push_back({as_state(t.in), as_letter(t.src), as_letter(t.dst), as_state(t.out)});
  }
  return Automaton(a.alphabet(), a.states(), std::move(ts));
}

Automaton inverse(const Automaton& a) {
  std::map<std::pair<std::size_t, std::size_t>, int> count;
  for (const Transition& t : a.transitions()) {
    if (++count[by_source_output(t)] > 1) throw NotInvertible(a.token(t.src), a.token(t.out));
  }
  std::vector<std::string> states;
  states.reserve(a.num_states());
  for (const auto& q : a.states()) {
    std::string renamed = q + std::string(kInverseSuffix);
    if (a.find_state(renamed)) {
      throw PreconditionError("inverse state name '" + renamed + "' collides with an existing state");
    }
    states.push_back(std::move(renamed));
  }
  std::vector<Transition> ts;
  ts.reserve(a.transitions().size());
  for (const Transition& t : a.transitions()) ts.push_back({t.src, t.out, t.in, t.dst});
  return Automaton(std::move(states), a.alphabet(), std::move(ts));
}

Automaton group_closure(const Automaton& a) {
  if (!classify(a).g_automaton()) {
    throw PreconditionError("group_closure requires a deterministic, complete, invertible automaton");
  }
  const Automaton inv = inverse(a);
  std::vector<std::string> states = a.states();
  for (const auto& q : inv.states()) {
    if (a.find_state(q)) {
      throw PreconditionError("inverse state name '" + q + "' collides with an existing state");
    }
    states.push_back(q);
  }
  const std::size_t shift = a.num_states();
  std::vector<Transition> ts(a.transitions().begin(), a.transitions().end());
  for (const Transition& t : inv.transitions()) {
    ts.push_back({state_at(index(t.src) + shift), t.in, t.out, state_at(index(t.dst) + shift)});
  }
  return Automaton(std::move(states), a.alphabet(), std::move(ts));
}

Automaton identity_completion(const Automaton& a, const std::string& id_token) {
  std::vector<std::string> states = a.states();
  State id;
  if (const auto existing = a.find_state(id_token)) {
    id = *existing;
  } else {
    id = state_at(states.size());
    states.push_back(id_token);
  }
  std::vector<Transition> ts(a.transitions().begin(), a.transitions().end());
  for (std::size_t q = 0; q < states.size(); ++q) {
    for (std::size_t x = 0; x < a.num_letters(); ++x) {
      const bool missing = q >= a.num_states() || a.out_degree(state_at(q), letter_at(x)) == 0;
      if (missing) ts.push_back({state_at(q), letter_at(x), letter_at(x), id});
    }
  }
  return Automaton(std::move(states), a.alphabet(), std::move(ts));
}

std::size_t SccReport::component_of(State q) const {
  for (std::size_t i = 0; i < components.size(); ++i) {
    const auto& s = components[i].states;
    if (std::find(s.begin(), s.end(), q) != s.end()) return i;
  }
  throw PreconditionError("state not covered by the SCC report");
}

SccReport scc_analysis(const Automaton& a) {
  const std::size_t n = a.num_states();
  std::vector<std::vector<std::size_t>> succ(n);
  for (const Transition& t : a.transitions()) succ[index(t.src)].push_back(index(t.dst));

  // Tarjan's algorithm.
  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> order(n, kUnvisited), low(n, 0), comp(n, kUnvisited);
  std::vector<char> on_stack(n, 0);
  std::vector<std::size_t> stack;
  std::size_t counter = 0;
  std::vector<std::vector<std::size_t>> found;

  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    order[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = 1;
    for (const std::size_t w : succ[v]) {
      if (order[w] == kUnvisited) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], order[w]);
      }
    }
    if (low[v] == order[v]) {
      std::vector<std::size_t> members;
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = 0;
        members.push_back(w);
      } while (w != v);
      std::sort(members.begin(), members.end());
      found.push_back(std::move(members));
    }
  };
  for (std::size_t v = 0; v < n; ++v) {
    if (order[v] == kUnvisited) visit(v);
  }
  std::sort(found.begin(), found.end(),
            [](const auto& l, const auto& r) { return l.front() < r.front(); });

  SccReport report;
  for (std::size_t c = 0; c < found.size(); ++c) {
    for (const std::size_t v : found[c]) comp[v] = c;
  }
  for (std::size_t c = 0; c < found.size(); ++c) {
    SccComponent component;
    for (const std::size_t v : found[c]) component.states.push_back(state_at(v));
    component.closed = true;
    std::vector<Transition> internal;
    for (const Transition& t : a.transitions()) {
      if (comp[index(t.src)] != c) continue;
      if (comp[index(t.dst)] != c) {
        component.closed = false;
      } else {
        internal.push_back(t);
      }
    }
    component.bireversible =
        key_is_unique(internal, by_input_target) && key_is_unique(internal, by_output_target);
    report.components.push_back(std::move(component));
  }
  return report;
}

}  // namespace orbitkit

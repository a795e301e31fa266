#include "orbitkit/constructions.hpp"

#include <algorithm>
#include <set>

#include "orbitkit/action.hpp"
#include "orbitkit/error.hpp"
#include "orbitkit/mealy.hpp"

namespace orbitkit {

namespace {

// Small token-level builder for the fixed automata below.
class Spec {
 public:
  Spec(std::vector<std::string> states, std::vector<std::string> alphabet)
      : states_(std::move(states)), alphabet_(std::move(alphabet)) {}

  Spec& edge(std::string_view src, std::string_view in, std::string_view out,
             std::string_view dst) {
    transitions_.push_back({state(src), letter(in), letter(out), state(dst)});
    return *this;
  }

  Spec& identity_loops(std::string_view q) {
    for (const auto& a : alphabet_) edge(q, a, a, q);
    return *this;
  }

  Automaton build() const { return Automaton(states_, alphabet_, transitions_); }

 private:
  static std::uint32_t find(const std::vector<std::string>& v, std::string_view t) {
    return static_cast<std::uint32_t>(std::find(v.begin(), v.end(), t) - v.begin());
  }
  State state(std::string_view t) const { return State{find(states_, t)}; }
  Letter letter(std::string_view t) const { return Letter{find(alphabet_, t)}; }

  std::vector<std::string> states_;
  std::vector<std::string> alphabet_;
  std::vector<Transition> transitions_;
};

}  // namespace

Automaton adding_machine() {
  return Spec({"q", "id"}, {"0", "1"})
      .edge("q", "0", "1", "id")
      .edge("q", "1", "0", "q")
      .identity_loops("id")
      .build();
}

Automaton grigorchuk() {
  return Spec({"a", "b", "c", "d", "id"}, {"0", "1"})
      .edge("a", "0", "1", "id")
      .edge("a", "1", "0", "id")
      .edge("b", "0", "0", "a")
      .edge("b", "1", "1", "c")
      .edge("c", "0", "0", "a")
      .edge("c", "1", "1", "d")
      .edge("d", "0", "0", "id")
      .edge("d", "1", "1", "b")
      .identity_loops("id")
      .build();
}

Automaton pq_automaton() {
  return Spec({"p", "q", "id"}, {"0", "1", "0'", "1'"})
      .edge("p", "0", "1", "id")
      .edge("p", "1", "0", "p")
      .edge("p", "0'", "0'", "id")
      .edge("p", "1'", "1'", "id")
      .edge("q", "0", "0", "q")
      .edge("q", "1", "1", "q")
      .edge("q", "0'", "1'", "id")
      .edge("q", "1'", "0'", "q")
      .identity_loops("id")
      .build();
}

Automaton t1_automaton() {
  return Spec({"q", "p"}, {"a", "b"})
      .edge("q", "a", "b", "p")
      .edge("p", "a", "a", "q")
      .edge("p", "b", "b", "p")
      .build();
}

StateSeq lambda(const StateSeq& p) {
  // Unrolled recursion: peel states off the back, doubling around each.
  StateSeq out;
  for (std::size_t k = p.size(); k-- > 0;) {
    StateSeq next = out;
    next.push_back(p[k]);
    next.insert(next.end(), out.begin(), out.end());
    out = std::move(next);
  }
  return out;
}

GillibertAutomaton gillibert_extend(const GillibertInput& in) {
  const Automaton& base = in.base;
  if (!classify(base).g_automaton()) {
    throw PreconditionError("gillibert_extend: base automaton is not a G-automaton");
  }
  const auto dollar = base.find_state(in.dollar);
  if (!dollar) {
    throw PreconditionError("gillibert_extend: '" + in.dollar + "' is not a state of the base");
  }

  std::set<std::string, std::less<>> taken(base.states().begin(), base.states().end());
  taken.insert(base.alphabet().begin(), base.alphabet().end());
  auto fresh = [&](std::string token) {
    while (taken.contains(token)) token.insert(token.begin(), '!');
    taken.insert(token);
    return token;
  };

  const std::size_t n = base.num_states();
  const std::size_t m = base.num_letters();

  GillibertAutomaton g;
  g.base_states = n;
  g.base_letters = m;
  g.dollar = *dollar;

  std::vector<std::string> alphabet = base.alphabet();
  auto add_letter = [&](std::string token) {
    alphabet.push_back(fresh(std::move(token)));
    return letter_at(alphabet.size() - 1);
  };
  g.star = add_letter("*");
  g.hash = add_letter("#");
  for (std::size_t p = 0; p < n; ++p) {
    const std::string& name = base.token(state_at(p));
    g.marker0.push_back(add_letter("(a_" + name + ",0)"));
    g.marker1.push_back(add_letter("(a_" + name + ",1)"));
  }

  std::vector<std::string> states = base.states();
  auto add_state = [&](std::string token) {
    states.push_back(fresh(std::move(token)));
    return state_at(states.size() - 1);
  };
  g.s = add_state("s");
  g.t = add_state("t");
  g.id = add_state("id");
  for (std::size_t p = 0; p < n; ++p) {
    g.hash_state.push_back(add_state("#_" + base.token(state_at(p))));
  }

  std::vector<Transition> delta(base.transitions().begin(), base.transitions().end());
  delta.push_back({g.s, g.star, g.star, g.t});
  delta.push_back({g.t, g.hash, g.hash, g.dollar});
  for (std::size_t p = 0; p < n; ++p) {
    delta.push_back({g.t, g.marker1[p], g.marker0[p], g.t});
    delta.push_back({g.t, g.marker0[p], g.marker1[p], g.hash_state[p]});
  }
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      delta.push_back({g.hash_state[p], g.marker0[q], g.marker0[q], g.hash_state[p]});
      delta.push_back({g.hash_state[p], g.marker1[q], g.marker1[q], g.hash_state[p]});
    }
    delta.push_back({g.hash_state[p], g.hash, g.hash, state_at(p)});
  }
  for (std::size_t a = 0; a < alphabet.size(); ++a) {
    delta.push_back({g.id, letter_at(a), letter_at(a), g.id});
  }

  // Every remaining (state, letter) pair becomes an identity move into id.
  std::vector<char> present(states.size() * alphabet.size(), 0);
  for (const auto& tr : delta) present[index(tr.src) * alphabet.size() + index(tr.in)] = 1;
  for (std::size_t q = 0; q < states.size(); ++q) {
    for (std::size_t a = 0; a < alphabet.size(); ++a) {
      if (!present[q * alphabet.size() + a]) {
        delta.push_back({state_at(q), letter_at(a), letter_at(a), g.id});
      }
    }
  }

  g.automaton = Automaton(std::move(states), std::move(alphabet), std::move(delta));
  return g;
}

namespace {

void require_base_states(const GillibertAutomaton& g, const StateSeq& p) {
  for (const State q : p) {
    if (index(q) >= g.base_states) {
      throw PreconditionError("state sequence must consist of base states");
    }
  }
}

}  // namespace

Word reduction_word(const GillibertAutomaton& g, const StateSeq& p) {
  require_base_states(g, p);
  Word w{g.star};
  // p = p_l ... p_1 with p_1 = back(), and the markers run p_1 ... p_l.
  for (std::size_t k = p.size(); k-- > 0;) w.push_back(g.marker0[index(p[k])]);
  w.push_back(g.hash);
  return w;
}

StateSeq hash_lambda(const GillibertAutomaton& g, const StateSeq& p) {
  require_base_states(g, p);
  StateSeq out = lambda(p);
  for (State& q : out) q = g.hash_state[index(q)];
  return out;
}

bool dagger_check(const GillibertAutomaton& g, const StateSeq& p, std::size_t t_power,
                  std::size_t k) {
  Word w = reduction_word(g, p);
  w.erase(w.begin());
  const auto r = act(g.automaton, StateSeq(t_power, g.t), w);
  if (!defined(r)) return false;
  const auto& result = std::get<ActResult>(r);

  StateSeq block{g.dollar};
  const StateSeq lam = lambda(p);
  block.insert(block.end(), lam.begin(), lam.end());
  return result.output == w && result.next == power(block, k);
}

bool verify_dagger(const GillibertInput& in, const StateSeq& p, std::size_t k) {
  if (k == 0) throw PreconditionError("verify_dagger: k must be at least 1");
  if (p.empty()) throw PreconditionError("verify_dagger: p must be non-empty");
  const GillibertAutomaton g = gillibert_extend(in);
  const std::size_t period = lambda(p).size() + 1;
  if (!dagger_check(g, p, k * period, k)) return false;

  const auto r = act(g.automaton, hash_lambda(g, p), Word{g.hash});
  return defined(r) && std::get<ActResult>(r).next == lambda(p);
}

}  // namespace orbitkit

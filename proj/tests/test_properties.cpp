#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "corpus.hpp"
#include "oracles.hpp"
#include "orbitkit/action.hpp"
#include "orbitkit/algebra.hpp"
#include "orbitkit/constructions.hpp"
#include "orbitkit/mealy.hpp"
#include "orbitkit/orbit.hpp"

using namespace orbitkit;

namespace {

oracle::RandomShape any_shape(std::mt19937_64& rng) {
  oracle::RandomShape shape;
  shape.states = 1 + rng() % 4;
  shape.letters = 1 + rng() % 3;
  shape.complete = rng() % 2;
  shape.drop = 0.3;
  shape.invertible = rng() % 2;
  shape.reversible = rng() % 2;
  return shape;
}

// Nondeterministic automata are out of reach of the random generator, so a
// duplicate transition is added by hand.
Automaton with_duplicate(const Automaton& a) {
  std::vector<Transition> ts(a.transitions().begin(), a.transitions().end());
  if (ts.empty() || a.num_letters() < 2) return a;
  Transition t = ts.front();
  t.out = letter_at((index(t.out) + 1) % a.num_letters());
  ts.push_back(t);
  return Automaton(a.states(), a.alphabet(), ts);
}

std::vector<Automaton> corpus_automata() {
  std::vector<Automaton> out;
  for (const char* name : {"adding.aut", "grigorchuk.aut", "grigorchuk-dual.aut", "pq.aut",
                           "t1.aut", "rnb.aut"}) {
    out.push_back(corpus(name));
  }
  return out;
}

}  // namespace

TEST_CASE("classification of the dual") {
  std::mt19937_64 rng(17);
  for (int round = 0; round < 300; ++round) {
    Automaton a = oracle::random_automaton(rng, any_shape(rng));
    if (rng() % 5 == 0) a = with_duplicate(a);
    const Classification c = classify(a);
    const Classification d = classify(dual(a));
    CHECK(d.reversible == c.invertible);
    CHECK(d.invertible == c.reversible);
    CHECK(d.deterministic == c.deterministic);
    CHECK(d.complete == c.complete);
  }
}

TEST_CASE("complete reversible automata act bijectively") {
  std::mt19937_64 rng(23);
  std::vector<Automaton> cases;
  for (const Automaton& a : corpus_automata()) {
    const Classification c = classify(a);
    if (c.complete && c.reversible && c.deterministic) cases.push_back(a);
  }
  CHECK(cases.size() >= 2);
  for (int round = 0; round < 30; ++round) {
    oracle::RandomShape shape = any_shape(rng);
    shape.complete = true;
    shape.reversible = true;
    cases.push_back(oracle::random_automaton(rng, shape));
  }
  for (const Automaton& a : cases) {
    const std::size_t n = a.num_states();
    for (const Word& u : oracle::words_up_to(a.num_letters(), 3)) {
      std::set<State> images;
      std::set<std::pair<State, State>> pairs;
      for (std::size_t x = 0; x < n; ++x) {
        images.insert(oracle::run_state(a, state_at(x), u)->second);
        for (std::size_t y = 0; y < n; ++y) {
          const auto r = oracle::run(a, {state_at(x), state_at(y)}, u);
          pairs.emplace(r->next[0], r->next[1]);
        }
      }
      CHECK(images.size() == n);
      CHECK(pairs.size() == n * n);
    }
    for (const auto& comp : scc_analysis(a).components) CHECK(comp.closed);
  }
}

TEST_CASE("strongly connected components partition the states") {
  std::mt19937_64 rng(29);
  for (int round = 0; round < 200; ++round) {
    const Automaton a = oracle::random_automaton(rng, any_shape(rng));
    const SccReport r = scc_analysis(a);
    std::vector<int> seen(a.num_states(), 0);
    for (std::size_t k = 0; k < r.components.size(); ++k) {
      for (const State q : r.components[k].states) {
        ++seen[index(q)];
        CHECK(r.component_of(q) == k);
      }
    }
    CHECK(std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; }));
    // Mutual reachability inside a component, by transitive closure.
    const std::size_t n = a.num_states();
    std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
    for (std::size_t x = 0; x < n; ++x) reach[x][x] = 1;
    for (const Transition& t : a.transitions()) reach[index(t.src)][index(t.dst)] = 1;
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) reach[i][j] |= reach[i][k] && reach[k][j];
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const bool same = r.component_of(state_at(i)) == r.component_of(state_at(j));
        CHECK(same == (reach[i][j] && reach[j][i]));
      }
    }
  }
}

TEST_CASE("finite semigroup iff finite dual semigroup") {
  for (const Automaton& a : corpus_automata()) {
    const Enumeration x = semigroup_enumerate(a, 300);
    const Enumeration y = semigroup_enumerate(dual(a), 300);
    // One side closing forces the other to close at this scale too.
    if (x.complete || y.complete) CHECK(x.complete == y.complete);
  }
}

TEST_CASE("torsion in the dual matches finite periodic orbits for generators") {
  for (const Automaton& a : corpus_automata()) {
    const Automaton d = dual(a);
    for (std::size_t x = 0; x < a.num_letters(); ++x) {
      const TorsionVerdict t = element_order(d, {state_at(x)}, 64, 1 << 14);
      const OrbitVerdict o = orbit_explore(a, normalize({}, {letter_at(x)}), 4000);
      const bool torsion = std::holds_alternative<Torsion>(t);
      const bool finite = std::holds_alternative<FiniteOrbit>(o);
      if (torsion) CHECK(finite);
      if (finite) CHECK(torsion);
    }
  }
}

TEST_CASE("finite orbits of random periodic words come with torsion") {
  std::mt19937_64 rng(31);
  for (int round = 0; round < 150; ++round) {
    oracle::RandomShape shape = any_shape(rng);
    shape.complete = true;
    shape.invertible = true;
    const Automaton a = oracle::random_automaton(rng, shape);
    const Word v = oracle::random_word(rng, a.num_letters(), 1, 3);
    const OrbitVerdict o = orbit_explore(a, normalize({}, v), 500);
    const auto* f = std::get_if<FiniteOrbit>(&o);
    if (!f) continue;
    StateSeq rev = as_states(v);
    std::reverse(rev.begin(), rev.end());
    const TorsionVerdict t = element_order(dual(a), rev, 256, 1 << 14);
    if (const auto* none = std::get_if<NoneFound>(&t); none && none->limited) continue;
    CHECK(std::holds_alternative<Torsion>(t));
  }
}

TEST_CASE("certified words never close") {
  const Automaton a = oracle::search_reversible_not_bireversible();
  const auto gamma = infinite_orbit_letters(a);
  std::mt19937_64 rng(37);
  for (int round = 0; round < 20; ++round) {
    const UPWord w = normalize(oracle::random_word(rng, a.num_letters(), 0, 2),
                               oracle::random_word(rng, a.num_letters(), 1, 3));
    if (!std::holds_alternative<CertifiedInfinite>(certify_infinite(a, w))) continue;
    CHECK(std::holds_alternative<BoundExceeded>(orbit_explore(a, w, 1000)));
  }
}

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <tuple>

#include "oracles.hpp"
#include "orbitkit/action.hpp"
#include "orbitkit/algebra.hpp"
#include "orbitkit/constructions.hpp"
#include "orbitkit/mealy.hpp"

using namespace orbitkit;

namespace {

using NamedEdge = std::tuple<std::string, std::string, std::string>;

std::set<NamedEdge> named_edges(const Automaton& a, const ElementSet& set) {
  std::set<NamedEdge> out;
  for (const CayleyEdge& e : set.edges) {
    out.emplace(a.format(set.elements[e.from]), a.token(e.generator),
                a.format(set.elements[e.to]));
  }
  return out;
}

std::vector<std::string> names(const Automaton& a, const ElementSet& set) {
  std::vector<std::string> out;
  for (const auto& e : set.elements) out.push_back(a.format(e));
  return out;
}

// Cayley soundness checked with the tuple-pair reference.
void audit(const Automaton& a, const ElementSet& set) {
  for (std::size_t i = 0; i < set.elements.size(); ++i) {
    for (std::size_t j = i + 1; j < set.elements.size(); ++j) {
      CHECK_FALSE(reference::function_equal(a, set.elements[i], set.elements[j]));
    }
  }
  for (const CayleyEdge& e : set.edges) {
    StateSeq lhs{e.generator};
    lhs.insert(lhs.end(), set.elements[e.from].begin(), set.elements[e.from].end());
    CHECK(reference::function_equal(a, lhs, set.elements[e.to]));
  }
}

}  // namespace

TEST_CASE("the semigroup of T1 and its left Cayley graph") {
  const Automaton t1 = t1_automaton();
  const Enumeration e = semigroup_enumerate(t1, 100);
  REQUIRE(e.complete);
  CHECK(names(t1, e.set) ==
        std::vector<std::string>{"q", "p", "q q", "p q", "q p", "p p", "q p p"});
  // Expected left Cayley graph: an edge x -g-> y means g x = y.
  const std::set<NamedEdge> expected{
      {"p", "p", "p p"},       {"p", "q", "q p"},       {"q", "p", "p q"},
      {"q", "q", "q q"},       {"p p", "p", "p p"},     {"p p", "q", "q p p"},
      {"q p", "p", "q p"},     {"q p", "q", "q q"},     {"p q", "p", "p q"},
      {"p q", "q", "q q"},     {"q q", "p", "q q"},     {"q q", "q", "q q"},
      {"q p p", "p", "q p p"}, {"q p p", "q", "q q"},
  };
  CHECK(named_edges(t1, e.set) == expected);
  audit(t1, e.set);
}

TEST_CASE("enumeration bounds") {
  const Automaton add = adding_machine();
  const Enumeration e = semigroup_enumerate(add, 50);
  CHECK_FALSE(e.complete);
  CHECK(e.bound == 50);
  CHECK(e.set.elements.size() == 50);
  // The elements are q, id, q^2, q^3, ...
  CHECK(add.format(e.set.elements[0]) == "q");
  CHECK(add.format(e.set.elements[1]) == "id");
  CHECK(e.set.elements[10] == power(add.parse_states("q"), 10));

  const Automaton only_id = parse_automaton("id 0 0 id\n");
  const Enumeration one = semigroup_enumerate(only_id, 5);
  CHECK(one.complete);
  CHECK(one.set.elements.size() == 1);

  CHECK_FALSE(semigroup_enumerate(grigorchuk(), 200).complete);
}

TEST_CASE("left ideals") {
  const Automaton t1 = t1_automaton();
  const Enumeration qq = left_ideal(t1, t1.parse_states("q q"), 50);
  CHECK(qq.complete);
  CHECK(names(t1, qq.set) == std::vector<std::string>{"q q"});

  const Enumeration qp = left_ideal(t1, t1.parse_states("q p"), 50);
  CHECK(qp.complete);
  CHECK(names(t1, qp.set) == std::vector<std::string>{"q p", "q q p"});
  CHECK(reference::function_equal(t1, t1.parse_states("q q p"), t1.parse_states("q q")));

  const Automaton only_id = parse_automaton("id 0 0 id\n");
  CHECK(left_ideal(only_id, only_id.parse_states("id"), 5).set.elements.size() == 1);

  const Automaton d = dual(adding_machine());
  CHECK_FALSE(left_ideal(d, d.parse_states("0"), 50).complete);

  // The ideal of the empty sequence is the monoid.
  const Enumeration monoid = left_ideal(t1, {}, 50);
  const Enumeration semigroup = semigroup_enumerate(t1, 50);
  CHECK(monoid.complete);
  CHECK(monoid.set.elements.size() == semigroup.set.elements.size() + 1);
  CHECK(monoid.set.elements[0].empty());
}

TEST_CASE("kernels match the serial reference") {
  std::mt19937_64 rng(314);
  for (int round = 0; round < 40; ++round) {
    oracle::RandomShape shape;
    shape.states = 1 + rng() % 3;
    shape.letters = 1 + rng() % 3;
    shape.complete = rng() % 2;
    shape.drop = 0.3;
    shape.invertible = rng() % 2;
    shape.reversible = rng() % 2;
    const Automaton a = oracle::random_automaton(rng, shape);
    const std::size_t bound = 1 + rng() % 40;
    const Enumeration x = semigroup_enumerate(a, bound);
    const Enumeration y = reference::semigroup_enumerate(a, bound);
    CHECK(x.complete == y.complete);
    CHECK(x.set == y.set);
    audit(a, x.set);

    const StateSeq s = oracle::random_sequence(rng, a.num_states(), 2);
    const Enumeration l = left_ideal(a, s, bound);
    const Enumeration r = reference::left_ideal(a, s, bound);
    CHECK(l.complete == r.complete);
    CHECK(l.set == r.set);
  }
}

TEST_CASE("element orders") {
  const Automaton g = grigorchuk();
  CHECK(element_order(g, g.parse_states("a"), 16) == TorsionVerdict{Torsion{1, 3}});
  CHECK(function_equal(g, g.parse_states("a a"), {}));

  const Automaton t1 = t1_automaton();
  CHECK(element_order(t1, t1.parse_states("q"), 16) == TorsionVerdict{Torsion{2, 3}});

  const Automaton add = adding_machine();
  CHECK(element_order(add, add.parse_states("q"), 64) == TorsionVerdict{NoneFound{64}});
  CHECK(element_order(add, add.parse_states("id"), 8) == TorsionVerdict{Torsion{1, 2}});
}

TEST_CASE("order search stops at the machine limit") {
  const Automaton d = dual(pq_automaton());
  const TorsionVerdict v = element_order(d, d.parse_states("0"), 256, 1024);
  REQUIRE(std::holds_alternative<NoneFound>(v));
  const NoneFound n = std::get<NoneFound>(v);
  CHECK(n.limited);
  CHECK(n.bound < 256);

  PowerSearch search(d, d.parse_states("0"), 4);
  CHECK(search.step() == PowerSearch::Status::running);
  CHECK(search.exponent() == 1);
  while (search.step() == PowerSearch::Status::running) {
  }
  CHECK(search.status() == PowerSearch::Status::exhausted);
  CHECK(search.verdict() == TorsionVerdict{NoneFound{4}});
}

TEST_CASE("torsion agrees with brute-force powers") {
  constexpr std::size_t kBound = 8;
  std::size_t limited = 0;
  std::mt19937_64 rng(2718);
  for (int round = 0; round < 100; ++round) {
    oracle::RandomShape shape;
    shape.states = 1 + rng() % 3;
    shape.letters = 1 + rng() % 2;
    shape.complete = rng() % 2;
    shape.drop = 0.3;
    const Automaton a = oracle::random_automaton(rng, shape);
    const StateSeq s = oracle::random_sequence(rng, a.num_states(), 2);
    const TorsionVerdict v = element_order(a, s, kBound, 1 << 12);
    std::optional<Torsion> want;
    for (std::size_t j = 2; j <= kBound && !want; ++j) {
      for (std::size_t i = 1; i < j && !want; ++i) {
        if (reference::function_equal(a, power(s, i), power(s, j))) want = Torsion{i, j};
      }
    }
    // Non-invertible powers can outgrow the machine limit; the search then
    // stops early and must not have skipped any torsion below that point.
    if (const auto* none = std::get_if<NoneFound>(&v); none && none->limited) {
      ++limited;
      CHECK(none->bound < kBound);
      if (want) CHECK(want->j > none->bound);
    } else if (want) {
      CHECK(v == TorsionVerdict{*want});
    } else {
      CHECK(v == TorsionVerdict{NoneFound{kBound}});
    }
  }
  CHECK(limited > 0);
}

TEST_CASE("ideal and orbit crosscheck") {
  const Automaton add = adding_machine();
  CrosscheckBounds bounds;
  bounds.element_bound = 50;
  bounds.node_bound = 300;
  const CrosscheckReport r = ideal_vs_orbit_crosscheck(add, add.parse_word("0"), bounds);
  CHECK_FALSE(r.ideal_complete);
  CHECK(r.consistent());
  REQUIRE(r.samples.size() == 2);
  CHECK(r.samples[0].outcome == CrosscheckSample::Outcome::unknown);

  const Automaton t1 = t1_automaton();
  bounds.period_length = 2;
  const CrosscheckReport s = ideal_vs_orbit_crosscheck(t1, t1.parse_word("a"), bounds);
  CHECK(s.ideal_complete);
  CHECK(s.consistent());
  CHECK(s.samples.size() == 4);  // a, b, a b, b a; a a and b b are not primitive
  for (const auto& sample : s.samples) {
    CHECK(sample.outcome == CrosscheckSample::Outcome::finite);
  }

  const CrosscheckReport e = ideal_vs_orbit_crosscheck(t1, {}, bounds);
  CHECK(e.ideal_size == semigroup_enumerate(dual(t1), 200).set.elements.size() + 1);
}

TEST_CASE("cayley dot") {
  const Automaton t1 = t1_automaton();
  const Enumeration e = left_ideal(t1, {}, 50);
  const std::string dot = cayley_to_dot(t1, e.set);
  CHECK(dot.find("n0 [label=\"1\"]") != std::string::npos);
  CHECK(dot.find("[label=\"q p p\"]") != std::string::npos);
}

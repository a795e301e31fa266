#include <doctest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "orbitkit/action.hpp"
#include "orbitkit/constructions.hpp"
#include "orbitkit/error.hpp"
#include "orbitkit/upword.hpp"

using namespace orbitkit;

namespace {

Word letters(std::initializer_list<int> xs) {
  Word w;
  for (const int x : xs) w.push_back(letter_at(static_cast<std::size_t>(x)));
  return w;
}

bool canonical(const UPWord& w) {
  return primitive_root_length(w.per()) == w.per().size() &&
         (w.pre().empty() || w.pre().back() != w.per().back());
}

}  // namespace

TEST_CASE("normalize examples") {
  const UPWord a = normalize({}, letters({0, 0}));
  CHECK(a.pre().empty());
  CHECK(a.per() == letters({0}));

  const UPWord b = normalize(letters({1}), letters({0, 1}));
  CHECK(b.pre().empty());
  CHECK(b.per() == letters({1, 0}));

  const UPWord c = normalize(letters({3}), letters({0}));
  CHECK(c.pre() == letters({3}));
  CHECK(c.per() == letters({0}));

  CHECK(normalize(letters({0}), letters({1, 0})) == normalize(letters({0, 1}), letters({0, 1})));
  CHECK_FALSE(normalize({}, letters({0})) == normalize({}, letters({1})));
  CHECK(upword_equal(b, b));
  CHECK_THROWS_AS(normalize(letters({0}), {}), PreconditionError);
}

TEST_CASE("primitive roots") {
  CHECK(primitive_root_length(letters({0, 1, 0, 1})) == 2);
  CHECK(primitive_root_length(letters({0, 1, 0})) == 3);
  CHECK(primitive_root_length(letters({2})) == 1);
  CHECK(primitive_root_length(letters({0, 0, 1, 0, 0, 1, 0, 0, 1})) == 3);
  CHECK(primitive_root_length({}) == 0);
}

TEST_CASE("tail letters") {
  CHECK(tail_letters(normalize(letters({5}), letters({0}))) == letters({0}));
  CHECK(tail_letters(normalize({}, letters({0, 1}))) == letters({0, 1}));
  CHECK(tail_letters(normalize(letters({0, 1, 2}), letters({3}))) == letters({3}));
  CHECK(tail_letters(normalize({}, letters({1, 0, 1, 1}))) == letters({1, 0}));
}

TEST_CASE("canonical forms decide omega-word equality") {
  std::mt19937_64 rng(2024);
  for (int round = 0; round < 20000; ++round) {
    const std::size_t m = 1 + rng() % 2;
    const Word pre1 = oracle::random_word(rng, m, 0, 4);
    const Word per1 = oracle::random_word(rng, m, 1, 4);
    Word pre2 = oracle::random_word(rng, m, 0, 4);
    Word per2 = oracle::random_word(rng, m, 1, 4);
    if (rng() % 2 == 0) {
      // Another representation of the first word: unroll some letters and
      // repeat the period.
      const std::size_t extra = rng() % 5;
      pre2 = oracle::expand(pre1, per1, pre1.size() + extra);
      const std::size_t rot = (pre2.size() - pre1.size()) % per1.size();
      per2.clear();
      for (std::size_t r = 0; r < 1 + rng() % 3; ++r) {
        for (std::size_t i = 0; i < per1.size(); ++i) per2.push_back(per1[(rot + i) % per1.size()]);
      }
    }
    const UPWord a = normalize(pre1, per1);
    const UPWord b = normalize(pre2, per2);
    CHECK(canonical(a));
    CHECK(canonical(b));
    const std::size_t n =
        pre1.size() + pre2.size() + 2 * std::lcm(per1.size(), per2.size());
    const bool same = oracle::expand(pre1, per1, n) == oracle::expand(pre2, per2, n);
    CHECK((a == b) == same);
    CHECK(a.prefix(n) == oracle::expand(pre1, per1, n));
    if (same) CHECK(UPWordHash{}(a) == UPWordHash{}(b));
  }
}

TEST_CASE("act on ultimately periodic words") {
  const Automaton add = adding_machine();
  const auto r = act_on_upword(add, add.parse_states("q"), normalize({}, add.parse_word("0")));
  REQUIRE(defined(r));
  CHECK(std::get<UPWord>(r) == normalize(add.parse_word("1"), add.parse_word("0")));

  const Automaton pq = pq_automaton();
  const auto s =
      act_on_upword(pq, pq.parse_states("q"), normalize(pq.parse_word("1'"), pq.parse_word("0")));
  REQUIRE(defined(s));
  CHECK(std::get<UPWord>(s) == normalize(pq.parse_word("0'"), pq.parse_word("0")));

  const UPWord w = normalize(pq.parse_word("0 1"), pq.parse_word("1' 0"));
  const auto e = act_on_upword(pq, {}, w);
  REQUIRE(defined(e));
  CHECK(std::get<UPWord>(e) == w);

  const Automaton t1 = t1_automaton();
  const auto u = act_on_upword(t1, t1.parse_states("q q"), normalize({}, t1.parse_word("a")));
  REQUIRE_FALSE(defined(u));
  CHECK(std::get<Undefined>(u).position == 0);
}

TEST_CASE("act on upwords agrees with act on prefixes") {
  std::mt19937_64 rng(8);
  for (int round = 0; round < 400; ++round) {
    oracle::RandomShape shape;
    shape.states = 1 + rng() % 3;
    shape.letters = 1 + rng() % 3;
    shape.complete = rng() % 3 != 0;
    shape.drop = 0.15;
    shape.invertible = rng() % 2;
    const Automaton a = oracle::random_automaton(rng, shape);
    const StateSeq s = oracle::random_sequence(rng, a.num_states(), 3);
    const UPWord w = normalize(oracle::random_word(rng, a.num_letters(), 0, 3),
                               oracle::random_word(rng, a.num_letters(), 1, 3));
    const auto r = act_on_upword(a, s, w);
    std::size_t tuples = 1;
    for (std::size_t i = 0; i < s.size(); ++i) tuples *= a.num_states();
    const std::size_t horizon = 4 * tuples * w.per().size() + w.pre().size();
    const auto finite = oracle::run(a, s, w.prefix(horizon));
    REQUIRE(defined(r) == finite.has_value());
    if (finite) {
      const UPWord& out = std::get<UPWord>(r);
      CHECK(canonical(out));
      CHECK(out.prefix(horizon) == finite->output);
    }
  }
}

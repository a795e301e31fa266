#include <doctest.h>

#include "orbitkit/action.hpp"
#include "orbitkit/constructions.hpp"
#include "orbitkit/error.hpp"
#include "orbitkit/mealy.hpp"

using namespace orbitkit;

namespace {

StateSeq seq(std::initializer_list<int> xs) {
  StateSeq s;
  for (const int x : xs) s.push_back(state_at(static_cast<std::size_t>(x)));
  return s;
}

// Oracle for lambda straight from the recursion: p = head p', with head the
// leftmost state.
StateSeq lambda_recursive(const StateSeq& p) {
  if (p.empty()) return {};
  const StateSeq rest = lambda_recursive(StateSeq(p.begin() + 1, p.end()));
  StateSeq out = rest;
  out.push_back(p.front());
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

}  // namespace

TEST_CASE("lambda") {
  CHECK(lambda({}).empty());
  // p2 p1 -> p1 p2 p1
  CHECK(lambda(seq({2, 1})) == seq({1, 2, 1}));
  CHECK(lambda(seq({3, 2, 1})) == seq({1, 2, 1, 3, 1, 2, 1}));
  for (std::size_t n = 0; n <= 10; ++n) {
    StateSeq p;
    for (std::size_t i = 0; i < n; ++i) p.push_back(state_at(i % 3));
    const StateSeq l = lambda(p);
    CHECK(l.size() == (std::size_t{1} << n) - 1);
    CHECK(l == lambda_recursive(p));
  }
}

TEST_CASE("fixed automata") {
  const Automaton add = adding_machine();
  CHECK(add.states() == std::vector<std::string>{"q", "id"});
  CHECK(classify(add).g_automaton());
  const auto r = act(add, add.parse_states("q"), add.parse_word("1 0 0"));
  REQUIRE(defined(r));
  CHECK(add.format(std::get<ActResult>(r).output) == "0 1 0");

  const Classification g = classify(grigorchuk());
  CHECK(g.g_automaton());
  CHECK_FALSE(g.reversible);
  const Classification gd = classify(dual(grigorchuk()));
  CHECK(gd.complete);
  CHECK(gd.reversible);
  CHECK_FALSE(gd.invertible);

  CHECK(classify(pq_automaton()).g_automaton());

  const Classification t = classify(t1_automaton());
  CHECK(t.reversible);
  CHECK(t.invertible);
  CHECK_FALSE(t.complete);
  CHECK_FALSE(t.inverse_reversible);
}

TEST_CASE("gillibert extension of the adding machine") {
  const GillibertAutomaton g = gillibert_extend({adding_machine(), "q"});
  const Automaton& a = g.automaton;
  CHECK(classify(a).g_automaton());
  CHECK(a.num_states() == 2 + 3 + 2);
  CHECK(a.num_letters() == 2 + 2 * 2 + 2);
  // The base already owns "id", so the new identity state is "!id".
  CHECK(a.states() == std::vector<std::string>{"q", "id", "s", "t", "!id", "#_q", "#_id"});
  CHECK(a.alphabet() == std::vector<std::string>{"0", "1", "*", "#", "(a_q,0)", "(a_q,1)",
                                                 "(a_id,0)", "(a_id,1)"});
  CHECK(a.token(g.dollar) == "q");
  for (std::size_t q = 0; q < a.num_states(); ++q) {
    for (std::size_t x = 0; x < a.num_letters(); ++x) {
      CHECK(a.out_degree(state_at(q), letter_at(x)) == 1);
    }
  }

  const auto step = [&](const std::string& q, const std::string& x) {
    const auto s = a.step(*a.find_state(q), *a.find_letter(x));
    REQUIRE(s);
    return a.token(s->out) + "/" + a.token(s->dst);
  };
  CHECK(step("s", "*") == "*/t");
  CHECK(step("t", "#") == "#/q");
  CHECK(step("t", "(a_q,1)") == "(a_q,0)/t");
  CHECK(step("t", "(a_q,0)") == "(a_q,1)/#_q");
  CHECK(step("#_q", "(a_id,1)") == "(a_id,1)/#_q");
  CHECK(step("#_id", "#") == "#/id");
  CHECK(step("s", "0") == "0/!id");
  CHECK(step("q", "*") == "*/!id");
  CHECK(a.is_identity_state(g.id));

  CHECK_THROWS_AS(gillibert_extend({adding_machine(), "r"}), PreconditionError);
  CHECK_THROWS_AS(gillibert_extend({t1_automaton(), "q"}), PreconditionError);
}

TEST_CASE("reduction words") {
  const GillibertAutomaton g = gillibert_extend({adding_machine(), "q"});
  const Automaton& a = g.automaton;
  CHECK(a.format(reduction_word(g, a.parse_states("q"))) == "* (a_q,0) #");
  CHECK(a.format(reduction_word(g, {})) == "* #");
  CHECK(a.format(reduction_word(g, a.parse_states("q id q"))) == "* (a_q,0) (a_id,0) (a_q,0) #");
  CHECK(reduction_word(g, a.parse_states("id q q")).size() == 5);
  CHECK_THROWS_AS(reduction_word(g, a.parse_states("t")), PreconditionError);
  CHECK(a.format(hash_lambda(g, a.parse_states("id q"))) == "#_q #_id #_q");
}

TEST_CASE("the dagger identity") {
  const GillibertInput in{adding_machine(), "q"};
  const Automaton& base = in.base;
  CHECK(verify_dagger(in, base.parse_states("q"), 1));
  CHECK(verify_dagger(in, base.parse_states("q id"), 2));
  for (std::size_t len = 1; len <= 3; ++len) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << len); ++mask) {
      StateSeq p;
      for (std::size_t i = 0; i < len; ++i) p.push_back(state_at((mask >> i) & 1));
      for (std::size_t k = 1; k <= 3; ++k) CHECK(verify_dagger(in, p, k));
    }
  }
  CHECK_THROWS_AS(verify_dagger(in, {}, 1), PreconditionError);
  CHECK_THROWS_AS(verify_dagger(in, base.parse_states("q"), 0), PreconditionError);
}

TEST_CASE("t-powers off the period break the dagger identity") {
  const GillibertAutomaton g = gillibert_extend({adding_machine(), "q"});
  const StateSeq p = g.automaton.parse_states("q id");
  const std::size_t period = lambda(p).size() + 1;
  CHECK(dagger_check(g, p, period, 1));
  CHECK(dagger_check(g, p, 2 * period, 2));
  for (std::size_t t = 1; t < 3 * period; ++t) {
    if (t % period == 0) continue;
    for (std::size_t k = 1; k <= 3; ++k) CHECK_FALSE(dagger_check(g, p, t, k));
  }
}

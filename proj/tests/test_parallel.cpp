#include <doctest.h>

#include <atomic>

#include "orbitkit/algebra.hpp"
#include "orbitkit/constructions.hpp"
#include "orbitkit/mealy.hpp"
#include "orbitkit/orbit.hpp"
#include "orbitkit/parallel.hpp"

using namespace orbitkit;

namespace {

// Runs f with the given OpenMP thread count, restoring the previous one.
template <class F>
auto with_threads(int n, F&& f) {
#if defined(_OPENMP)
  const int old = omp_get_max_threads();
  omp_set_num_threads(n);
  auto r = f();
  omp_set_num_threads(old);
  return r;
#else
  (void)n;
  return f();
#endif
}

}  // namespace

TEST_CASE("parallel_for visits every index once") {
  for (const int threads : {1, 4}) {
    std::vector<std::atomic<int>> hits(1000);
    with_threads(threads, [&] {
      parallel_for(hits.size(), [&](std::size_t i) { hits[i].fetch_add(1); });
      return 0;
    });
    for (const auto& h : hits) CHECK(h.load() == 1);
  }
}

TEST_CASE("semigroup enumeration is independent of the thread count") {
  const Automaton g = grigorchuk();
  const Enumeration ref = reference::semigroup_enumerate(g, 150);
  const Enumeration one = with_threads(1, [&] { return semigroup_enumerate(g, 150); });
  const Enumeration four = with_threads(4, [&] { return semigroup_enumerate(g, 150); });
  CHECK(one.set == ref.set);
  CHECK(four.set == ref.set);
  CHECK(one.complete == ref.complete);
  CHECK(four.complete == ref.complete);

  const Automaton t = dual(t1_automaton());
  const Enumeration a = with_threads(4, [&] { return left_ideal(t, {}, 100); });
  const Enumeration b = reference::left_ideal(t, {}, 100);
  CHECK(a.set == b.set);
  CHECK(a.complete == b.complete);
}

TEST_CASE("orbit exploration is independent of the thread count") {
  const Automaton gd = dual(grigorchuk());
  const UPWord w = normalize({}, gd.parse_word("b c d"));
  const OrbitVerdict ref = reference::orbit_explore(gd, w, 5000);
  const OrbitVerdict four = with_threads(4, [&] { return orbit_explore(gd, w, 5000); });
  REQUIRE(std::holds_alternative<FiniteOrbit>(ref));
  REQUIRE(std::holds_alternative<FiniteOrbit>(four));
  CHECK(std::get<FiniteOrbit>(ref).graph == std::get<FiniteOrbit>(four).graph);

  const Automaton add = adding_machine();
  const UPWord z = normalize({}, add.parse_word("0"));
  const OrbitVerdict x = reference::orbit_explore(add, z, 777);
  const OrbitVerdict y = with_threads(4, [&] { return orbit_explore(add, z, 777); });
  CHECK(std::get<BoundExceeded>(x).partial == std::get<BoundExceeded>(y).partial);
}

#include "orbitkit/orbit.hpp"

#include <algorithm>

#include "dot.hpp"
#include "orbit_search.hpp"
#include "orbitkit/action.hpp"
#include "orbitkit/error.hpp"
#include "orbitkit/mealy.hpp"
#include "orbitkit/parallel.hpp"

namespace orbitkit {

namespace detail {

OrbitSearch::OrbitSearch(const Automaton& a, const UPWord& w, std::size_t node_bound)
    : a_(a), node_bound_(node_bound) {
  a.require_deterministic("orbit exploration");
  graph_.nodes.push_back(w);
  index_.emplace(w, 0);
  if (node_bound_ == 0) status_ = Status::exceeded;
}

bool OrbitSearch::add(std::size_t from, State q, const UPWord& image) {
  auto it = index_.find(image);
  if (it == index_.end()) {
    if (graph_.nodes.size() >= node_bound_) {
      status_ = Status::exceeded;
      return false;
    }
    it = index_.emplace(image, graph_.nodes.size()).first;
    graph_.nodes.push_back(image);
  }
  graph_.edges.push_back({from, q, it->second});
  return true;
}

void OrbitSearch::settle() {
  if (status_ == Status::running && next_ == graph_.nodes.size()) status_ = Status::closed;
}

OrbitSearch::Status OrbitSearch::step() {
  if (status_ != Status::running) return status_;
  const std::size_t i = next_++;
  for (std::size_t q = 0; q < a_.num_states(); ++q) {
    const auto r = act_on_upword(a_, {state_at(q)}, graph_.nodes[i]);
    if (defined(r) && !add(i, state_at(q), std::get<UPWord>(r))) return status_;
  }
  settle();
  return status_;
}

OrbitSearch::Status OrbitSearch::step_level() {
  if (status_ != Status::running) return status_;
  const std::size_t begin = next_;
  const std::size_t end = graph_.nodes.size();
  const std::size_t nq = a_.num_states();
  const std::size_t count = (end - begin) * nq;

  std::vector<std::optional<UPWord>> images(count);
  parallel_for(count, [&](std::size_t c) {
    const auto r = act_on_upword(a_, {state_at(c % nq)}, graph_.nodes[begin + c / nq]);
    if (defined(r)) images[c] = std::get<UPWord>(r);
  });

  for (std::size_t c = 0; c < count; ++c) {
    if (images[c] && !add(begin + c / nq, state_at(c % nq), *images[c])) return status_;
  }
  next_ = end;
  settle();
  return status_;
}

OrbitVerdict OrbitSearch::verdict(std::size_t step_bound) const {
  if (status_ == Status::closed) return FiniteOrbit{graph_, graph_.nodes.size(), std::nullopt};
  return BoundExceeded{graph_, node_bound_, step_bound};
}

}  // namespace detail

OrbitVerdict orbit_explore(const Automaton& a, const UPWord& w, std::size_t node_bound) {
  detail::OrbitSearch search(a, w, node_bound);
  while (search.step_level() == detail::OrbitSearch::Status::running) {
  }
  return search.verdict();
}

OrbitVerdict orbit_semidecide(const Automaton& a, const UPWord& w, std::size_t step_bound,
                              std::size_t node_bound) {
  using Bfs = detail::OrbitSearch;
  Bfs bfs(a, w, node_bound);
  const Automaton d = dual(a);
  StateSeq rev = as_states(w.per());
  std::reverse(rev.begin(), rev.end());
  PowerSearch torsion(d, rev, step_bound);

  while (true) {
    if (bfs.step() == Bfs::Status::closed) return bfs.verdict(step_bound);
    if (torsion.step() == PowerSearch::Status::found) {
      while (bfs.step() == Bfs::Status::running) {
      }
      FiniteOrbit out{bfs.graph(), std::nullopt, torsion.result()};
      if (bfs.status() == Bfs::Status::closed) out.size = out.graph.nodes.size();
      return out;
    }
    if (bfs.status() != Bfs::Status::running &&
        torsion.status() != PowerSearch::Status::running) {
      return BoundExceeded{bfs.graph(), node_bound, step_bound};
    }
  }
}

OrbitVerdict orbit_finite_periodic(const Automaton& a, const Word& v, std::size_t step_bound,
                                   std::size_t node_bound) {
  return orbit_semidecide(a, normalize({}, v), step_bound, node_bound);
}

namespace {

struct Gamma {
  std::vector<Letter> letters;
  std::vector<std::size_t> component;  // per letter of A; meaningful for letters in gamma
};

Gamma infinite_gamma(const Automaton& a) {
  Gamma g;
  const Classification c = classify(a);
  if (!c.g_automaton() || !c.reversible || c.bireversible) return g;
  const SccReport scc = scc_analysis(dual(a));
  g.component.assign(a.num_letters(), 0);
  for (std::size_t k = 0; k < scc.components.size(); ++k) {
    const auto& comp = scc.components[k];
    if (!comp.closed || comp.bireversible) continue;
    for (const State x : comp.states) {
      g.letters.push_back(as_letter(x));
      g.component[index(x)] = k;
    }
  }
  std::sort(g.letters.begin(), g.letters.end());
  return g;
}

}  // namespace

std::vector<Letter> infinite_orbit_letters(const Automaton& a) {
  return infinite_gamma(a).letters;
}

OrbitVerdict certify_infinite(const Automaton& a, const UPWord& w) {
  const Gamma g = infinite_gamma(a);
  for (const Letter x : tail_letters(w)) {
    if (!std::binary_search(g.letters.begin(), g.letters.end(), x)) continue;
    CertifiedInfinite out;
    out.reason = "period letter '" + a.token(x) +
                 "' lies in a closed, non-bireversible component of the dual";
    out.gamma = g.letters;
    out.witness = x;
    out.component = g.component[index(x)];
    return out;
  }
  return BoundExceeded{};
}

std::optional<PeriodicExtraction> extract_periodic_finite(const Automaton& a, const UPWord& w,
                                                          std::size_t index_bound,
                                                          std::size_t max_states) {
  a.require_deterministic("extract_periodic_finite");
  const Automaton d = dual(a);
  std::vector<std::optional<Element>> generators(d.num_states());
  std::unordered_map<Element, std::size_t, ElementHash> seen;

  // rev(a_1..a_l) = a_l rev(a_1..a_{l-1}): a_l acts last.
  Element e = Element::identity(d.num_letters());
  for (std::size_t l = 1; l <= index_bound; ++l) {
    const State x = as_state(w.at(l - 1));
    auto& g = generators[index(x)];
    if (!g) g = Element::of_state(d, x);
    try {
      e = Element::compose(*g, e, max_states);
    } catch (const ResourceLimit&) {
      return std::nullopt;
    }
    const auto [it, fresh] = seen.emplace(e, l);
    if (fresh) continue;
    PeriodicExtraction out;
    out.k = it->second;
    out.l = l;
    out.u = w.prefix(out.k);
    const Word head = w.prefix(l);
    out.v.assign(head.begin() + static_cast<std::ptrdiff_t>(out.k), head.end());
    return out;
  }
  return std::nullopt;
}

std::string format_upword(const Automaton& a, const UPWord& w) {
  std::string out = a.format(w.pre());
  if (!out.empty()) out += ' ';
  return out + "(" + a.format(w.per()) + ")^w";
}

std::string orbit_to_dot(const Automaton& a, const OrbitGraph& g) {
  using detail::dot_quote;
  std::string out = "digraph orbit {\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    out += "  n" + std::to_string(i) + " [label=" + dot_quote(format_upword(a, g.nodes[i])) +
           (i == g.root ? ", shape=doublecircle" : "") + "];\n";
  }
  for (const auto& e : g.edges) {
    out += "  n" + std::to_string(e.from) + " -> n" + std::to_string(e.to) +
           " [label=" + dot_quote(a.token(e.label)) + "];\n";
  }
  return out + "}\n";
}

}  // namespace orbitkit

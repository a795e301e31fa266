#include "orbitkit/algebra.hpp"

#include <algorithm>

#include "dot.hpp"
#include "enumerate.hpp"
#include "orbitkit/action.hpp"
#include "orbitkit/error.hpp"
#include "orbitkit/mealy.hpp"
#include "orbitkit/orbit.hpp"
#include "orbitkit/parallel.hpp"

namespace orbitkit {

namespace {

class ElementIndex {
 public:
  explicit ElementIndex(std::size_t bound) { out_.bound = bound; }

  [[nodiscard]] std::optional<std::size_t> find(const Element& e) const {
    const auto it = index_.find(e);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  // False if the bound forbids another element.
  bool insert(StateSeq seq, Element e) {
    if (size() >= out_.bound) return false;
    index_.emplace(e, size());
    maps_.push_back(std::move(e));
    out_.set.elements.push_back(std::move(seq));
    return true;
  }

  [[nodiscard]] std::size_t size() const noexcept { return maps_.size(); }
  [[nodiscard]] const StateSeq& witness(std::size_t k) const { return out_.set.elements[k]; }
  [[nodiscard]] const Element& map(std::size_t k) const { return maps_[k]; }
  void edge(std::size_t from, State q, std::size_t to) { out_.set.edges.push_back({from, q, to}); }

  Enumeration finish(bool complete) {
    out_.complete = complete;
    return std::move(out_);
  }

 private:
  std::vector<Element> maps_;
  std::unordered_map<Element, std::size_t, ElementHash> index_;
  Enumeration out_;
};

StateSeq left_multiple(State q, const StateSeq& s) {
  StateSeq out;
  out.reserve(s.size() + 1);
  out.push_back(q);
  out.insert(out.end(), s.begin(), s.end());
  return out;
}

}  // namespace

namespace detail {

std::vector<StateSeq> generator_seeds(const Automaton& a) {
  std::vector<StateSeq> seeds;
  for (std::size_t q = 0; q < a.num_states(); ++q) seeds.push_back({state_at(q)});
  return seeds;
}

}  // namespace detail

namespace {

Enumeration enumerate_parallel(const Automaton& a, const std::vector<StateSeq>& seeds,
                               std::size_t bound) {
  a.require_deterministic("semigroup enumeration");
  ElementIndex index(bound);
  for (const auto& seed : seeds) {
    Element e = Element::of_sequence(a, seed);
    if (index.find(e)) continue;
    if (!index.insert(seed, std::move(e))) return index.finish(false);
  }

  const std::size_t nq = a.num_states();
  std::vector<Element> generators;
  for (std::size_t q = 0; q < nq; ++q) generators.push_back(Element::of_state(a, state_at(q)));

  std::size_t level_begin = 0;
  while (level_begin < index.size()) {
    const std::size_t level_end = index.size();
    const std::size_t count = (level_end - level_begin) * nq;

    // The expensive part, product and minimization, runs in parallel.
    std::vector<std::optional<Element>> candidates(count);
    parallel_for(count, [&](std::size_t c) {
      candidates[c] = Element::compose(generators[c % nq], index.map(level_begin + c / nq));
    });

    for (std::size_t c = 0; c < count; ++c) {
      const std::size_t i = level_begin + c / nq;
      const State q = state_at(c % nq);
      if (const auto k = index.find(*candidates[c])) {
        index.edge(i, q, *k);
        continue;
      }
      const std::size_t k = index.size();
      if (!index.insert(left_multiple(q, index.witness(i)), std::move(*candidates[c]))) {
        return index.finish(false);
      }
      index.edge(i, q, k);
    }
    level_begin = level_end;
  }
  return index.finish(true);
}

}  // namespace

Enumeration semigroup_enumerate(const Automaton& a, std::size_t element_bound) {
  return enumerate_parallel(a, detail::generator_seeds(a), element_bound);
}

Enumeration left_ideal(const Automaton& a, const StateSeq& s, std::size_t element_bound) {
  return enumerate_parallel(a, {s}, element_bound);
}

// ---------------------------------------------------------------------------

PowerSearch::PowerSearch(const Automaton& a, const StateSeq& base, std::size_t bound,
                         std::size_t max_states)
    : base_(Element::of_sequence(a, base, max_states)),
      current_(Element::identity(a.num_letters())),
      bound_(bound),
      max_states_(max_states) {
  if (bound_ == 0) status_ = Status::exhausted;
}

PowerSearch::Status PowerSearch::step() {
  if (status_ != Status::running) return status_;
  try {
    current_ = Element::compose(base_, current_, max_states_);
  } catch (const ResourceLimit&) {
    limited_ = true;
    status_ = Status::exhausted;
    return status_;
  }
  const std::size_t j = ++exponent_;
  const auto [it, fresh] = seen_.emplace(current_, j);
  if (!fresh) {
    result_ = Torsion{it->second, j};
    status_ = Status::found;
  } else if (j >= bound_) {
    status_ = Status::exhausted;
  }
  return status_;
}

TorsionVerdict PowerSearch::verdict() const {
  if (result_) return *result_;
  return NoneFound{limited_ ? exponent_ : bound_, limited_};
}

TorsionVerdict element_order(const Automaton& a, const StateSeq& s, std::size_t bound,
                             std::size_t max_states) {
  PowerSearch search(a, s, bound, max_states);
  while (search.step() == PowerSearch::Status::running) {
  }
  return search.verdict();
}

// ---------------------------------------------------------------------------

CrosscheckReport ideal_vs_orbit_crosscheck(const Automaton& a, const Word& w,
                                           const CrosscheckBounds& bounds) {
  a.require_deterministic("ideal_vs_orbit_crosscheck");
  CrosscheckReport report;
  StateSeq rev = as_states(w);
  std::reverse(rev.begin(), rev.end());
  const Enumeration ideal = left_ideal(dual(a), rev, bounds.element_bound);
  report.ideal_size = ideal.set.elements.size();
  report.ideal_complete = ideal.complete;

  const std::size_t m = a.num_letters();
  if (m == 0) return report;
  for (std::size_t len = 1; len <= bounds.period_length; ++len) {
    // Odometer over all words of this length; non-primitive ones repeat
    // shorter periods and are skipped.
    std::vector<std::size_t> digits(len, 0);
    while (true) {
      Word per;
      for (const std::size_t d : digits) per.push_back(letter_at(d));
      if (primitive_root_length(per) == len) {
        CrosscheckSample sample;
        sample.period = per;
        const UPWord x = normalize(w, per);
        const OrbitVerdict v = orbit_explore(a, x, bounds.node_bound);
        if (const auto* f = std::get_if<FiniteOrbit>(&v)) {
          sample.outcome = CrosscheckSample::Outcome::finite;
          sample.nodes = f->graph.nodes.size();
        } else {
          sample.nodes = std::get<BoundExceeded>(v).partial.nodes.size();
          if (std::holds_alternative<CertifiedInfinite>(certify_infinite(a, x))) {
            sample.outcome = CrosscheckSample::Outcome::certified_infinite;
            if (ideal.complete) ++report.contradictions;
          }
        }
        report.samples.push_back(std::move(sample));
      }
      std::size_t k = len;
      while (k > 0 && ++digits[k - 1] == m) digits[--k] = 0;
      if (k == 0) break;
    }
  }
  return report;
}

std::string cayley_to_dot(const Automaton& a, const ElementSet& set) {
  using detail::dot_quote;
  std::string out = "digraph cayley {\n";
  for (std::size_t i = 0; i < set.elements.size(); ++i) {
    const auto& e = set.elements[i];
    out += "  n" + std::to_string(i) + " [label=" + dot_quote(e.empty() ? "1" : a.format(e)) +
           "];\n";
  }
  for (const auto& e : set.edges) {
    out += "  n" + std::to_string(e.from) + " -> n" + std::to_string(e.to) +
           " [label=" + dot_quote(a.token(e.generator)) + "];\n";
  }
  return out + "}\n";
}

}  // namespace orbitkit

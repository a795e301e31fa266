#pragma once

#include <cstddef>
#include <unordered_map>

#include "orbitkit/automaton.hpp"
#include "orbitkit/orbit.hpp"
#include "orbitkit/upword.hpp"

namespace orbitkit::detail {

/// Resumable breadth-first orbit exploration. Nodes are expanded in FIFO
/// order, states in declaration order; a node is only recorded while fewer
/// than `node_bound` exist.
class OrbitSearch {
 public:
  enum class Status { running, closed, exceeded };

  OrbitSearch(const Automaton& a, const UPWord& w, std::size_t node_bound);

  /// Expand the next queued node serially.
  Status step();

  /// Expand every queued node of the current BFS level: images are computed
  /// in parallel, then merged in (node, state) order.
  Status step_level();

  [[nodiscard]] Status status() const noexcept { return status_; }
  [[nodiscard]] const OrbitGraph& graph() const noexcept { return graph_; }

  /// FiniteOrbit when closed, BoundExceeded otherwise.
  [[nodiscard]] OrbitVerdict verdict(std::size_t step_bound = 0) const;

 private:
  // Records the edge q: from -> image; false once the node bound is hit.
  bool add(std::size_t from, State q, const UPWord& image);
  void settle();

  const Automaton& a_;
  std::size_t node_bound_;
  OrbitGraph graph_;
  std::unordered_map<UPWord, std::size_t, UPWordHash> index_;
  std::size_t next_ = 0;
  Status status_ = Status::running;
};

}  // namespace orbitkit::detail

#pragma once

#include <cstdint>
#include <optional>

#include "nearbound/graph.hpp"

namespace nearbound {

struct VcOptions {
  /// Search nodes allowed before ResourceError is raised.
  std::uint64_t node_budget = 200'000'000;
};

struct VcOutcome {
  bool covered = false;
  std::optional<VertexSet> cover;  ///< present iff covered; |cover| <= t
  std::uint64_t nodes_explored = 0;
};

/// Bounded search tree for "does g have a vertex cover of size <= t?".
///
/// Each node first applies, until nothing changes: drop isolated vertices, put
/// the neighbour of a degree-1 vertex into the cover, put any vertex of degree
/// > t into the cover. It then branches on the lowest-id vertex of maximum
/// degree v, first with v in the cover, then with N(v) in the cover. The tree
/// has at most 2^(t+1) - 1 nodes; the base is 2, not the 1.2738 of the best
/// known algorithms.
VcOutcome vertex_cover_decide(const Graph& g, std::int64_t t, const VcOptions& options = {});

/// An independent set of size >= s if one exists (complement of a cover of size n - s).
std::optional<VertexSet> max_independent_set_at_least(const Graph& g, std::int64_t s, const VcOptions& options = {});

}  // namespace nearbound

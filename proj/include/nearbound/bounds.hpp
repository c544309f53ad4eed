#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nearbound/graph.hpp"

namespace nearbound {

/// Upper bounds on the independence number. All of them are 0 on the
/// vertex-free graph.
struct BoundsReport {
  std::size_t p = 0;   ///< size bound: largest q with q(q-1) <= 2 m(complement)
  std::size_t p1 = 0;  ///< degree-sequence bound
  std::optional<std::size_t> p2;  ///< neighbourhood-union bound, only when requested
  std::size_t wp_complement = 0;  ///< Welsh–Powell chromatic bound of the complement; equals p1

  friend bool operator==(const BoundsReport&, const BoundsReport&) = default;
};

/// Sorted |N(owner) ∪ N(v)| over every non-neighbour v != owner. Entry i holds
/// the value the literature indexes as n_{i+2}(owner).
struct NeighborhoodUnionSequence {
  Vertex owner = 0;
  std::vector<std::size_t> values;
};

/// floor(1/2 + sqrt(1/4 + n^2 - n - 2m)), computed exactly in integers.
std::size_t bound_p(const Graph& g);
/// max{ i : d_i <= n - i } over the ascending degree sequence.
std::size_t bound_p1(const Graph& g);
/// max_i min(i, d_i + 1) over the descending degree sequence.
std::size_t bound_wp_chromatic(const Graph& g);
NeighborhoodUnionSequence neighborhood_union_sequence(const Graph& g, Vertex u);
/// Largest k such that at least k vertices v satisfy n_k(v) <= n - k. A vertex
/// whose sequence is shorter than k does not count; k = 1 is always satisfied.
std::size_t bound_p2(const Graph& g);

/// Computes all bounds and checks p2 <= p1 <= p and p1 == wp_complement.
BoundsReport bounds_report(const Graph& g, bool with_p2);

/// Largest q >= 0 with q(q-1) <= twice_complement_edges.
std::size_t largest_q_with_pair_count_at_most(std::size_t twice_complement_edges);

}  // namespace nearbound

#pragma once

// Test-only helpers. Nothing here calls into the bounds, kernel or search code,
// so it can serve as an independent reference.

#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

#include "nearbound/graph.hpp"

namespace nearbound::testing {

/// Calls f on every labeled simple graph on n vertices (2^(n(n-1)/2) of them).
inline void for_each_labeled_graph(std::size_t n, const std::function<void(const Graph&)>& f) {
  std::vector<Edge> slots;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << slots.size()); ++bits) {
    std::vector<Edge> edges;
    for (std::size_t e = 0; e < slots.size(); ++e)
      if (bits >> e & 1) edges.push_back(slots[e]);
    f(Graph::from_edges(n, edges));
  }
}

/// Independence number by scanning every subset; n <= 20.
inline std::size_t naive_alpha(const Graph& g) {
  const std::size_t n = g.order();
  std::size_t best = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    const auto size = static_cast<std::size_t>(std::popcount(s));
    if (size <= best) continue;
    bool ok = true;
    for (Vertex u = 0; u < n && ok; ++u)
      if (s >> u & 1)
        for (Vertex v = u + 1; v < n && ok; ++v)
          if ((s >> v & 1) && g.adjacent(u, v)) ok = false;
    if (ok) best = size;
  }
  return best;
}

/// Minimum vertex cover by scanning every subset; n <= 20.
inline std::size_t naive_min_vc(const Graph& g) {
  const auto edges = g.edges();
  std::size_t best = g.order();
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.order()); ++s) {
    const auto size = static_cast<std::size_t>(std::popcount(s));
    if (size >= best) continue;
    bool ok = true;
    for (const auto& [u, v] : edges)
      if (!(s >> u & 1) && !(s >> v & 1)) {
        ok = false;
        break;
      }
    if (ok) best = size;
  }
  return best;
}

/// The size bound straight from the floating-point formula.
inline std::size_t float_p(const Graph& g) {
  const long double n = g.order(), m = g.size();
  return static_cast<std::size_t>(std::floor(0.5L + std::sqrt(0.25L + n * n - n - 2 * m)));
}

inline Graph petersen() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);          // outer cycle
    e.emplace_back(i, i + 5);                // spokes
    e.emplace_back(i + 5, (i + 2) % 5 + 5);  // inner pentagram
  }
  return Graph::from_edges(10, e);
}

}  // namespace nearbound::testing

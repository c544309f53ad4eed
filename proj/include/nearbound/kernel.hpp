#pragma once

#include <cstddef>
#include <cstdint>

#include <boost/rational.hpp>

#include "nearbound/graph.hpp"

namespace nearbound {

using Rational = boost::rational<std::int64_t>;

/// Result of deleting every vertex whose degree in the input graph is at least
/// n - p + k. The kernel answers "alpha <= p - k?" exactly as the input does.
struct KernelResult {
  Graph kernel;
  VertexSet removed;               ///< ids in the input graph
  std::vector<Vertex> mapping;     ///< kernel id -> input id
  std::size_t n0 = 0;
  std::size_t p = 0;
  std::size_t k = 0;
  std::size_t threshold = 0;       ///< n - p + k
  /// n0 - (p - k + 1): size of the vertex cover whose existence is equivalent to
  /// alpha(kernel) >= p - k + 1. Negative means no such independent set can exist.
  std::int64_t budget_t = 0;
  bool trivially_yes = false;      ///< n0 <= p - k

  friend bool operator==(const KernelResult&, const KernelResult&) = default;
};

/// Requires p := bound_p(g) >= 2k + 1; throws ParameterError otherwise.
KernelResult kernelize(const Graph& g, std::size_t k);

/// p + 2k + 1, valid for p >= 2k + 1.
std::size_t kernel_size_bound(std::int64_t p, std::int64_t k);

/// Strict upper bound p + c/(c-1) * (k+1) on the kernel order when p >= c * k, c > 1.
Rational kernel_size_bound_scaled(std::int64_t p, std::int64_t k, Rational c);

}  // namespace nearbound

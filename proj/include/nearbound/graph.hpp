#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "nearbound/bitset.hpp"

namespace nearbound {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;
/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

class Graph;

/// Mutable accumulator for a simple undirected graph. Duplicate edges collapse,
/// self-loops and out-of-range endpoints raise InputError.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n);

  std::size_t order() const noexcept { return rows_.size(); }
  /// Returns false when the edge was already present.
  bool add_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const;

  Graph build() &&;

 private:
  std::vector<Bitset> rows_;
  std::size_t m_ = 0;
};

/// Immutable simple graph on vertices 0..n-1 stored as adjacency bit rows.
class Graph {
 public:
  Graph() = default;

  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const noexcept { return rows_.size(); }
  std::size_t size() const noexcept { return m_; }

  bool adjacent(Vertex u, Vertex v) const;
  const Bitset& neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const;

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;
  Graph complement() const;

  /// Throws std::logic_error if symmetry, loop-freeness or the edge count identity fails.
  void validate() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphBuilder;
  Graph(std::vector<Bitset> rows, std::size_t m) : rows_(std::move(rows)), m_(m) {}

  void check_vertex(Vertex v) const;

  std::vector<Bitset> rows_;
  std::size_t m_ = 0;
};

struct DegreeSequence {
  std::vector<std::size_t> ascending;
};

struct InducedSubgraph {
  Graph graph;
  /// new id -> id in the parent graph
  std::vector<Vertex> to_parent;
};

std::size_t degree(const Graph& g, Vertex v);
/// n(n-1)/2 - m
std::size_t complement_edge_count(const Graph& g);
DegreeSequence degree_sequence(const Graph& g);
/// Subgraph induced on `keep` (any order, duplicates ignored); new ids follow ascending parent ids.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

bool is_independent(const Graph& g, std::span<const Vertex> set);
bool is_vertex_cover(const Graph& g, std::span<const Vertex> set);

namespace gen {

Graph empty(std::size_t n);
Graph complete(std::size_t n);
/// n >= 3
Graph cycle(std::size_t n);
Graph path(std::size_t n);
/// A + B: disjoint union plus every edge between the two parts. A keeps ids 0..|A|-1.
Graph join(const Graph& a, const Graph& b);
Graph disjoint_union(const Graph& a, const Graph& b);
/// H_{n,p} = K_{n-p} + pK_1; clique on ids 0..n-p-1, independent part after it. Requires n > p >= 2.
Graph h_np(std::size_t n, std::size_t p);
/// Erdős–Rényi G(n, prob), deterministic for a fixed seed on every platform.
Graph gnp(std::size_t n, double prob, std::uint64_t seed);

}  // namespace gen

}  // namespace nearbound

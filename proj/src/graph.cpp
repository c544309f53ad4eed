#include "nearbound/graph.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "nearbound/errors.hpp"

namespace nearbound {

GraphBuilder::GraphBuilder(std::size_t n) : rows_(n, Bitset(n)) {}

bool GraphBuilder::add_edge(Vertex u, Vertex v) {
  if (u >= rows_.size() || v >= rows_.size())
    throw InputError("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") references a vertex outside 0.." +
                     std::to_string(rows_.size()));
  if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
  if (rows_[u].test(v)) return false;
  rows_[u].set(v);
  rows_[v].set(u);
  ++m_;
  return true;
}

bool GraphBuilder::has_edge(Vertex u, Vertex v) const {
  if (u >= rows_.size() || v >= rows_.size()) return false;
  return rows_[u].test(v);
}

Graph GraphBuilder::build() && {
  Graph g(std::move(rows_), m_);
  rows_.clear();
  m_ = 0;
#ifndef NDEBUG
  if (g.order() <= 2048) g.validate();
#endif
  return g;
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (const auto& [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

void Graph::check_vertex(Vertex v) const {
  if (v >= rows_.size())
    throw InputError("vertex " + std::to_string(v) + " out of range for graph of order " + std::to_string(rows_.size()));
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return rows_[u].test(v);
}

const Bitset& Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return rows_[v];
}

std::size_t Graph::degree(Vertex v) const {
  check_vertex(v);
  return rows_[v].count();
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (std::size_t u = 0; u < rows_.size(); ++u)
    for (std::size_t v = rows_[u].find_next(u + 1); v < rows_.size(); v = rows_[u].find_next(v + 1))
      out.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return out;
}

Graph Graph::complement() const {
  const std::size_t n = rows_.size();
  std::vector<Bitset> rows;
  rows.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    Bitset r = ~rows_[v];
    r.reset(v);
    rows.push_back(std::move(r));
  }
  return Graph(std::move(rows), n * (n - (n > 0 ? 1 : 0)) / 2 - m_);
}

void Graph::validate() const {
  const std::size_t n = rows_.size();
  std::size_t bits = 0;
  for (std::size_t u = 0; u < n; ++u) {
    if (rows_[u].size() != n) throw std::logic_error("adjacency row width mismatch");
    if (rows_[u].test(u)) throw std::logic_error("self-loop at " + std::to_string(u));
    rows_[u].for_each([&](std::size_t v) {
      if (!rows_[v].test(u)) throw std::logic_error("asymmetric adjacency");
    });
    bits += rows_[u].count();
  }
  if (bits != 2 * m_) throw std::logic_error("cached edge count disagrees with adjacency");
}

std::size_t degree(const Graph& g, Vertex v) { return g.degree(v); }

std::size_t complement_edge_count(const Graph& g) {
  const std::size_t n = g.order();
  return (n == 0 ? 0 : n * (n - 1) / 2) - g.size();
}

DegreeSequence degree_sequence(const Graph& g) {
  DegreeSequence d;
  d.ascending.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) d.ascending.push_back(g.degree(v));
  std::sort(d.ascending.begin(), d.ascending.end());
  return d;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  Bitset mark(g.order());
  for (Vertex v : keep) {
    if (v >= g.order()) throw InputError("induced_subgraph: vertex " + std::to_string(v) + " out of range");
    mark.set(v);
  }
  InducedSubgraph out;
  out.to_parent.reserve(keep.size());
  mark.for_each([&](std::size_t v) { out.to_parent.push_back(static_cast<Vertex>(v)); });

  // parent id -> new id, only meaningful for marked vertices
  std::vector<Vertex> to_new(g.order(), 0);
  for (std::size_t i = 0; i < out.to_parent.size(); ++i) to_new[out.to_parent[i]] = static_cast<Vertex>(i);

  GraphBuilder b(out.to_parent.size());
  for (std::size_t i = 0; i < out.to_parent.size(); ++i) {
    const Bitset& row = g.neighbors(out.to_parent[i]);
    for (std::size_t w = row.find_next(out.to_parent[i] + 1); w < g.order(); w = row.find_next(w + 1))
      if (mark.test(w)) b.add_edge(static_cast<Vertex>(i), to_new[w]);
  }
  out.graph = std::move(b).build();
  return out;
}

bool is_independent(const Graph& g, std::span<const Vertex> set) {
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j)
      if (set[i] == set[j] || g.adjacent(set[i], set[j])) return false;
  return true;
}

bool is_vertex_cover(const Graph& g, std::span<const Vertex> set) {
  Bitset in(g.order());
  for (Vertex v : set) {
    if (v >= g.order()) return false;
    in.set(v);
  }
  for (const auto& [u, v] : g.edges())
    if (!in.test(u) && !in.test(v)) return false;
  return true;
}

namespace gen {

Graph empty(std::size_t n) { return std::move(GraphBuilder(n)).build(); }

Graph complete(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  return std::move(b).build();
}

Graph cycle(std::size_t n) {
  if (n < 3) throw InputError("cycle requires n >= 3");
  GraphBuilder b(n);
  for (Vertex v = 0; v < n; ++v) b.add_edge(v, static_cast<Vertex>((v + 1) % n));
  return std::move(b).build();
}

Graph path(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return std::move(b).build();
}

namespace {

GraphBuilder combine(const Graph& a, const Graph& b) {
  GraphBuilder out(a.order() + b.order());
  const auto shift = static_cast<Vertex>(a.order());
  for (const auto& [u, v] : a.edges()) out.add_edge(u, v);
  for (const auto& [u, v] : b.edges()) out.add_edge(u + shift, v + shift);
  return out;
}

}  // namespace

Graph join(const Graph& a, const Graph& b) {
  GraphBuilder out = combine(a, b);
  const auto shift = static_cast<Vertex>(a.order());
  for (Vertex u = 0; u < a.order(); ++u)
    for (Vertex v = 0; v < b.order(); ++v) out.add_edge(u, v + shift);
  return std::move(out).build();
}

Graph disjoint_union(const Graph& a, const Graph& b) { return std::move(combine(a, b)).build(); }

Graph h_np(std::size_t n, std::size_t p) {
  if (!(n > p && p >= 2))
    throw InputError("h_np requires n > p >= 2, got n=" + std::to_string(n) + ", p=" + std::to_string(p));
  return join(complete(n - p), empty(p));
}

Graph gnp(std::size_t n, double prob, std::uint64_t seed) {
  if (!(prob >= 0.0 && prob <= 1.0)) throw InputError("gnp probability must lie in [0, 1]");
  GraphBuilder b(n);
  if (prob == 0.0) return std::move(b).build();
  std::mt19937_64 rng(seed);
  // Compare raw 64-bit draws against a fixed threshold; distribution objects are
  // implementation-defined and would break cross-platform reproducibility.
  const long double scaled = std::ldexp(static_cast<long double>(prob), 64);
  const bool always = prob >= 1.0;
  const auto threshold = always ? std::uint64_t{0} : static_cast<std::uint64_t>(scaled);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      const std::uint64_t draw = rng();
      if (always || draw < threshold) b.add_edge(u, v);
    }
  return std::move(b).build();
}

}  // namespace gen

}  // namespace nearbound

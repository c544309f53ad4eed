#include "nearbound/vertex_cover.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "nearbound/errors.hpp"

namespace nearbound {
namespace {

class BranchSearch {
 public:
  BranchSearch(const Graph& g, const VcOptions& options) : g_(g), options_(options) {}

  bool run(Bitset alive, std::int64_t t) { return search(std::move(alive), t); }

  std::vector<Vertex> cover;
  std::uint64_t nodes = 0;

 private:
  void take(Bitset& alive, std::size_t v, std::int64_t& t) {
    cover.push_back(static_cast<Vertex>(v));
    alive.reset(v);
    --t;
  }

  // Applies the reductions in place. Returns false when the budget ran out.
  bool reduce(Bitset& alive, std::int64_t& t) {
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t v = alive.find_first(); v < alive.size(); v = alive.find_next(v + 1)) {
        const std::size_t d = g_.neighbors(static_cast<Vertex>(v)).count_and(alive);
        if (d == 0) {
          alive.reset(v);
        } else if (static_cast<std::int64_t>(d) > t) {
          take(alive, v, t);
          changed = true;
        } else if (d == 1) {
          Bitset nb = g_.neighbors(static_cast<Vertex>(v));
          nb &= alive;
          take(alive, nb.find_first(), t);
          changed = true;
        }
        if (t < 0) return false;
      }
    }
    return true;
  }

  bool search(Bitset alive, std::int64_t t) {
    if (++nodes > options_.node_budget)
      throw ResourceError("vertex cover search exceeded node budget of " + std::to_string(options_.node_budget));
    const std::size_t mark = cover.size();
    if (!reduce(alive, t)) {
      cover.resize(mark);
      return false;
    }

    std::size_t edges2 = 0, max_deg = 0, pivot = alive.size();
    alive.for_each([&](std::size_t v) {
      const std::size_t d = g_.neighbors(static_cast<Vertex>(v)).count_and(alive);
      edges2 += d;
      if (d > max_deg) {
        max_deg = d;
        pivot = v;
      }
    });
    if (edges2 == 0) return true;
    // every cover vertex removes at most max_deg edges
    if (edges2 / 2 > static_cast<std::size_t>(t) * max_deg) {
      cover.resize(mark);
      return false;
    }

    const std::size_t branch_mark = cover.size();
    if (t - 1 >= 0) {
      Bitset next = alive;
      next.reset(pivot);
      cover.push_back(static_cast<Vertex>(pivot));
      if (search(std::move(next), t - 1)) return true;
      cover.resize(branch_mark);
    }

    Bitset nb = g_.neighbors(static_cast<Vertex>(pivot));
    nb &= alive;
    if (t - static_cast<std::int64_t>(max_deg) >= 0) {
      Bitset next = alive;
      next.subtract(nb);
      next.reset(pivot);
      nb.for_each([&](std::size_t u) { cover.push_back(static_cast<Vertex>(u)); });
      if (search(std::move(next), t - static_cast<std::int64_t>(max_deg))) return true;
    }
    cover.resize(mark);
    return false;
  }

  const Graph& g_;
  const VcOptions& options_;
};

}  // namespace

VcOutcome vertex_cover_decide(const Graph& g, std::int64_t t, const VcOptions& options) {
  VcOutcome out;
  if (t < 0) return out;

  BranchSearch search(g, options);
  Bitset alive(g.order());
  alive.set_all();
  out.covered = search.run(std::move(alive), t);
  out.nodes_explored = search.nodes;
  if (out.covered) {
    VertexSet cover = std::move(search.cover);
    std::sort(cover.begin(), cover.end());
    if (static_cast<std::int64_t>(cover.size()) > t || !is_vertex_cover(g, cover))
      throw std::logic_error("vertex cover search produced an invalid certificate");
    out.cover = std::move(cover);
  }
  return out;
}

std::optional<VertexSet> max_independent_set_at_least(const Graph& g, std::int64_t s, const VcOptions& options) {
  if (s < 0) throw InputError("independent set size must be non-negative");
  const auto n = static_cast<std::int64_t>(g.order());
  const VcOutcome vc = vertex_cover_decide(g, n - s, options);
  if (!vc.covered) return std::nullopt;

  Bitset in_cover(g.order());
  for (Vertex v : *vc.cover) in_cover.set(v);
  VertexSet independent;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!in_cover.test(v)) independent.push_back(v);
  if (static_cast<std::int64_t>(independent.size()) < s || !is_independent(g, independent))
    throw std::logic_error("complement of vertex cover is not a large enough independent set");
  return independent;
}

}  // namespace nearbound

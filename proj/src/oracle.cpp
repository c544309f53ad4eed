#include "nearbound/oracle.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "nearbound/errors.hpp"

namespace nearbound::oracle {
namespace {

using Mask = std::uint64_t;

std::vector<Mask> adjacency_masks(const Graph& g) {
  if (g.order() > 64) throw ResourceError("oracle supports at most 64 vertices");
  std::vector<Mask> adj(g.order(), 0);
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= Mask{1} << v;
    adj[v] |= Mask{1} << u;
  }
  return adj;
}

Mask to_mask(std::span<const Vertex> set, std::size_t n) {
  Mask m = 0;
  for (Vertex v : set) {
    if (v >= n) throw InputError("vertex " + std::to_string(v) + " out of range");
    m |= Mask{1} << v;
  }
  return m;
}

VertexSet to_set(Mask m) {
  VertexSet out;
  for (; m; m &= m - 1) out.push_back(static_cast<Vertex>(std::countr_zero(m)));
  return out;
}

bool mask_independent(const std::vector<Mask>& adj, Mask s) {
  for (Mask rest = s; rest; rest &= rest - 1)
    if (adj[std::countr_zero(rest)] & s) return false;
  return true;
}

class MaxIndependentSet {
 public:
  explicit MaxIndependentSet(std::vector<Mask> adj) : adj_(std::move(adj)) {}

  void solve(Mask candidates, Mask chosen) {
    const int size = std::popcount(chosen);
    if (size + std::popcount(candidates) <= best_size_) return;
    if (!candidates) {
      best_size_ = size;
      best_ = chosen;
      return;
    }
    int pivot = -1, pivot_deg = -1;
    for (Mask rest = candidates; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const int d = std::popcount(adj_[v] & candidates);
      if (d <= 1) {
        // some maximum independent set contains v
        solve(candidates & ~adj_[v] & ~(Mask{1} << v), chosen | (Mask{1} << v));
        return;
      }
      if (d > pivot_deg) {
        pivot = v;
        pivot_deg = d;
      }
    }
    const Mask bit = Mask{1} << pivot;
    solve(candidates & ~adj_[pivot] & ~bit, chosen | bit);
    solve(candidates & ~bit, chosen);
  }

  Mask best() const { return best_; }

 private:
  std::vector<Mask> adj_;
  int best_size_ = -1;
  Mask best_ = 0;
};

}  // namespace

ExactResult exact_alpha(const Graph& g, std::size_t cap) {
  const std::size_t n = g.order();
  if (n > cap || n > 64)
    throw ResourceError("oracle cap exceeded: n=" + std::to_string(n) + " > " + std::to_string(std::min<std::size_t>(cap, 64)));
  auto adj = adjacency_masks(g);
  const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  MaxIndependentSet mis(adj);
  mis.solve(all, 0);
  ExactResult r{static_cast<std::size_t>(std::popcount(mis.best())), to_set(mis.best())};
  if (!mask_independent(adj, mis.best())) throw std::logic_error("oracle witness is not independent");
  return r;
}

ExactResult exact_min_vc(const Graph& g, std::size_t cap) {
  const ExactResult alpha = exact_alpha(g, cap);
  const Mask all = g.order() == 64 ? ~Mask{0} : (Mask{1} << g.order()) - 1;
  const Mask cover = all & ~to_mask(alpha.witness, g.order());
  ExactResult r{g.order() - alpha.value, to_set(cover)};
  if (!is_vertex_cover(g, r.witness)) throw std::logic_error("oracle cover witness does not cover every edge");
  return r;
}

std::size_t enumerate_alpha(const Graph& g) {
  if (g.order() > 24) throw ResourceError("subset enumeration limited to 24 vertices");
  const auto adj = adjacency_masks(g);
  int best = 0;
  for (Mask s = 0; s < (Mask{1} << g.order()); ++s)
    if (std::popcount(s) > best && mask_independent(adj, s)) best = std::popcount(s);
  return static_cast<std::size_t>(best);
}

bool is_augmenting_set(const Graph& g, std::span<const Vertex> i_set, std::span<const Vertex> s_set) {
  const auto adj = adjacency_masks(g);
  const Mask i = to_mask(i_set, g.order());
  if (!mask_independent(adj, i)) throw InputError("augmenting-set check needs an independent I");
  const Mask s = to_mask(s_set, g.order());
  Mask ns = 0;
  for (Mask rest = s; rest; rest &= rest - 1) ns |= adj[std::countr_zero(rest)];
  const Mask result = (i & ~ns) | s;
  return mask_independent(adj, result) && std::popcount(result) > std::popcount(i);
}

namespace {

// Extends S with candidates at positions >= from; S stays independent.
bool augmenting_search(const std::vector<Mask>& adj, Mask i, const std::vector<int>& cand, std::size_t from, Mask s,
                       Mask ns, std::size_t left) {
  for (std::size_t idx = from; idx < cand.size(); ++idx) {
    const int v = cand[idx];
    const Mask bit = Mask{1} << v;
    if (adj[v] & s) continue;
    const Mask s2 = s | bit, ns2 = ns | adj[v];
    if (std::popcount(s2) > std::popcount(i & ns2)) return true;
    if (left > 1 && augmenting_search(adj, i, cand, idx + 1, s2, ns2, left - 1)) return true;
  }
  return false;
}

}  // namespace

bool has_augmenting_set_upto(const Graph& g, std::span<const Vertex> i_set, std::size_t max_size) {
  const auto adj = adjacency_masks(g);
  const Mask i = to_mask(i_set, g.order());
  if (!mask_independent(adj, i)) throw InputError("augmenting-set check needs an independent I");
  std::vector<int> cand;
  for (std::size_t v = 0; v < g.order(); ++v)
    if (!(i >> v & 1)) cand.push_back(static_cast<int>(v));
  if (max_size == 0) return false;
  return augmenting_search(adj, i, cand, 0, 0, 0, max_size);
}

}  // namespace nearbound::oracle

#include "nearbound/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "nearbound/errors.hpp"

namespace nearbound {

std::size_t largest_q_with_pair_count_at_most(std::size_t limit) {
  // q(q-1) <= limit  <=>  q <= 1/2 + sqrt(1/4 + limit); start from the floating
  // estimate and correct so perfect-square radicands land exactly.
  auto ok = [limit](std::size_t q) { return q == 0 || q * (q - 1) <= limit; };
  auto q = static_cast<std::size_t>(0.5L + std::sqrt(0.25L + static_cast<long double>(limit)));
  while (q > 0 && !ok(q)) --q;
  while (ok(q + 1)) ++q;
  return q;
}

std::size_t bound_p(const Graph& g) {
  if (g.order() == 0) return 0;
  return largest_q_with_pair_count_at_most(2 * complement_edge_count(g));
}

std::size_t bound_p1(const Graph& g) {
  const std::size_t n = g.order();
  const auto d = degree_sequence(g).ascending;
  std::size_t best = 0;
  for (std::size_t i = 1; i <= n; ++i)
    if (d[i - 1] <= n - i) best = i;
  return best;
}

std::size_t bound_wp_chromatic(const Graph& g) {
  auto d = degree_sequence(g).ascending;
  std::sort(d.begin(), d.end(), std::greater<>());
  std::size_t best = 0;
  for (std::size_t i = 1; i <= d.size(); ++i) best = std::max(best, std::min(i, d[i - 1] + 1));
  return best;
}

NeighborhoodUnionSequence neighborhood_union_sequence(const Graph& g, Vertex u) {
  const Bitset& nu = g.neighbors(u);
  NeighborhoodUnionSequence seq{u, {}};
  seq.values.reserve(g.order() - 1 - nu.count());
  for (Vertex v = 0; v < g.order(); ++v) {
    if (v == u || nu.test(v)) continue;
    seq.values.push_back(nu.count_or(g.neighbors(v)));
  }
  std::sort(seq.values.begin(), seq.values.end());
  return seq;
}

std::size_t bound_p2(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) return 0;
  std::vector<std::vector<std::size_t>> seqs;
  seqs.reserve(n);
  for (Vertex v = 0; v < n; ++v) seqs.push_back(neighborhood_union_sequence(g, v).values);

  for (std::size_t k = n; k >= 2; --k) {
    std::size_t count = 0;
    for (const auto& s : seqs)
      if (k - 2 < s.size() && s[k - 2] <= n - k) ++count;
    if (count >= k) return k;
  }
  return 1;
}

BoundsReport bounds_report(const Graph& g, bool with_p2) {
  BoundsReport r;
  r.p = bound_p(g);
  r.p1 = bound_p1(g);
  r.wp_complement = bound_wp_chromatic(g.complement());
  if (with_p2) r.p2 = bound_p2(g);

  if (r.p1 > r.p) throw std::logic_error("bound chain violated: p1 > p");
  if (r.p2 && *r.p2 > r.p1) throw std::logic_error("bound chain violated: p2 > p1");
  if (r.p1 != r.wp_complement) throw std::logic_error("p1 disagrees with the Welsh–Powell bound of the complement");
  return r;
}

}  // namespace nearbound

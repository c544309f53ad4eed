#include "nearbound/kernel.hpp"

#include <string>

#include "nearbound/bounds.hpp"
#include "nearbound/errors.hpp"

namespace nearbound {

KernelResult kernelize(const Graph& g, std::size_t k) {
  const std::size_t n = g.order();
  const std::size_t p = bound_p(g);
  if (p < 2 * k + 1)
    throw ParameterError("kernelization needs p >= 2k + 1, got p=" + std::to_string(p) + ", k=" + std::to_string(k));

  KernelResult r;
  r.p = p;
  r.k = k;
  r.threshold = n - p + k;

  // One pass, degrees taken in the input graph.
  VertexSet keep;
  for (Vertex v = 0; v < n; ++v) {
    if (g.neighbors(v).count() >= r.threshold)
      r.removed.push_back(v);
    else
      keep.push_back(v);
  }
  auto sub = induced_subgraph(g, keep);
  r.kernel = std::move(sub.graph);
  r.mapping = std::move(sub.to_parent);
  r.n0 = r.kernel.order();
  r.budget_t = static_cast<std::int64_t>(r.n0) - static_cast<std::int64_t>(p - k + 1);
  r.trivially_yes = r.n0 <= p - k;
  return r;
}

std::size_t kernel_size_bound(std::int64_t p, std::int64_t k) {
  if (k < 0 || p < 2 * k + 1)
    throw ParameterError("kernel size bound needs k >= 0 and p >= 2k + 1");
  return static_cast<std::size_t>(p + 2 * k + 1);
}

Rational kernel_size_bound_scaled(std::int64_t p, std::int64_t k, Rational c) {
  if (c <= 1) throw ParameterError("scaled kernel bound needs c > 1");
  if (k < 0 || Rational(p) < c * k) throw ParameterError("scaled kernel bound needs k >= 0 and p >= c*k");
  return Rational(p) + c / (c - 1) * (k + 1);
}

}  // namespace nearbound

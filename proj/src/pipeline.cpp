#include "nearbound/pipeline.hpp"

#include <stdexcept>
#include <type_traits>

#include "nearbound/errors.hpp"

namespace nearbound {

Decision decide(const Graph& g, std::size_t k, const DecideOptions& options) {
  Decision d;
  d.k = k;
  d.p = bound_p(g);
  if (d.p < 2 * k + 1)
    throw ParameterError("decision needs p >= 2k + 1, got p=" + std::to_string(d.p) + ", k=" + std::to_string(k));
  const std::size_t target = d.p - k;

  d.bounds = bounds_report(g, false);
  if (!options.skip_bound_steps) {
    if (d.bounds.p1 <= target) {
      d.answer = Answer::Yes;
      d.resolved_at = ResolvedAt::P1Bound;
      d.certificate = BoundCertificate{"p1", d.bounds.p1};
      return d;
    }
    d.bounds.p2 = bound_p2(g);
    if (*d.bounds.p2 > d.bounds.p1) throw std::logic_error("bound chain violated: p2 > p1");
    if (*d.bounds.p2 <= target) {
      d.answer = Answer::Yes;
      d.resolved_at = ResolvedAt::P2Bound;
      d.certificate = BoundCertificate{"p2", *d.bounds.p2};
      return d;
    }
  }

  KernelResult kr = kernelize(g, k);
  if (kr.trivially_yes || kr.budget_t < 0) {
    d.answer = Answer::Yes;
    d.resolved_at = ResolvedAt::KernelTrivial;
    d.certificate = KernelSizeCertificate{kr.n0};
    d.kernel = std::move(kr);
    return d;
  }

  d.resolved_at = ResolvedAt::VcSearch;
  const VcOutcome vc = vertex_cover_decide(kr.kernel, kr.budget_t, options.vc);
  if (vc.covered) {
    IndependentSetCertificate cert;
    Bitset in_cover(kr.n0);
    for (Vertex v : *vc.cover) in_cover.set(v);
    for (Vertex v = 0; v < kr.n0 && cert.vertices.size() < target + 1; ++v)
      if (!in_cover.test(v)) cert.vertices.push_back(kr.mapping[v]);
    if (cert.vertices.size() != target + 1 || !is_independent(g, cert.vertices))
      throw std::logic_error("NO certificate failed to verify in the input graph");
    d.answer = Answer::No;
    d.certificate = std::move(cert);
  } else {
    d.answer = Answer::Yes;
    d.certificate = ExhaustedSearchCertificate{kr.budget_t, vc.nodes_explored};
  }
  d.kernel = std::move(kr);
  return d;
}

std::vector<std::pair<std::size_t, Decision>> decide_many(const Graph& g, const DecideOptions& options) {
  std::vector<std::pair<std::size_t, Decision>> out;
  const std::size_t p = bound_p(g);
  if (p == 0) return out;
  for (std::size_t k = 0; 2 * k + 1 <= p; ++k) out.emplace_back(k, decide(g, k, options));
  bool seen_no = false;
  for (const auto& [k, d] : out) {
    if (d.answer == Answer::No) seen_no = true;
    else if (seen_no) throw std::logic_error("decisions are not monotone in k");
  }
  return out;
}

bool verify_decision(const Graph& g, const Decision& d) {
  if (d.p != bound_p(g) || d.p < 2 * d.k + 1) return false;
  const std::size_t target = d.p - d.k;
  return std::visit(
      [&](const auto& cert) -> bool {
        using T = std::decay_t<decltype(cert)>;
        if constexpr (std::is_same_v<T, BoundCertificate>) {
          const std::size_t actual = cert.bound == "p1" ? bound_p1(g) : cert.bound == "p2" ? bound_p2(g) : target + 1;
          return d.answer == Answer::Yes && actual == cert.value && cert.value <= target;
        } else if constexpr (std::is_same_v<T, KernelSizeCertificate>) {
          return d.answer == Answer::Yes && kernelize(g, d.k).n0 == cert.n0 && cert.n0 <= target;
        } else if constexpr (std::is_same_v<T, IndependentSetCertificate>) {
          for (Vertex v : cert.vertices)
            if (v >= g.order()) return false;
          return d.answer == Answer::No && cert.vertices.size() == target + 1 && is_independent(g, cert.vertices);
        } else {
          const KernelResult kr = kernelize(g, d.k);
          return d.answer == Answer::Yes && kr.budget_t == cert.budget_t &&
                 !vertex_cover_decide(kr.kernel, kr.budget_t).covered;
        }
      },
      d.certificate);
}

const char* to_string(Answer a) { return a == Answer::Yes ? "YES" : "NO"; }

const char* to_string(ResolvedAt r) {
  switch (r) {
    case ResolvedAt::P1Bound: return "P1_BOUND";
    case ResolvedAt::P2Bound: return "P2_BOUND";
    case ResolvedAt::KernelTrivial: return "KERNEL_TRIVIAL";
    case ResolvedAt::VcSearch: return "VC_SEARCH";
  }
  return "?";
}

Answer answer_from_string(const std::string& s) {
  if (s == "YES") return Answer::Yes;
  if (s == "NO") return Answer::No;
  throw InputError("unknown answer '" + s + "'");
}

ResolvedAt resolved_at_from_string(const std::string& s) {
  for (auto r : {ResolvedAt::P1Bound, ResolvedAt::P2Bound, ResolvedAt::KernelTrivial, ResolvedAt::VcSearch})
    if (s == to_string(r)) return r;
  throw InputError("unknown resolution step '" + s + "'");
}

}  // namespace nearbound

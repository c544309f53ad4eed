#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "nearbound/bounds.hpp"
#include "nearbound/graph.hpp"
#include "nearbound/kernel.hpp"
#include "nearbound/vertex_cover.hpp"

namespace nearbound {

enum class Answer { Yes, No };

/// Which step of the decision procedure settled the question.
enum class ResolvedAt { P1Bound, P2Bound, KernelTrivial, VcSearch };

/// YES because a proven upper bound on alpha is already <= p - k.
struct BoundCertificate {
  std::string bound;  // "p1" or "p2"
  std::size_t value = 0;
  friend bool operator==(const BoundCertificate&, const BoundCertificate&) = default;
};

/// YES because the kernel has at most p - k vertices.
struct KernelSizeCertificate {
  std::size_t n0 = 0;
  friend bool operator==(const KernelSizeCertificate&, const KernelSizeCertificate&) = default;
};

/// NO: an independent set of exactly p - k + 1 vertices of the input graph.
struct IndependentSetCertificate {
  VertexSet vertices;
  friend bool operator==(const IndependentSetCertificate&, const IndependentSetCertificate&) = default;
};

/// YES because the kernel has no vertex cover of size budget_t.
struct ExhaustedSearchCertificate {
  std::int64_t budget_t = 0;
  std::uint64_t nodes_explored = 0;
  friend bool operator==(const ExhaustedSearchCertificate&, const ExhaustedSearchCertificate&) = default;
};

using Certificate =
    std::variant<BoundCertificate, KernelSizeCertificate, IndependentSetCertificate, ExhaustedSearchCertificate>;

/// Answer to "alpha(G) <= p - k?". Only the vertex-cover step can answer NO.
struct Decision {
  Answer answer = Answer::Yes;
  ResolvedAt resolved_at = ResolvedAt::P1Bound;
  std::size_t p = 0;
  std::size_t k = 0;
  Certificate certificate;
  BoundsReport bounds;
  std::optional<KernelResult> kernel;

  friend bool operator==(const Decision&, const Decision&) = default;
};

struct DecideOptions {
  /// Go straight to kernelization (diagnostics; must not change the answer).
  bool skip_bound_steps = false;
  VcOptions vc;
};

/// Runs the bound tests (p1, then p2) and falls back to kernel + vertex cover.
/// Requires bound_p(g) >= 2k + 1 (ParameterError otherwise).
Decision decide(const Graph& g, std::size_t k, const DecideOptions& options = {});

/// decide for every k in 0..floor((p-1)/2); answers form a YES prefix.
std::vector<std::pair<std::size_t, Decision>> decide_many(const Graph& g, const DecideOptions& options = {});

/// Re-checks a decision's certificate against g from scratch.
bool verify_decision(const Graph& g, const Decision& d);

const char* to_string(Answer a);
const char* to_string(ResolvedAt r);
Answer answer_from_string(const std::string& s);
ResolvedAt resolved_at_from_string(const std::string& s);

}  // namespace nearbound

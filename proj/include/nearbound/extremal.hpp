#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nearbound/graph.hpp"

namespace nearbound::extremal {

// Structure of kernels G_{p,k} with alpha = p - k + 1 for k = 1, 2, 3. Each
// family is a sandwich: a lower graph that must be contained (with I as the
// designated independent part) and the upper graph |I|K1 + K_r.
enum class FamilyTag { k1_a, k1_b, k2_a, k2_b, k2_c1, k2_c2, k3_a, k3_b, k3_c1, k3_c2, k3_d1, k3_d2, k3_d3, Unmatched };

struct ExtremalAnalysis {
  std::size_t p = 0;
  std::size_t k = 0;
  VertexSet i_set;  ///< maximum independent set, |I| = p - k + 1
  VertexSet r_set;  ///< V \ I
  std::size_t r = 0;
  /// Non-adjacent pairs I×R plus non-adjacent pairs inside R: the complement
  /// edges that count against the size budget.
  std::size_t e_star = 0;
  /// Edges of g with at least one endpoint in R.
  std::size_t r_edge_count = 0;
  FamilyTag family_tag = FamilyTag::Unmatched;

  friend bool operator==(const ExtremalAnalysis&, const ExtremalAnalysis&) = default;
};

struct RInterval {
  std::size_t lo = 0;
  std::size_t hi = 0;
  friend bool operator==(const RInterval&, const RInterval&) = default;
};

enum class Member { Lower, Upper, Random };

/// Smallest p for which the case list for k is complete (3, 8, 15 for k = 1, 2, 3).
std::size_t threshold(std::size_t k);

/// C(p+1, 2) - 1 - C(p-k+1, 2); p >= k >= 1.
std::int64_t e_star_budget(std::int64_t p, std::int64_t k);
/// max{ r(p-k) - C(r,2), ceil(r(p-k)/2) }: fewest complement edges R can carry.
std::int64_t handshake_lower_bound(std::int64_t p, std::int64_t k, std::int64_t r);
/// Values of r compatible with the budget, derived from the handshake bound.
RInterval r_range(std::size_t p, std::size_t k);

std::size_t tag_k(FamilyTag tag);
std::size_t tag_r(FamilyTag tag);
const std::vector<FamilyTag>& tags_for(std::size_t k);
const std::vector<FamilyTag>& all_tags();
std::string to_string(FamilyTag tag);
FamilyTag tag_from_string(const std::string& name);

/// A member of the family's sandwich. I occupies ids 0..p-k, R follows.
/// Random members add each optional edge with probability 1/2.
Graph generate_extremal(FamilyTag tag, std::size_t p, Member member, std::uint64_t seed = 0);

/// Picks a maximum independent set I with the oracle and matches (I, R) against
/// the case list for k. Requires p >= threshold(k) and alpha(g) = p - k + 1.
ExtremalAnalysis classify_extremal(const Graph& g, std::size_t p, std::size_t k);

/// Whether (I, R) contains the tag's lower graph and lies in its upper graph.
bool in_sandwich(const Graph& g, const VertexSet& i_set, FamilyTag tag);

struct EnumerationSummary {
  std::size_t p = 0;
  std::size_t graphs_scanned = 0;   ///< labeled graphs on p and p+1 vertices
  std::size_t candidates = 0;       ///< those with alpha = p
  std::size_t self_kernels = 0;     ///< candidates equal to their own G_{p,1}
  std::map<std::string, std::size_t> by_tag;
};

/// Classifies every labeled graph on p or p+1 vertices with alpha = p at k = 1.
/// Covers every possible kernel G_{p,1} answering NO. 3 <= p <= 6.
EnumerationSummary enumerate_k1(std::size_t p);

}  // namespace nearbound::extremal

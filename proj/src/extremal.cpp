#include "nearbound/extremal.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <stdexcept>

#include "nearbound/bounds.hpp"
#include "nearbound/errors.hpp"
#include "nearbound/kernel.hpp"
#include "nearbound/oracle.hpp"

namespace nearbound::extremal {
namespace {

// A lower graph is a disjoint union of cliques, each holding some R vertices
// and at most one I vertex, padded with isolated I vertices.
struct Component {
  std::size_t r_count;
  std::size_t i_count;
};

struct Family {
  FamilyTag tag;
  const char* name;
  std::size_t k;
  std::size_t r;
  std::vector<Component> lower;
};

const std::vector<Family>& families() {
  static const std::vector<Family> table = {
      {FamilyTag::k1_a, "k1_a", 1, 0, {}},
      {FamilyTag::k1_b, "k1_b", 1, 1, {{1, 1}}},
      {FamilyTag::k2_a, "k2_a", 2, 0, {}},
      {FamilyTag::k2_b, "k2_b", 2, 1, {{1, 1}}},
      {FamilyTag::k2_c1, "k2_c1", 2, 2, {{2, 1}}},
      {FamilyTag::k2_c2, "k2_c2", 2, 2, {{1, 1}, {1, 1}}},
      {FamilyTag::k3_a, "k3_a", 3, 0, {}},
      {FamilyTag::k3_b, "k3_b", 3, 1, {{1, 1}}},
      {FamilyTag::k3_c1, "k3_c1", 3, 2, {{2, 1}}},
      {FamilyTag::k3_c2, "k3_c2", 3, 2, {{1, 1}, {1, 1}}},
      {FamilyTag::k3_d1, "k3_d1", 3, 3, {{3, 1}}},
      {FamilyTag::k3_d2, "k3_d2", 3, 3, {{2, 1}, {1, 1}}},
      {FamilyTag::k3_d3, "k3_d3", 3, 3, {{1, 1}, {1, 1}, {1, 1}}},
  };
  return table;
}

const Family& family(FamilyTag tag) {
  for (const auto& f : families())
    if (f.tag == tag) return f;
  throw ParameterError("no family for tag " + to_string(tag));
}

std::int64_t choose2(std::int64_t x) { return x * (x - 1) / 2; }

void require_supported(std::size_t p, std::size_t k) {
  if (k < 1 || k > 3) throw ParameterError("extremal structure is known only for k in {1, 2, 3}");
  if (p < threshold(k))
    throw ParameterError("k=" + std::to_string(k) + " needs p >= " + std::to_string(threshold(k)) +
                         ", got p=" + std::to_string(p));
}

// Distinct I representatives for components, given candidate lists.
bool distinct_representatives(const std::vector<VertexSet>& cands, std::size_t idx, std::vector<Vertex>& used) {
  if (idx == cands.size()) return true;
  for (Vertex c : cands[idx]) {
    if (std::find(used.begin(), used.end(), c) != used.end()) continue;
    used.push_back(c);
    if (distinct_representatives(cands, idx + 1, used)) return true;
    used.pop_back();
  }
  return false;
}

bool contains_lower(const Graph& g, const VertexSet& i_set, VertexSet r_set, const Family& f) {
  std::sort(r_set.begin(), r_set.end());
  do {
    std::size_t next = 0;
    bool cliques_ok = true;
    std::vector<VertexSet> cands;
    for (const auto& comp : f.lower) {
      const auto first = r_set.begin() + static_cast<std::ptrdiff_t>(next);
      const VertexSet members(first, first + static_cast<std::ptrdiff_t>(comp.r_count));
      next += comp.r_count;
      for (std::size_t a = 0; a < members.size() && cliques_ok; ++a)
        for (std::size_t b = a + 1; b < members.size(); ++b)
          if (!g.adjacent(members[a], members[b])) {
            cliques_ok = false;
            break;
          }
      if (!cliques_ok) break;
      if (comp.i_count == 0) continue;
      VertexSet common;
      for (Vertex y : i_set)
        if (std::all_of(members.begin(), members.end(), [&](Vertex x) { return g.adjacent(x, y); }))
          common.push_back(y);
      cands.push_back(std::move(common));
    }
    std::vector<Vertex> used;
    if (cliques_ok && distinct_representatives(cands, 0, used)) return true;
  } while (std::next_permutation(r_set.begin(), r_set.end()));
  return false;
}

}  // namespace

std::size_t threshold(std::size_t k) {
  switch (k) {
    case 1: return 3;
    case 2: return 8;
    case 3: return 15;
    default: throw ParameterError("extremal structure is known only for k in {1, 2, 3}");
  }
}

std::int64_t e_star_budget(std::int64_t p, std::int64_t k) {
  if (!(k >= 1 && p >= k)) throw ParameterError("e_star budget needs p >= k >= 1");
  return choose2(p + 1) - 1 - choose2(p - k + 1);
}

std::int64_t handshake_lower_bound(std::int64_t p, std::int64_t k, std::int64_t r) {
  const std::int64_t deg = p - k;
  return std::max(r * deg - choose2(r), (r * deg + 1) / 2);
}

RInterval r_range(std::size_t p, std::size_t k) {
  require_supported(p, k);
  const auto P = static_cast<std::int64_t>(p), K = static_cast<std::int64_t>(k);
  const std::int64_t budget = e_star_budget(P, K);
  // r <= 3k from the kernel size bound; also scan past p - k + 1 so the
  // half-degree branch of the bound is exercised.
  const std::int64_t scan = std::max(3 * K, P - K + 1);
  RInterval out{0, 0};
  bool contiguous = true;
  for (std::int64_t r = 1; r <= scan; ++r) {
    const bool feasible = handshake_lower_bound(P, K, r) <= budget;
    if (feasible && !contiguous) throw std::logic_error("feasible r values are not an interval");
    if (feasible) out.hi = static_cast<std::size_t>(r);
    else contiguous = false;
  }
  if (out.hi != k) throw std::logic_error("r range disagrees with the case analysis");
  return out;
}

std::size_t tag_k(FamilyTag tag) { return family(tag).k; }
std::size_t tag_r(FamilyTag tag) { return family(tag).r; }

const std::vector<FamilyTag>& tags_for(std::size_t k) {
  static const std::array<std::vector<FamilyTag>, 3> by_k = [] {
    std::array<std::vector<FamilyTag>, 3> out;
    for (const auto& f : families()) out[f.k - 1].push_back(f.tag);
    return out;
  }();
  if (k < 1 || k > 3) throw ParameterError("extremal structure is known only for k in {1, 2, 3}");
  return by_k[k - 1];
}

const std::vector<FamilyTag>& all_tags() {
  static const std::vector<FamilyTag> tags = [] {
    std::vector<FamilyTag> out;
    for (const auto& f : families()) out.push_back(f.tag);
    return out;
  }();
  return tags;
}

std::string to_string(FamilyTag tag) {
  if (tag == FamilyTag::Unmatched) return "UNMATCHED";
  for (const auto& f : families())
    if (f.tag == tag) return f.name;
  return "?";
}

FamilyTag tag_from_string(const std::string& name) {
  if (name == "UNMATCHED") return FamilyTag::Unmatched;
  for (const auto& f : families())
    if (name == f.name) return f.tag;
  throw ParameterError("unknown family tag '" + name + "'");
}

Graph generate_extremal(FamilyTag tag, std::size_t p, Member member, std::uint64_t seed) {
  const Family& f = family(tag);
  require_supported(p, f.k);
  const std::size_t i_size = p - f.k + 1;
  const std::size_t n0 = i_size + f.r;
  GraphBuilder b(n0);
  auto r_vertex = [&](std::size_t j) { return static_cast<Vertex>(i_size + j); };

  std::size_t next_r = 0, next_i = 0;
  for (const auto& comp : f.lower) {
    VertexSet clique;
    for (std::size_t j = 0; j < comp.r_count; ++j) clique.push_back(r_vertex(next_r++));
    for (std::size_t j = 0; j < comp.i_count; ++j) clique.push_back(static_cast<Vertex>(next_i++));
    for (std::size_t a = 0; a < clique.size(); ++a)
      for (std::size_t c = a + 1; c < clique.size(); ++c) b.add_edge(clique[a], clique[c]);
  }

  if (member != Member::Lower) {
    std::mt19937_64 rng(seed);
    auto maybe = [&](Vertex u, Vertex v) {
      if (b.has_edge(u, v)) return;
      if (member == Member::Upper || (rng() >> 63)) b.add_edge(u, v);
    };
    for (std::size_t j = 0; j < f.r; ++j) {
      for (std::size_t y = 0; y < i_size; ++y) maybe(r_vertex(j), static_cast<Vertex>(y));
      for (std::size_t j2 = j + 1; j2 < f.r; ++j2) maybe(r_vertex(j), r_vertex(j2));
    }
  }
  Graph g = std::move(b).build();

  VertexSet i_set(i_size);
  for (std::size_t y = 0; y < i_size; ++y) i_set[y] = static_cast<Vertex>(y);
  if (!in_sandwich(g, i_set, tag)) throw std::logic_error("generated graph escaped its sandwich");
  return g;
}

bool in_sandwich(const Graph& g, const VertexSet& i_set, FamilyTag tag) {
  if (tag == FamilyTag::Unmatched) return false;
  const Family& f = family(tag);
  if (!is_independent(g, i_set)) return false;
  Bitset in_i(g.order());
  for (Vertex v : i_set) in_i.set(v);
  VertexSet r_set;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!in_i.test(v)) r_set.push_back(v);
  // The upper graph |I|K1 + K_r admits every edge except those inside I, so
  // containment in it reduces to I being independent with the right sizes.
  if (r_set.size() != f.r) return false;
  return contains_lower(g, i_set, r_set, f);
}

ExtremalAnalysis classify_extremal(const Graph& g, std::size_t p, std::size_t k) {
  require_supported(p, k);
  const auto alpha = oracle::exact_alpha(g);
  if (alpha.value != p - k + 1)
    throw InputError("classification needs alpha = p - k + 1 = " + std::to_string(p - k + 1) + ", got " +
                     std::to_string(alpha.value));

  ExtremalAnalysis a;
  a.p = p;
  a.k = k;
  a.i_set = alpha.witness;
  Bitset in_i(g.order());
  for (Vertex v : a.i_set) in_i.set(v);
  for (Vertex v = 0; v < g.order(); ++v)
    if (!in_i.test(v)) a.r_set.push_back(v);
  a.r = a.r_set.size();

  Bitset in_r = ~in_i;
  std::size_t r_internal = 0;
  for (Vertex x : a.r_set) {
    const Bitset& nb = g.neighbors(x);
    a.r_edge_count += nb.count_and(in_i);
    r_internal += nb.count_and(in_r);
  }
  r_internal /= 2;
  a.r_edge_count += r_internal;
  const std::size_t pairs = a.i_set.size() * a.r + a.r * (a.r - (a.r > 0 ? 1 : 0)) / 2;
  a.e_star = pairs - a.r_edge_count;

  a.family_tag = FamilyTag::Unmatched;
  for (FamilyTag tag : tags_for(k))
    if (in_sandwich(g, a.i_set, tag)) {
      a.family_tag = tag;
      break;
    }
  return a;
}

EnumerationSummary enumerate_k1(std::size_t p) {
  if (p < 3 || p > 6) throw ParameterError("small-case enumeration supports 3 <= p <= 6");
  EnumerationSummary s;
  s.p = p;
  for (std::size_t n : {p, p + 1}) {
    std::vector<Edge> slots;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << slots.size()); ++bits) {
      ++s.graphs_scanned;
      GraphBuilder b(n);
      for (std::size_t e = 0; e < slots.size(); ++e)
        if (bits >> e & 1) b.add_edge(slots[e].first, slots[e].second);
      const Graph g = std::move(b).build();
      if (oracle::exact_alpha(g).value != p) continue;
      ++s.candidates;
      if (bound_p(g) == p && kernelize(g, 1).removed.empty()) ++s.self_kernels;
      ++s.by_tag[to_string(classify_extremal(g, p, 1).family_tag)];
    }
  }
  return s;
}

}  // namespace nearbound::extremal

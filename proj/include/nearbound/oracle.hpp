#pragma once

#include <cstddef>
#include <span>

#include "nearbound/graph.hpp"

// Brute-force ground truth. Deliberately shares no search code with the
// vertex-cover engine: everything here runs on 64-bit vertex masks.
namespace nearbound::oracle {

inline constexpr std::size_t kDefaultCap = 40;

struct ExactResult {
  std::size_t value = 0;
  VertexSet witness;
};

/// Maximum independent set by branch and bound. ResourceError when n > cap (cap <= 64).
ExactResult exact_alpha(const Graph& g, std::size_t cap = kDefaultCap);
/// Minimum vertex cover; always n - exact_alpha.
ExactResult exact_min_vc(const Graph& g, std::size_t cap = kDefaultCap);
/// Independence number by scanning all 2^n subsets (n <= 24).
std::size_t enumerate_alpha(const Graph& g);

/// (I \ N(S)) ∪ S is independent and strictly larger than I. InputError if I is not independent.
bool is_augmenting_set(const Graph& g, std::span<const Vertex> i_set, std::span<const Vertex> s_set);
/// Searches every S ⊆ V \ I with 1 <= |S| <= max_size.
bool has_augmenting_set_upto(const Graph& g, std::span<const Vertex> i_set, std::size_t max_size);

}  // namespace nearbound::oracle

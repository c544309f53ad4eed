#include <algorithm>

#include "doctest.h"
#include "nearbound/bounds.hpp"
#include "nearbound/errors.hpp"
#include "nearbound/oracle.hpp"
#include "support.hpp"

using namespace nearbound;
using testing::float_p;

TEST_CASE("bound p") {
  CHECK(bound_p(gen::empty(7)) == 7);
  CHECK(bound_p(gen::complete(5)) == 1);
  CHECK(bound_p(gen::cycle(5)) == float_p(gen::cycle(5)));
  CHECK(bound_p(gen::cycle(5)) == 3);
  CHECK(bound_p(gen::h_np(10, 4)) == 4);
  CHECK(bound_p(Graph{}) == 0);
  CHECK(bound_p(gen::empty(1)) == 1);
}

TEST_CASE("largest q helper at perfect-square radicands") {
  for (std::size_t q = 1; q < 5000; ++q) {
    const std::size_t limit = q * (q - 1);
    CHECK(largest_q_with_pair_count_at_most(limit) == q);
    if (limit > 0) CHECK(largest_q_with_pair_count_at_most(limit - 1) == q - 1);
    CHECK(largest_q_with_pair_count_at_most(limit + 2 * q - 1) == q);
  }
}

TEST_CASE("integer bound p matches the floating formula") {
  testing::for_each_labeled_graph(5, [](const Graph& g) { CHECK(bound_p(g) == float_p(g)); });
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Graph g = gen::gnp(1 + seed % 60, 0.1 * static_cast<double>(seed % 11), seed);
    CHECK(bound_p(g) == float_p(g));
  }
  for (std::size_t n = 3; n <= 30; ++n)
    for (std::size_t p = 2; p < n; ++p) CHECK(bound_p(gen::h_np(n, p)) == float_p(gen::h_np(n, p)));
}

TEST_CASE("adding an edge never increases p") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::size_t n = 6 + seed % 10;
    Graph g = gen::gnp(n, 0.05 * static_cast<double>(seed % 10), seed);
    std::size_t prev = bound_p(g);
    auto edges = g.edges();
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) {
        if (g.adjacent(u, v)) continue;
        edges.emplace_back(u, v);
        g = Graph::from_edges(n, edges);
        const std::size_t now = bound_p(g);
        CHECK(now <= prev);
        prev = now;
      }
    CHECK(prev == 1);
  }
}

TEST_CASE("bound p1") {
  CHECK(bound_p1(gen::complete(5)) == 1);
  CHECK(bound_p1(gen::cycle(5)) == 3);
  CHECK(bound_p1(gen::h_np(10, 4)) == 4);
  CHECK(bound_p1(Graph{}) == 0);
}

TEST_CASE("Welsh–Powell bound") {
  CHECK(bound_wp_chromatic(gen::complete(5)) == 5);
  CHECK(bound_wp_chromatic(gen::cycle(5)) == 3);
  CHECK(bound_wp_chromatic(gen::empty(6)) == 1);
  CHECK(bound_wp_chromatic(Graph{}) == 0);
}

TEST_CASE("p1 equals the Welsh–Powell bound of the complement") {
  testing::for_each_labeled_graph(5, [](const Graph& g) { CHECK(bound_p1(g) == bound_wp_chromatic(g.complement())); });
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Graph g = gen::gnp(2 + seed % 40, 0.1 * static_cast<double>(seed % 10), seed);
    CHECK(bound_p1(g) == bound_wp_chromatic(g.complement()));
  }
}

TEST_CASE("neighbourhood union sequence") {
  CHECK(neighborhood_union_sequence(gen::cycle(5), 2).values == std::vector<std::size_t>{3, 3});
  CHECK(neighborhood_union_sequence(gen::complete(5), 0).values.empty());
  CHECK(neighborhood_union_sequence(gen::empty(4), 1).values == std::vector<std::size_t>{0, 0, 0});
  CHECK_THROWS_AS(neighborhood_union_sequence(gen::cycle(5), 5), InputError);

  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Graph g = gen::gnp(12, 0.08 * static_cast<double>(seed % 12), seed);
    for (Vertex u = 0; u < g.order(); ++u) {
      const auto s = neighborhood_union_sequence(g, u);
      CHECK(s.owner == u);
      CHECK(s.values.size() == g.order() - 1 - g.degree(u));
      CHECK(std::is_sorted(s.values.begin(), s.values.end()));
      for (std::size_t x : s.values) {
        CHECK(x >= g.degree(u));
        CHECK(x <= g.order() - 1);
      }
    }
  }
}

TEST_CASE("bound p2") {
  CHECK(bound_p2(gen::cycle(5)) == 2);
  CHECK(bound_p2(gen::empty(6)) == 6);
  CHECK(bound_p2(gen::complete(5)) == 1);
  CHECK(bound_p2(gen::h_np(10, 4)) == 4);
  CHECK(bound_p2(Graph{}) == 0);
  CHECK(bound_p2(gen::empty(1)) == 1);
}

TEST_CASE("bounds report") {
  const auto c5 = bounds_report(gen::cycle(5), true);
  CHECK(c5.p == 3);
  CHECK(c5.p1 == 3);
  CHECK(c5.p2 == std::optional<std::size_t>(2));
  CHECK(c5.wp_complement == 3);

  const auto k5 = bounds_report(gen::complete(5), true);
  CHECK(k5.p == 1);
  CHECK(k5.p1 == 1);
  CHECK(k5.p2 == std::optional<std::size_t>(1));

  const auto e7 = bounds_report(gen::empty(7), true);
  CHECK(e7.p == 7);
  CHECK(e7.p1 == 7);
  CHECK(e7.p2 == std::optional<std::size_t>(7));

  CHECK_FALSE(bounds_report(gen::cycle(5), false).p2.has_value());
  const auto none = bounds_report(Graph{}, true);
  CHECK(none.p == 0);
  CHECK(none.p1 == 0);
  CHECK(none.p2 == std::optional<std::size_t>(0));
}

TEST_CASE("chain alpha <= p2 <= p1 <= p on every graph with five vertices") {
  testing::for_each_labeled_graph(5, [](const Graph& g) {
    const auto b = bounds_report(g, true);
    const std::size_t alpha = testing::naive_alpha(g);
    CHECK(alpha <= *b.p2);
    CHECK(*b.p2 <= b.p1);
    CHECK(b.p1 <= b.p);
    CHECK(b.p1 >= 1);
  });
}

TEST_CASE("tight family: every bound equals alpha on H_{n,p}") {
  for (std::size_t n = 3; n <= 12; ++n)
    for (std::size_t p = 2; p < n; ++p) {
      const Graph h = gen::h_np(n, p);
      const auto b = bounds_report(h, true);
      CHECK(oracle::exact_alpha(h).value == p);
      CHECK(*b.p2 == p);
      CHECK(b.p1 == p);
      CHECK(b.p == p);
    }
}

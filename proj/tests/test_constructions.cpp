#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "lkfree/constructions.hpp"
#include "lkfree/enumerator.hpp"
#include "lkfree/freeness.hpp"

using namespace lkfree;

namespace {

ForbiddenList list34(std::vector<int> values) {
  return ForbiddenList(4, 3, values);
}

SimpleGraph graph_from_pairs(int n,
                             const std::vector<std::array<int, 2>>& pairs) {
  SimpleGraph g(n, 2);
  for (const auto& e : pairs) g.add_edge(e);
  return g;
}

bool every_4set_induces(const Hypergraph& g, const std::set<int>& allowed) {
  std::vector<int> s = first_subset(4);
  do {
    if (!allowed.count(static_cast<int>(induced_edge_count(g, s))))
      return false;
  } while (next_subset_colex(s, g.vertex_count()));
  return true;
}

}  // namespace

TEST_CASE("tripartition stays balanced for every n") {
  for (int n = 3; n <= 31; ++n) {
    const auto part = Tripartition::canonical(n);
    std::size_t lo = part.classes[0].size(), hi = lo;
    for (const auto& cls : part.classes) {
      lo = std::min(lo, cls.size());
      hi = std::max(hi, cls.size());
    }
    CHECK(hi - lo <= 1);
    CHECK(part.classes[0].size() + part.classes[1].size() +
              part.classes[2].size() ==
          static_cast<std::size_t>(n));
  }
}

TEST_CASE("turan_cn smallest case") {
  const Hypergraph c3 = turan_cn(3);
  CHECK(c3.edge_count() == 1);
  CHECK(c3.has_edge(std::vector<int>{0, 1, 2}));
  CHECK_THROWS_AS(turan_cn(2), std::invalid_argument);
}

TEST_CASE("turan_cn(6) equals the explicit edge list") {
  // Classes {0,3}, {1,4}, {2,5}; 8 transversal edges plus 6 of the
  // two-in-class-i one-in-class-i+1 kind.
  const std::vector<std::vector<int>> expected{
      {0, 1, 2}, {0, 1, 5}, {0, 2, 4}, {0, 4, 5}, {1, 2, 3}, {1, 3, 5},
      {2, 3, 4}, {3, 4, 5},                                  // transversal
      {0, 1, 3}, {0, 3, 4},                                  // two in V1
      {1, 2, 4}, {1, 4, 5},                                  // two in V2
      {0, 2, 5}, {2, 3, 5}};                                 // two in V3
  const Hypergraph c6 = turan_cn(6);
  CHECK(c6.edge_count() == 14);
  for (const auto& e : expected) CHECK(c6.has_edge(e));
}

TEST_CASE("every 4-set of C_n induces 0 or 3 edges") {
  for (int n = 4; n <= 12; ++n)
    CHECK(every_4set_induces(turan_cn(n), {0, 3}));
  CHECK(is_lk_free(turan_cn(9), list34({1, 4})).free);
}

TEST_CASE("link of a C_6 vertex matches its degree") {
  const Hypergraph c6 = turan_cn(6);
  const Hypergraph link = link_graph(c6, 0);
  CHECK(link.edge_count() == c6.degree(0));
}

TEST_CASE("greedy linear transversal families") {
  const auto tiny = greedy_linear_transversal(3, GreedyStrategy::colex_first);
  CHECK(tiny.edges.size() == 1);
  CHECK(tiny.trace.steps == 1);

  for (auto strategy :
       {GreedyStrategy::colex_first, GreedyStrategy::seeded_random}) {
    const auto result = greedy_linear_transversal(30, strategy, 11);
    for (std::size_t i = 0; i < result.edges.size(); ++i) {
      const auto& e = result.edges[i];
      CHECK(e[0] % 3 != e[1] % 3);
      CHECK(e[0] % 3 != e[2] % 3);
      CHECK(e[1] % 3 != e[2] % 3);
      for (std::size_t j = i + 1; j < result.edges.size(); ++j) {
        const auto& f = result.edges[j];
        int common = 0;
        for (int v : e)
          for (int w : f)
            if (v == w) ++common;
        CHECK(common <= 1);
      }
    }
  }
}

TEST_CASE("greedy replay is deterministic") {
  const auto a = greedy_linear_transversal(15, GreedyStrategy::seeded_random, 7);
  const auto b = greedy_linear_transversal(15, GreedyStrategy::seeded_random, 7);
  CHECK(a.edges == b.edges);
  CHECK(a.trace.rejections == b.trace.rejections);
  const auto c = greedy_linear_transversal(15, GreedyStrategy::seeded_random, 8);
  CHECK(a.edges != c.edges);  // different seed, different run (with high prob.)

  const auto s1 = greedy_partial_steiner(12, 3, GreedyStrategy::seeded_random, 3);
  const auto s2 = greedy_partial_steiner(12, 3, GreedyStrategy::seeded_random, 3);
  CHECK(s1.graph == s2.graph);
}

TEST_CASE("qn members") {
  // Empty family: C_n itself.
  CHECK(qn_member(6, {}) == turan_cn(6));

  const auto family = greedy_linear_transversal(9, GreedyStrategy::colex_first);
  const Hypergraph member = qn_member(9, family.edges);
  CHECK(is_lk_free(member, list34({1, 4})).free);
  CHECK(every_4set_induces(member, {0, 2, 3}));  // 0/3 minus a linear family

  // Non-linear family: rejected before building.
  const std::vector<std::array<int, 3>> bad{{0, 1, 2}, {0, 1, 5}};
  CHECK_THROWS_AS(qn_member(6, bad), std::invalid_argument);
  // Non-transversal edge: rejected.
  const std::vector<std::array<int, 3>> nontrans{{0, 3, 1}};
  CHECK_THROWS_AS(qn_member(6, nontrans), std::invalid_argument);
}

TEST_CASE("greedy partial Steiner systems") {
  const auto single = greedy_partial_steiner(3, 3, GreedyStrategy::colex_first);
  CHECK(single.graph.edge_count() == 1);

  for (auto [n, r] : std::vector<std::pair<int, int>>{{20, 3}, {15, 4}, {12, 5}}) {
    const auto result =
        greedy_partial_steiner(n, r, GreedyStrategy::seeded_random, 5);
    const auto edges = result.graph.edge_list();
    CHECK(!edges.empty());
    for (std::size_t i = 0; i < edges.size(); ++i)
      for (std::size_t j = i + 1; j < edges.size(); ++j) {
        int common = 0;
        for (int v : edges[i])
          for (int w : edges[j])
            if (v == w) ++common;
        CHECK(common != r - 1);  // equivalently codegree <= 1
      }
  }
}

TEST_CASE("complete r-partite graphs") {
  CHECK(complete_r_partite(6, 3).edge_count() == 8);   // 2*2*2
  CHECK(complete_r_partite(3, 3).edge_count() == 1);
  CHECK(is_lk_free(complete_r_partite(9, 3), list34({3, 4})).free);
  for (int n = 4; n <= 12; ++n)
    CHECK(is_lk_free(complete_r_partite(n, 3), list34({3, 4})).free);
}

TEST_CASE("parity of the edge count") {
  CHECK(has_even_edge_count(Hypergraph(5, 3)));
  Hypergraph one(5, 3);
  one.add_edge(std::vector<int>{0, 1, 2});
  CHECK_FALSE(has_even_edge_count(one));

  // 2^{C(5,3)-1} graphs on [5] have an even number of edges.
  std::uint64_t even = 0;
  for (std::uint64_t mask = 0; mask < 1024; ++mask) {
    Hypergraph g(5, 3);
    for (int i = 0; i < 10; ++i)
      if ((mask >> i) & 1) g.set_edge_rank(static_cast<std::uint64_t>(i));
    even += has_even_edge_count(g) ? 1 : 0;
  }
  CHECK(even == 512);
}

TEST_CASE("link bijection for {1,3}") {
  CHECK(link_bijection_13(SimpleGraph(4, 2)) == Hypergraph(5, 3));
  CHECK(link_bijection_13(Hypergraph::complete(4, 2)) ==
        Hypergraph::complete(5, 3));

  // All 64 graphs on [4] map injectively onto the ({1,3},4)-free census.
  std::set<Bitset> images;
  const ForbiddenList list = list34({1, 3});
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    SimpleGraph h(4, 2);
    for (int i = 0; i < 6; ++i)
      if ((mask >> i) & 1) h.set_edge_rank(static_cast<std::uint64_t>(i));
    const Hypergraph g = link_bijection_13(h);
    CHECK(is_lk_free(g, list).free);
    CHECK(link_graph(g, 4) == h);
    images.insert(g.edge_bits());
  }
  CHECK(images.size() == 64);
  CHECK(BigCount(images.size()) == count_labeled(5, list).labeled_count);
}

TEST_CASE("triangle-and-matching-free membership") {
  CHECK(is_triangle_and_matching_free(SimpleGraph(4, 2)));
  CHECK_FALSE(is_triangle_and_matching_free(
      graph_from_pairs(4, {{0, 1}, {2, 3}})));  // induced 2-matching
  CHECK(is_triangle_and_matching_free(
      graph_from_pairs(4, {{0, 1}, {1, 2}, {2, 3}})));  // P4
  CHECK_FALSE(is_triangle_and_matching_free(
      graph_from_pairs(4, {{0, 1}, {0, 2}, {1, 2}})));  // triangle
  // A matching that is not induced is fine.
  CHECK(is_triangle_and_matching_free(
      graph_from_pairs(4, {{0, 1}, {2, 3}, {1, 2}})));
}

TEST_CASE("link bijection for {0,1,3}") {
  // Complete link: complement is empty, trivially admissible.
  CHECK(link_bijection_013(Hypergraph::complete(4, 2)) ==
        Hypergraph::complete(5, 3));

  // Complement with a triangle: rejected with a named witness.
  const SimpleGraph star = graph_from_pairs(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK_THROWS_WITH_AS(link_bijection_013(star),
                       doctest::Contains("triangle"), std::invalid_argument);

  // Domain count over [4] equals the ({0,1,3},4)-free census on [5].
  const ForbiddenList list = list34({0, 1, 3});
  std::set<Bitset> images;
  std::uint64_t admissible = 0;
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    SimpleGraph a(4, 2);
    for (int i = 0; i < 6; ++i)
      if ((mask >> i) & 1) a.set_edge_rank(static_cast<std::uint64_t>(i));
    if (!is_triangle_and_matching_free(complement(a))) continue;
    ++admissible;
    const Hypergraph g = link_bijection_013(a);
    CHECK(is_lk_free(g, list).free);
    CHECK(link_graph(g, 4) == a);
    images.insert(g.edge_bits());
  }
  CHECK(admissible == 38);  // brute-force regression value
  CHECK(images.size() == admissible);
  CHECK(BigCount(admissible) == count_labeled(5, list).labeled_count);
}

TEST_CASE("the six admissible 4-vertex link graphs") {
  // A 4-vertex graph has a triangle-free complement and is not C_4 exactly
  // when it is one of: 2K_2, K_3 + vertex, P_4, paw, diamond, K_4. That is
  // the same as the complement being triangle-and-matching-free.
  const std::vector<std::vector<std::array<int, 2>>> references{
      {{0, 1}, {2, 3}},
      {{0, 1}, {0, 2}, {1, 2}},
      {{0, 1}, {1, 2}, {2, 3}},
      {{0, 1}, {0, 2}, {1, 2}, {2, 3}},
      {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}},
      {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}}};
  std::vector<SimpleGraph> reference_graphs;
  for (const auto& pairs : references)
    reference_graphs.push_back(graph_from_pairs(4, pairs));

  const SimpleGraph c4 = graph_from_pairs(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    SimpleGraph a(4, 2);
    for (int i = 0; i < 6; ++i)
      if ((mask >> i) & 1) a.set_edge_rank(static_cast<std::uint64_t>(i));
    const SimpleGraph comp = complement(a);
    bool comp_triangle = false;
    for (int z = 2; z < 4 && !comp_triangle; ++z)
      for (int y = 1; y < z && !comp_triangle; ++y)
        for (int x = 0; x < y; ++x)
          if (comp.has_edge(std::array<int, 2>{x, y}) &&
              comp.has_edge(std::array<int, 2>{x, z}) &&
              comp.has_edge(std::array<int, 2>{y, z})) {
            comp_triangle = true;
            break;
          }
    const bool case_iii = !comp_triangle && !is_isomorphic(a, c4);
    bool matches_reference = false;
    for (const auto& ref : reference_graphs)
      if (is_isomorphic(a, ref)) {
        matches_reference = true;
        break;
      }
    CHECK(case_iii == matches_reference);
    CHECK(case_iii == is_triangle_and_matching_free(comp));
  }
}

TEST_CASE("chain neighborhoods") {
  const std::vector<int> p{0, 1};
  const std::vector<int> q{2, 3};
  CHECK(chain_neighborhoods(graph_from_pairs(4, {{0, 2}, {0, 3}}), p, q));
  CHECK_FALSE(
      chain_neighborhoods(graph_from_pairs(4, {{0, 2}, {1, 3}}), p, q));
  CHECK_THROWS_AS(
      chain_neighborhoods(graph_from_pairs(4, {{0, 1}}), p, q),
      std::invalid_argument);  // edge inside one part
}

TEST_CASE("chain condition is equivalent to no induced 2-matching, 3+3") {
  const std::vector<int> p{0, 1, 2};
  const std::vector<int> q{3, 4, 5};
  for (std::uint32_t mask = 0; mask < (1u << 9); ++mask) {
    SimpleGraph b(6, 2);
    int bit = 0;
    for (int a : p)
      for (int c : q) {
        if ((mask >> bit) & 1)
          b.add_edge(std::array<int, 2>{a, c});
        ++bit;
      }
    bool induced_matching = false;
    for (int a1 : p)
      for (int a2 : p)
        for (int b1 : q)
          for (int b2 : q) {
            if (a1 >= a2 || b1 == b2) continue;
            auto adj = [&](int x, int y) {
              return b.has_edge(std::array<int, 2>{std::min(x, y), std::max(x, y)});
            };
            if (adj(a1, b1) && adj(a2, b2) && !adj(a1, b2) && !adj(a2, b1))
              induced_matching = true;
          }
    CHECK(chain_neighborhoods(b, p, q) == !induced_matching);
  }
}

TEST_CASE("three-coloring witness") {
  const auto single = three_coloring_witness(graph_from_pairs(4, {{0, 1}}));
  REQUIRE(single.size() == 3);
  CHECK(single[0] == std::vector<int>{0});
  CHECK(single[1] == std::vector<int>{1});
  CHECK(single[2] == std::vector<int>{2, 3});

  const auto p4 =
      three_coloring_witness(graph_from_pairs(4, {{0, 1}, {1, 2}, {2, 3}}));
  CHECK(p4.size() == 3);

  const auto edgeless = three_coloring_witness(SimpleGraph(4, 2));
  CHECK(edgeless.size() == 1);

  CHECK_THROWS_AS(
      three_coloring_witness(graph_from_pairs(4, {{0, 1}, {2, 3}})),
      std::invalid_argument);
}

TEST_CASE("three-coloring witness, exhaustive on 6 vertices") {
  for (std::uint32_t mask = 0; mask < (1u << 15); ++mask) {
    SimpleGraph h(6, 2);
    for (int i = 0; i < 15; ++i)
      if ((mask >> i) & 1) h.set_edge_rank(static_cast<std::uint64_t>(i));
    if (!is_triangle_and_matching_free(h)) continue;
    const auto classes = three_coloring_witness(h);
    CHECK(classes.size() <= 3);
    std::size_t covered = 0;
    for (const auto& cls : classes) covered += cls.size();
    CHECK(covered == 6);
  }
}

TEST_CASE("clique plus isolated vertex family") {
  const auto family = clique_plus_isolated_family(5);
  CHECK(family.size() == 6);
  const ForbiddenList list = list34({0, 2, 3});
  std::set<Bitset> family_bits;
  for (const auto& g : family) {
    CHECK(is_lk_free(g, list).free);
    family_bits.insert(g.edge_bits());
  }
  CHECK(family_bits.size() == 6);

  // The family is exactly the census.
  std::set<Bitset> census_bits;
  enumerate_free(5, list,
                 [&](const Hypergraph& g) { census_bits.insert(g.edge_bits()); });
  CHECK(family_bits == census_bits);

  CHECK_THROWS_AS(clique_plus_isolated_family(4), std::invalid_argument);
}

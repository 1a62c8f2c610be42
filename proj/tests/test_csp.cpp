#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "lkfree/csp.hpp"
#include "oracles.hpp"

using namespace lkfree;

namespace {

bool pair_ok(ConstraintKind kind, int a, int b) {
  switch (kind) {
    case ConstraintKind::forbid_mixed:
      return a == b;
    case ConstraintKind::forbid_both_zero:
      return a != 0 || b != 0;
    case ConstraintKind::forbid_both_one:
      return a != 1 || b != 1;
  }
  return true;
}

std::uint64_t oracle_count(const Csp& csp) {
  return oracle::csp_count(csp.variable_count(), [&](int a, int b, int va,
                                                     int vb) {
    return pair_ok(csp.constraint(a, b), va, vb);
  });
}

Csp random_csp(int m, std::mt19937_64& rng) {
  Csp csp(m);
  std::uniform_int_distribution<int> kind(0, 2);
  for (int b = 1; b < m; ++b)
    for (int a = 0; a < b; ++a)
      csp.set_constraint(a, b, static_cast<ConstraintKind>(kind(rng)));
  return csp;
}

// All 3^C(m,2) total constraint functions.
template <class Fn>
void for_all_csps(int m, Fn&& fn) {
  const int pairs = m * (m - 1) / 2;
  std::uint64_t total = 1;
  for (int i = 0; i < pairs; ++i) total *= 3;
  for (std::uint64_t code = 0; code < total; ++code) {
    Csp csp(m);
    std::uint64_t c = code;
    for (int b = 1; b < m; ++b)
      for (int a = 0; a < b; ++a) {
        csp.set_constraint(a, b, static_cast<ConstraintKind>(c % 3));
        c /= 3;
      }
    fn(csp);
  }
}

}  // namespace

TEST_CASE("is_satisfying basics") {
  Csp pair(2, ConstraintKind::forbid_both_one);
  CHECK_FALSE(is_satisfying(pair, Assignment{1, 1}));
  CHECK(is_satisfying(pair, Assignment{0, 1}));

  Csp mixed(3, ConstraintKind::forbid_mixed);
  CHECK(is_satisfying(mixed, Assignment{0, 0, 0}));
  CHECK_FALSE(is_satisfying(mixed, Assignment{0, 1, 0}));

  CHECK_THROWS_AS(is_satisfying(pair, Assignment{0}), std::invalid_argument);
}

TEST_CASE("count_satisfying base cases") {
  CHECK(count_satisfying(Csp(1)) == 2);  // one unconstrained variable
  CHECK(count_satisfying(extremal_csp(3)) == 4);
  CHECK_THROWS_AS(Csp(0), std::invalid_argument);
}

TEST_CASE("extremal family attains m+1 for m = 1..20") {
  for (int m = 1; m <= 20; ++m)
    CHECK(count_satisfying(extremal_csp(m)) ==
          static_cast<std::uint64_t>(m) + 1);
}

TEST_CASE("exhaustive sweep m <= 5: count is exact and at most m+1") {
  for (int m = 3; m <= 5; ++m) {
    std::uint64_t instances = 0;
    for_all_csps(m, [&](const Csp& csp) {
      ++instances;
      const std::uint64_t counted = count_satisfying(csp);
      CHECK(counted == oracle_count(csp));
      CHECK(counted <= static_cast<std::uint64_t>(m) + 1);
    });
    std::uint64_t expect = 1;
    for (int i = 0; i < m * (m - 1) / 2; ++i) expect *= 3;
    CHECK(instances == expect);
  }
}

TEST_CASE("random instances match the 2^m oracle") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 14);
    const Csp csp = random_csp(m, rng);
    CHECK(count_satisfying(csp) == oracle_count(csp));
  }
}

TEST_CASE("count is invariant under variable relabeling") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    const int m = 3 + static_cast<int>(rng() % 8);
    const Csp csp = random_csp(m, rng);
    std::vector<int> perm(static_cast<std::size_t>(m));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Csp permuted(m);
    for (int b = 1; b < m; ++b)
      for (int a = 0; a < b; ++a)
        permuted.set_constraint(perm[static_cast<std::size_t>(a)],
                                perm[static_cast<std::size_t>(b)],
                                csp.constraint(a, b));
    CHECK(count_satisfying(csp) == count_satisfying(permuted));
  }
}

TEST_CASE("induced-CSP split bounds the count") {
  // Branching on the last variable: the free sets are F_0 (pairs forbidding
  // (1,1)) and F_1 (pairs forbidding (0,0)); counts of the induced CSPs
  // bound the total.
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const int m = 3 + static_cast<int>(rng() % 8);
    const Csp csp = random_csp(m, rng);
    auto induced_count = [&](ConstraintKind which) {
      std::vector<int> vars;
      for (int j = 0; j < m - 1; ++j)
        if (csp.constraint(j, m - 1) == which) vars.push_back(j);
      if (vars.empty()) return std::uint64_t{1};
      Csp induced(static_cast<int>(vars.size()));
      for (std::size_t b = 1; b < vars.size(); ++b)
        for (std::size_t a = 0; a < b; ++a)
          induced.set_constraint(static_cast<int>(a), static_cast<int>(b),
                                 csp.constraint(vars[a], vars[b]));
      return count_satisfying(induced);
    };
    CHECK(count_satisfying(csp) <=
          induced_count(ConstraintKind::forbid_both_one) +
              induced_count(ConstraintKind::forbid_both_zero));
  }
}

TEST_CASE("enumerate_satisfying is lexicographic and complete") {
  const auto single = enumerate_satisfying(Csp(1));
  CHECK(single == std::vector<Assignment>{{0}, {1}});

  const auto equal_pairs =
      enumerate_satisfying(Csp(2, ConstraintKind::forbid_mixed));
  CHECK(equal_pairs == std::vector<Assignment>{{0, 0}, {1, 1}});

  const auto extremal3 = enumerate_satisfying(extremal_csp(3));
  CHECK(extremal3 == std::vector<Assignment>{
                         {0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {1, 0, 0}});

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 10);
    const Csp csp = random_csp(m, rng);
    const auto all = enumerate_satisfying(csp);
    CHECK(all.size() == count_satisfying(csp));
    for (const auto& g : all) CHECK(is_satisfying(csp, g));
    CHECK(std::is_sorted(all.begin(), all.end()));
  }

  CHECK_THROWS_AS(enumerate_satisfying(Csp(26)), std::domain_error);
}

TEST_CASE("text format round-trip") {
  Csp csp(3);
  csp.set_constraint(0, 1, ConstraintKind::forbid_mixed);
  csp.set_constraint(0, 2, ConstraintKind::forbid_both_zero);
  csp.set_constraint(1, 2, ConstraintKind::forbid_both_one);
  const std::string text = format_csp(csp);
  CHECK(text == "3\n1 2 MIXED\n1 3 ZERO\n2 3 ONE\n");
  const Csp back = parse_csp(text);
  CHECK(back.variable_count() == 3);
  CHECK(back.constraint(0, 1) == ConstraintKind::forbid_mixed);
  CHECK(back.constraint(1, 2) == ConstraintKind::forbid_both_one);

  CHECK_THROWS_AS(parse_csp("3\n1 2 MIXED\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_csp("2\n1 2 FOO\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_csp("2\n1 2 MIXED\n1 2 ONE\n"), std::invalid_argument);
}

TEST_CASE("extension CSP for the empty anchor forbids mixed pairs") {
  // L = {1,4}, k = 4, r = 3, H empty on [5]: every pair has ||R|| = 0 and the
  // smallest admissible t is 1.
  const ForbiddenList list(4, 3, std::vector<int>{1, 4});
  const Hypergraph h(5, 3);
  const auto ext = derive_extension_csp(h, list, {});
  CHECK(ext.csp.variable_count() == 3);
  CHECK(ext.vertex_of_variable == std::vector<int>{2, 3, 4});
  for (int b = 1; b < 3; ++b)
    for (int a = 0; a < b; ++a)
      CHECK(ext.csp.constraint(a, b) == ConstraintKind::forbid_mixed);
  CHECK(count_satisfying(ext.csp) == 2);

  // Direct cross-check: a coloring of {2,3,4} extends the empty graph freely
  // iff it satisfies the derived CSP.
  for (std::uint32_t coloring = 0; coloring < 8; ++coloring) {
    Hypergraph g(5, 3);
    for (int v = 2; v < 5; ++v)
      if ((coloring >> (v - 2)) & 1)
        g.add_edge(std::vector<int>{0, 1, v});
    Assignment assign{
        static_cast<std::uint8_t>(coloring & 1),
        static_cast<std::uint8_t>((coloring >> 1) & 1),
        static_cast<std::uint8_t>((coloring >> 2) & 1)};
    CHECK(is_lk_free(g, list).free == is_satisfying(ext.csp, assign));
  }
}

TEST_CASE("derived CSP respects the n-k+3 bound over all free anchors") {
  const ForbiddenList list(4, 3, std::vector<int>{1, 4});
  const auto free5 = oracle::free_masks(5, 3, 4, {1, 4});
  const oracle::Universe u(5, 3, 4);
  for (std::uint64_t mask : free5) {
    Hypergraph h(5, 3);
    for (std::size_t e = 0; e < u.edges.size(); ++e)
      if ((mask >> e) & 1) h.add_edge(u.edges[e]);
    const auto ext = derive_extension_csp(h, list, {});
    const std::uint64_t count = count_satisfying(ext.csp);
    CHECK(count <= 5 - 4 + 3);
    // |D(c)| <= |A(G_c)|, with D computed by brute force.
    CHECK(oracle::d_size(u, {1, 4}, {0, 1}, mask) <= count);
  }
}

TEST_CASE("extension CSP with a nonempty partial coloring") {
  // k = 5 needs one colored slot; L is 3-good over {0..10}.
  const ForbiddenList list(5, 3, std::vector<int>{0, 3, 6, 9});
  REQUIRE(is_3_good(list));
  const Hypergraph h(6, 3);
  for (std::uint8_t c = 0; c <= 1; ++c) {
    const auto ext =
        derive_extension_csp(h, list, std::vector<std::uint8_t>{c});
    CHECK(ext.csp.variable_count() == 3);  // vertices {3,4,5}
    CHECK(count_satisfying(ext.csp) <= 6 - 5 + 3);
  }
  CHECK_THROWS_AS(derive_extension_csp(h, list, {}), std::invalid_argument);
}

TEST_CASE("non-3-good lists are reported when no t exists") {
  const ForbiddenList list(4, 3, std::vector<int>{0});
  const Hypergraph complete5 = Hypergraph::complete(5, 3);
  REQUIRE(is_lk_free(complete5, list).free);
  CHECK_THROWS_AS(derive_extension_csp(complete5, list, {}),
                  std::invalid_argument);
}

TEST_CASE("strict masks: count lies between the lemma CSP count and |D|") {
  const ForbiddenList list(4, 3, std::vector<int>{1, 4});
  const auto free5 = oracle::free_masks(5, 3, 4, {1, 4});
  const oracle::Universe u(5, 3, 4);
  for (std::uint64_t mask : free5) {
    Hypergraph h(5, 3);
    for (std::size_t e = 0; e < u.edges.size(); ++e)
      if ((mask >> e) & 1) h.add_edge(u.edges[e]);
    const auto ext = derive_extension_csp(h, list, {});
    const std::uint64_t lemma = count_satisfying(ext.csp);
    const std::uint64_t strict =
        count_with_masks(ext.csp.variable_count(), ext.strict_masks);
    CHECK(strict <= lemma);
    CHECK(oracle::d_size(u, {1, 4}, {0, 1}, mask) <= strict);
  }
}

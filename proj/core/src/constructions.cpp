#include "lkfree/constructions.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "lkfree/freeness.hpp"

namespace lkfree {

Tripartition Tripartition::canonical(int n) {
  if (n < 1) throw std::invalid_argument("Tripartition: n must be positive");
  Tripartition part;
  for (int v = 0; v < n; ++v)
    part.classes[static_cast<std::size_t>(v % 3)].push_back(v);
  return part;
}

const char* strategy_name(GreedyStrategy s) {
  return s == GreedyStrategy::colex_first ? "colex_first" : "seeded_random";
}

GreedyStrategy strategy_from_name(const std::string& name) {
  if (name == "colex_first" || name == "colex") return GreedyStrategy::colex_first;
  if (name == "seeded_random" || name == "random")
    return GreedyStrategy::seeded_random;
  throw std::invalid_argument("unknown greedy strategy '" + name + "'");
}

Hypergraph turan_cn(int n) {
  if (n < 3) throw std::invalid_argument("turan_cn: requires n >= 3");
  Hypergraph g(n, 3);
  for (int c = 2; c < n; ++c)
    for (int b = 1; b < c; ++b)
      for (int a = 0; a < b; ++a) {
        const int ca = a % 3, cb = b % 3, cc = c % 3;
        bool edge = false;
        if (ca != cb && ca != cc && cb != cc) {
          edge = true;  // transversal
        } else {
          // two in class i, one in class i+1 (mod 3)
          int two = -1, one = -1;
          if (ca == cb && ca != cc) {
            two = ca;
            one = cc;
          } else if (ca == cc && ca != cb) {
            two = ca;
            one = cb;
          } else if (cb == cc && cb != ca) {
            two = cb;
            one = ca;
          }
          if (two >= 0 && one == (two + 1) % 3) edge = true;
        }
        if (edge) {
          const std::array<int, 3> e{a, b, c};
          g.add_edge(e);
        }
      }
  return g;
}

namespace {

// Pool-based greedy: candidates conflicting with a chosen edge are invalid
// forever, so the pool shrinks monotonically. rejections[i] = number removed
// right after step i.
template <class Conflicts>
GreedyTrace run_greedy(std::vector<std::vector<int>>& pool,
                       GreedyStrategy strategy, std::uint64_t seed,
                       Conflicts&& conflicts,
                       std::vector<std::vector<int>>& chosen) {
  GreedyTrace trace;
  trace.strategy = strategy;
  trace.seed = seed;
  std::mt19937_64 rng(seed);
  while (!pool.empty()) {
    std::size_t pick = 0;
    if (strategy == GreedyStrategy::seeded_random) {
      std::uniform_int_distribution<std::size_t> dist(0, pool.size() - 1);
      pick = dist(rng);
    }
    std::vector<int> edge = pool[pick];
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
    chosen.push_back(edge);
    trace.edges.push_back(edge);
    std::uint64_t removed = 0;
    std::erase_if(pool, [&](const std::vector<int>& cand) {
      if (conflicts(edge, cand)) {
        ++removed;
        return true;
      }
      return false;
    });
    trace.rejections.push_back(removed);
  }
  trace.steps = trace.edges.size();
  return trace;
}

std::uint64_t intersection_size(std::span<const int> a,
                                std::span<const int> b) {
  std::uint64_t isect = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      ++isect;
      ++i;
      ++j;
    } else if (a[i] < b[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return isect;
}

}  // namespace

LinearFamilyResult greedy_linear_transversal(int n, GreedyStrategy strategy,
                                             std::uint64_t seed) {
  if (n < 3)
    throw std::invalid_argument("greedy_linear_transversal: requires n >= 3");
  std::vector<std::vector<int>> pool;
  for (int c = 2; c < n; ++c)
    for (int b = 1; b < c; ++b)
      for (int a = 0; a < b; ++a)
        if (a % 3 != b % 3 && a % 3 != c % 3 && b % 3 != c % 3)
          pool.push_back({a, b, c});
  std::vector<std::vector<int>> chosen;
  GreedyTrace trace = run_greedy(
      pool, strategy, seed,
      [](std::span<const int> e, std::span<const int> cand) {
        return intersection_size(e, cand) > 1;
      },
      chosen);
  LinearFamilyResult result;
  for (const auto& e : chosen) result.edges.push_back({e[0], e[1], e[2]});
  result.trace = std::move(trace);
  return result;
}

Hypergraph qn_member(int n, std::span<const std::array<int, 3>> family) {
  Hypergraph cn = turan_cn(n);
  for (std::size_t i = 0; i < family.size(); ++i) {
    const auto& e = family[i];
    if (!(e[0] < e[1] && e[1] < e[2]) || e[0] < 0 || e[2] >= n)
      throw std::invalid_argument("qn_member: malformed family edge");
    if (e[0] % 3 == e[1] % 3 || e[0] % 3 == e[2] % 3 || e[1] % 3 == e[2] % 3)
      throw std::invalid_argument(
          "qn_member: family edge is not transversal for the canonical "
          "tripartition");
    for (std::size_t j = 0; j < i; ++j) {
      const auto& f = family[j];
      if (intersection_size(e, f) > 1)
        throw std::invalid_argument(
            "qn_member: family is not linear (two edges share 2+ vertices)");
    }
  }
  for (const auto& e : family) cn.remove_edge(e);
  if (n >= 4) {
    const ForbiddenList list(4, 3, std::vector<int>{1, 4});
    const FreenessReport report = is_lk_free(cn, list);
    if (!report.free)
      throw std::logic_error("qn_member: output failed the ({1,4},4) check");
  }
  return cn;
}

SteinerResult greedy_partial_steiner(int n, int r, GreedyStrategy strategy,
                                     std::uint64_t seed) {
  if (r < 2 || n < r)
    throw std::invalid_argument("greedy_partial_steiner: need n >= r >= 2");
  std::vector<std::vector<int>> pool = all_subsets_colex(n, r);
  std::vector<std::vector<int>> chosen;
  const std::uint64_t forbidden = static_cast<std::uint64_t>(r) - 1;
  GreedyTrace trace = run_greedy(
      pool, strategy, seed,
      [forbidden](std::span<const int> e, std::span<const int> cand) {
        return intersection_size(e, cand) == forbidden;
      },
      chosen);
  Hypergraph g(n, r);
  for (const auto& e : chosen) g.add_edge(e);
  return {std::move(g), std::move(trace)};
}

Hypergraph complete_r_partite(int n, int r) {
  if (r < 2 || n < r)
    throw std::invalid_argument("complete_r_partite: need n >= r >= 2");
  Hypergraph g(n, r);
  std::vector<int> edge = first_subset(r);
  do {
    bool transversal = true;
    std::vector<bool> used(static_cast<std::size_t>(r), false);
    for (int v : edge) {
      const std::size_t cls = static_cast<std::size_t>(v % r);
      if (used[cls]) {
        transversal = false;
        break;
      }
      used[cls] = true;
    }
    if (transversal) g.add_edge(edge);
  } while (next_subset_colex(edge, n));
  return g;
}

bool has_even_edge_count(const Hypergraph& g) {
  return g.edge_count() % 2 == 0;
}

Hypergraph link_bijection_13(const SimpleGraph& h) {
  if (h.uniformity() != 2)
    throw std::invalid_argument("link_bijection_13: link must be a graph");
  const int m = h.vertex_count();
  const int n = m + 1;
  Hypergraph g(n, 3);
  for (int b = 1; b < m; ++b)
    for (int a = 0; a < b; ++a)
      if (h.has_edge(std::array<int, 2>{a, b}))
        g.add_edge(std::array<int, 3>{a, b, m});
  for (int c = 2; c < m; ++c)
    for (int b = 1; b < c; ++b)
      for (int a = 0; a < b; ++a) {
        const int cnt = (h.has_edge(std::array<int, 2>{a, b}) ? 1 : 0) +
                        (h.has_edge(std::array<int, 2>{a, c}) ? 1 : 0) +
                        (h.has_edge(std::array<int, 2>{b, c}) ? 1 : 0);
        if (cnt % 2 == 1) g.add_edge(std::array<int, 3>{a, b, c});
      }
  return g;
}

bool is_triangle_and_matching_free(const SimpleGraph& h) {
  if (h.uniformity() != 2)
    throw std::invalid_argument(
        "is_triangle_and_matching_free: expects a graph");
  const int n = h.vertex_count();
  auto adj = [&](int a, int b) {
    return h.has_edge(std::array<int, 2>{std::min(a, b), std::max(a, b)});
  };
  for (int c = 2; c < n; ++c)
    for (int b = 1; b < c; ++b)
      for (int a = 0; a < b; ++a)
        if (adj(a, b) && adj(a, c) && adj(b, c)) return false;
  // Induced 2-matching: disjoint edges ab, cd with no edge between them.
  const auto edges = h.edge_list();
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const int a = edges[i][0], b = edges[i][1];
      const int c = edges[j][0], d = edges[j][1];
      if (a == c || a == d || b == c || b == d) continue;
      if (!adj(a, c) && !adj(a, d) && !adj(b, c) && !adj(b, d)) return false;
    }
  return true;
}

Hypergraph link_bijection_013(const SimpleGraph& a) {
  if (a.uniformity() != 2)
    throw std::invalid_argument("link_bijection_013: link must be a graph");
  const SimpleGraph comp = complement(a);
  if (!is_triangle_and_matching_free(comp)) {
    // Name the violation for reproducible rejections.
    const int n = comp.vertex_count();
    auto adj = [&](int x, int y) {
      return comp.has_edge(std::array<int, 2>{std::min(x, y), std::max(x, y)});
    };
    for (int z = 2; z < n; ++z)
      for (int y = 1; y < z; ++y)
        for (int x = 0; x < y; ++x)
          if (adj(x, y) && adj(x, z) && adj(y, z))
            throw std::invalid_argument(
                "link_bijection_013: complement has triangle {" +
                std::to_string(x + 1) + "," + std::to_string(y + 1) + "," +
                std::to_string(z + 1) + "}");
    const auto edges = comp.edge_list();
    for (std::size_t i = 0; i < edges.size(); ++i)
      for (std::size_t j = i + 1; j < edges.size(); ++j) {
        const int p = edges[i][0], q = edges[i][1];
        const int s = edges[j][0], t = edges[j][1];
        if (p == s || p == t || q == s || q == t) continue;
        if (!adj(p, s) && !adj(p, t) && !adj(q, s) && !adj(q, t))
          throw std::invalid_argument(
              "link_bijection_013: complement has induced 2-matching {" +
              std::to_string(p + 1) + "," + std::to_string(q + 1) + "},{" +
              std::to_string(s + 1) + "," + std::to_string(t + 1) + "}");
      }
    throw std::invalid_argument(
        "link_bijection_013: complement not triangle-and-matching-free");
  }
  // Items (2)/(3) reduce to the same parity rule as the {1,3} bijection.
  return link_bijection_13(a);
}

bool chain_neighborhoods(const SimpleGraph& b, std::span<const int> part_p,
                         std::span<const int> part_q) {
  if (b.uniformity() != 2)
    throw std::invalid_argument("chain_neighborhoods: expects a graph");
  const int n = b.vertex_count();
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  for (int v : part_p) side.at(static_cast<std::size_t>(v)) = 0;
  for (int v : part_q) {
    if (side.at(static_cast<std::size_t>(v)) == 0)
      throw std::invalid_argument("chain_neighborhoods: parts overlap");
    side[static_cast<std::size_t>(v)] = 1;
  }
  for (const auto& e : b.edge_list()) {
    const int sa = side[static_cast<std::size_t>(e[0])];
    const int sb = side[static_cast<std::size_t>(e[1])];
    if (sa < 0 || sb < 0 || sa == sb)
      throw std::invalid_argument(
          "chain_neighborhoods: graph is not bipartite w.r.t. the given parts");
  }
  auto adj = [&](int x, int y) {
    return b.has_edge(std::array<int, 2>{std::min(x, y), std::max(x, y)});
  };
  for (std::size_t i = 0; i < part_p.size(); ++i)
    for (std::size_t j = i + 1; j < part_p.size(); ++j) {
      bool i_minus_j = false;
      bool j_minus_i = false;
      for (int q : part_q) {
        const bool ai = adj(part_p[i], q);
        const bool aj = adj(part_p[j], q);
        if (ai && !aj) i_minus_j = true;
        if (aj && !ai) j_minus_i = true;
      }
      if (i_minus_j && j_minus_i) return false;  // incomparable neighborhoods
    }
  return true;
}

std::vector<std::vector<int>> three_coloring_witness(const SimpleGraph& h) {
  if (h.uniformity() != 2)
    throw std::invalid_argument("three_coloring_witness: expects a graph");
  if (!is_triangle_and_matching_free(h))
    throw std::invalid_argument(
        "three_coloring_witness: input is not triangle-and-matching-free");
  const int n = h.vertex_count();
  if (h.edge_count() == 0) {
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) all[static_cast<std::size_t>(v)] = v;
    return {all};
  }
  const auto first_edge = h.edge_list().front();
  const int u = first_edge[0];
  const int v = first_edge[1];
  auto adj = [&](int x, int y) {
    return x != y &&
           h.has_edge(std::array<int, 2>{std::min(x, y), std::max(x, y)});
  };
  std::vector<std::vector<int>> classes(3);
  for (int w = 0; w < n; ++w) {
    if (w == u || adj(w, v)) {
      classes[0].push_back(w);
    } else if (w == v || adj(w, u)) {
      classes[1].push_back(w);
    } else {
      classes[2].push_back(w);
    }
  }
  for (const auto& cls : classes)
    for (std::size_t i = 0; i < cls.size(); ++i)
      for (std::size_t j = i + 1; j < cls.size(); ++j)
        if (adj(cls[i], cls[j]))
          throw std::logic_error(
              "three_coloring_witness: proof partition not independent");
  return classes;
}

std::vector<Hypergraph> clique_plus_isolated_family(int n) {
  if (n < 5)
    throw std::invalid_argument("clique_plus_isolated_family: requires n >= 5");
  std::vector<Hypergraph> family;
  family.push_back(Hypergraph::complete(n, 3));
  for (int isolated = 0; isolated < n; ++isolated) {
    Hypergraph g(n, 3);
    std::vector<int> edge = first_subset(3);
    do {
      if (!std::binary_search(edge.begin(), edge.end(), isolated))
        g.add_edge(edge);
    } while (next_subset_colex(edge, n));
    family.push_back(std::move(g));
  }
  return family;
}

}  // namespace lkfree

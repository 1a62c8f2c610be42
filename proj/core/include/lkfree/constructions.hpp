#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lkfree/hypergraph.hpp"

namespace lkfree {

// Balanced tripartition of {0..n-1}: vertex v goes to class v mod 3, which
// keeps class sizes within 1 of each other for every n.
struct Tripartition {
  std::array<std::vector<int>, 3> classes;

  static Tripartition canonical(int n);
  int class_of(int v) const { return v % 3; }
};

enum class GreedyStrategy { colex_first, seeded_random };

// Reproducible record of a greedy construction: replaying with the same
// strategy and seed yields the same edge sequence. rejections[i] counts the
// candidates discarded from the pool right after step i's choice.
struct GreedyTrace {
  GreedyStrategy strategy = GreedyStrategy::colex_first;
  std::uint64_t seed = 0;
  std::uint64_t steps = 0;
  std::vector<std::vector<int>> edges;
  std::vector<std::uint64_t> rejections;
};

const char* strategy_name(GreedyStrategy s);
GreedyStrategy strategy_from_name(const std::string& name);

// The Turan-type 3-graph C_n: an edge either meets all three classes of the
// canonical tripartition, or has two vertices in class i and one in class
// i+1 (mod 3). Every 4-set induces 0 or 3 edges.
Hypergraph turan_cn(int n);

// Greedy member of L(n): transversal triples with pairwise intersections of
// size at most 1, grown until no valid candidate remains.
struct LinearFamilyResult {
  std::vector<std::array<int, 3>> edges;
  GreedyTrace trace;
};
LinearFamilyResult greedy_linear_transversal(int n, GreedyStrategy strategy,
                                             std::uint64_t seed = 0);

// C_n minus a linear transversal family: a member of Q(n). Rejects families
// that are not linear or not transversal; validates the result is
// ({1,4},4)-free when n >= 4.
Hypergraph qn_member(int n, std::span<const std::array<int, 3>> family);

// Greedy member of M(n,r): no two edges share exactly r-1 vertices, i.e.
// every (r-1)-subset lies in at most one edge.
struct SteinerResult {
  Hypergraph graph;
  GreedyTrace trace;
};
SteinerResult greedy_partial_steiner(int n, int r, GreedyStrategy strategy,
                                     std::uint64_t seed = 0);

// Balanced complete r-partite r-graph: transversal edges only.
Hypergraph complete_r_partite(int n, int r);

bool has_even_edge_count(const Hypergraph& g);

// The ({1,3},4) link bijection: from a graph H on [n-1] to the unique
// ({1,3},4)-free 3-graph on [n] whose top-vertex link is H. Triples through
// the top vertex copy H's edges; interior triples are present exactly when H
// induces an odd number of edges on them.
Hypergraph link_bijection_13(const SimpleGraph& h);

// Membership in F_{triangle,M}: no triangle and no induced two-edge matching.
bool is_triangle_and_matching_free(const SimpleGraph& h);

// The ({0,1,3},4) link bijection. Domain: graphs A whose complement is
// triangle-and-induced-matching-free; rejects others, naming the violating
// vertex set. The interior rule coincides with the parity rule above.
Hypergraph link_bijection_013(const SimpleGraph& a);

// True iff the neighborhoods of the P-side vertices form a chain under
// inclusion. Throws if an edge of b does not cross the given parts.
bool chain_neighborhoods(const SimpleGraph& b, std::span<const int> part_p,
                         std::span<const int> part_q);

// The explicit proof partition into three independent sets: {u} u N(v),
// {v} u N(u) and the rest, for the colex-first edge uv. Edgeless graphs
// return a single class. Validates independence before returning.
std::vector<std::vector<int>> three_coloring_witness(const SimpleGraph& h);

// The n+1 graphs of the ({0,2,3},4) census for n >= 5: the complete 3-graph
// plus, for each vertex, the clique on the other n-1 vertices.
std::vector<Hypergraph> clique_plus_isolated_family(int n);

}  // namespace lkfree

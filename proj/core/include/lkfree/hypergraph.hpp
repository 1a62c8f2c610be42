#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "lkfree/bitset.hpp"
#include "lkfree/combinatorics.hpp"

namespace lkfree {

// r-uniform hypergraph on vertices 0..n-1. Edges live in a bitset indexed by
// the colex rank of each r-subset, so the edges inside {0..v} always occupy
// a contiguous prefix of the index range; growing a graph by one vertex is a
// bit-prefix extension.
//
// Construction rejects C(n,r) > 2^32 slots. Vertices are 0-based everywhere
// in this API; the text format (see parse_hypergraph/format_hypergraph) is
// 1-based.
//
// Instances are plain values; all free functions below are pure, so sharing
// across threads needs no synchronization.
class Hypergraph {
 public:
  Hypergraph(int n, int r);

  static Hypergraph complete(int n, int r);
  static Hypergraph from_edges(int n, int r,
                               std::span<const std::vector<int>> edges);

  int vertex_count() const { return n_; }
  int uniformity() const { return r_; }

  // Number of edge slots, C(n,r).
  std::uint64_t slot_count() const { return edges_.size(); }
  std::uint64_t edge_count() const { return edges_.count(); }

  bool has_edge_rank(std::uint64_t rank) const { return edges_.test(rank); }
  void set_edge_rank(std::uint64_t rank, bool present = true) {
    edges_.set(rank, present);
  }

  bool has_edge(std::span<const int> vertices) const;
  void add_edge(std::span<const int> vertices);
  void remove_edge(std::span<const int> vertices);

  const Bitset& edge_bits() const { return edges_; }

  // Edges as vertex lists, sorted by colex rank.
  std::vector<std::vector<int>> edge_list() const;

  std::uint64_t degree(int v) const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  std::uint64_t checked_rank(std::span<const int> vertices) const;

  int n_ = 0;
  int r_ = 0;
  Bitset edges_;
};

// 2-uniform hypergraphs double as simple graphs.
using SimpleGraph = Hypergraph;

// Number of edges of g inside the vertex set s (|s| >= r required).
std::uint64_t induced_edge_count(const Hypergraph& g, std::span<const int> s);

// Edge-complement within the C(n,r) slots.
Hypergraph complement(const Hypergraph& g);

// Hypergraph on |s| vertices via order-preserving relabeling of s.
Hypergraph induced_subhypergraph(const Hypergraph& g, std::span<const int> s);

// (r-1)-graph on n-1 vertices: edges e\{v} for edges e containing v, with
// vertices above v shifted down. The edge count equals degree(v).
Hypergraph link_graph(const Hypergraph& g, int v);

// Relabels vertices: vertex v of g becomes perm[v].
Hypergraph relabel(const Hypergraph& g, std::span<const int> perm);

// Lexicographically minimal edge bitset over all n! relabelings (bitsets
// compared as integers). Two hypergraphs are isomorphic iff their canonical
// forms are equal. Guarded to n <= 10: the scan is a full permutation
// minimization, chosen for correctness over speed at the small n used here.
Hypergraph canonical_form(const Hypergraph& g);

// Degree-sequence prefilter, then canonical-form comparison.
bool is_isomorphic(const Hypergraph& a, const Hypergraph& b);

std::vector<std::uint64_t> degree_sequence(const Hypergraph& g);

// Text format: first line "n r", then one edge per line as r space-separated
// 1-based vertex indices in increasing order, edges sorted by colex rank.
// The parser rejects duplicate edges, wrong arity and out-of-range vertices.
Hypergraph parse_hypergraph(std::istream& in);
Hypergraph parse_hypergraph(const std::string& text);
std::string format_hypergraph(const Hypergraph& g);

}  // namespace lkfree

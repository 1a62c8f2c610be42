#include "lkfree/hypergraph.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lkfree {

namespace {

constexpr std::uint64_t kMaxSlots = std::uint64_t{1} << 32;

void check_subset_shape(std::span<const int> vertices, int n, int r,
                        const char* who) {
  if (static_cast<int>(vertices.size()) != r)
    throw std::invalid_argument(std::string(who) + ": expected " +
                                std::to_string(r) + " vertices, got " +
                                std::to_string(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] < 0 || vertices[i] >= n)
      throw std::invalid_argument(std::string(who) + ": vertex out of range");
    if (i > 0 && vertices[i] <= vertices[i - 1])
      throw std::invalid_argument(std::string(who) +
                                  ": vertices must be strictly increasing");
  }
}

}  // namespace

Hypergraph::Hypergraph(int n, int r) : n_(n), r_(r) {
  if (n < 1) throw std::invalid_argument("Hypergraph: n must be positive");
  if (r < 1 || r > n)
    throw std::invalid_argument("Hypergraph: need 1 <= r <= n");
  const std::uint64_t slots =
      binom(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(r));
  if (slots > kMaxSlots)
    throw std::invalid_argument(
        "Hypergraph: C(n,r) exceeds the 2^32 slot limit");
  edges_ = Bitset(slots);
}

Hypergraph Hypergraph::complete(int n, int r) {
  Hypergraph g(n, r);
  g.edges_.flip_all();
  return g;
}

Hypergraph Hypergraph::from_edges(int n, int r,
                                  std::span<const std::vector<int>> edges) {
  Hypergraph g(n, r);
  for (const auto& e : edges) g.add_edge(e);
  return g;
}

std::uint64_t Hypergraph::checked_rank(std::span<const int> vertices) const {
  check_subset_shape(vertices, n_, r_, "Hypergraph");
  return colex_rank(vertices);
}

bool Hypergraph::has_edge(std::span<const int> vertices) const {
  return edges_.test(checked_rank(vertices));
}

void Hypergraph::add_edge(std::span<const int> vertices) {
  edges_.set(checked_rank(vertices));
}

void Hypergraph::remove_edge(std::span<const int> vertices) {
  edges_.reset(checked_rank(vertices));
}

std::vector<std::vector<int>> Hypergraph::edge_list() const {
  std::vector<std::vector<int>> out;
  out.reserve(edge_count());
  std::vector<int> scratch(static_cast<std::size_t>(r_));
  edges_.for_each_set([&](std::uint64_t rank) {
    colex_unrank(rank, r_, scratch);
    out.push_back(scratch);
  });
  return out;
}

std::uint64_t Hypergraph::degree(int v) const {
  if (v < 0 || v >= n_)
    throw std::invalid_argument("Hypergraph::degree: vertex out of range");
  std::uint64_t deg = 0;
  std::vector<int> scratch(static_cast<std::size_t>(r_));
  edges_.for_each_set([&](std::uint64_t rank) {
    colex_unrank(rank, r_, scratch);
    if (std::binary_search(scratch.begin(), scratch.end(), v)) ++deg;
  });
  return deg;
}

std::uint64_t induced_edge_count(const Hypergraph& g, std::span<const int> s) {
  const int r = g.uniformity();
  if (static_cast<int>(s.size()) < r)
    throw std::invalid_argument("induced_edge_count: |S| < r");
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0 || s[i] >= g.vertex_count())
      throw std::invalid_argument("induced_edge_count: vertex out of range");
    if (i > 0 && s[i] <= s[i - 1])
      throw std::invalid_argument(
          "induced_edge_count: S must be strictly increasing");
  }
  std::uint64_t total = 0;
  std::vector<int> idx = first_subset(r);
  std::vector<int> edge(static_cast<std::size_t>(r));
  do {
    for (int i = 0; i < r; ++i)
      edge[static_cast<std::size_t>(i)] = s[static_cast<std::size_t>(idx[i])];
    total += g.has_edge_rank(colex_rank(edge)) ? 1 : 0;
  } while (next_subset_colex(idx, static_cast<int>(s.size())));
  return total;
}

Hypergraph complement(const Hypergraph& g) {
  Hypergraph result(g.vertex_count(), g.uniformity());
  Bitset bits = g.edge_bits();
  bits.flip_all();
  bits.for_each_set([&](std::uint64_t rank) { result.set_edge_rank(rank); });
  return result;
}

Hypergraph induced_subhypergraph(const Hypergraph& g, std::span<const int> s) {
  const int r = g.uniformity();
  if (static_cast<int>(s.size()) < r)
    throw std::invalid_argument("induced_subhypergraph: |S| < r");
  Hypergraph sub(static_cast<int>(s.size()), r);
  std::vector<int> idx = first_subset(r);
  std::vector<int> edge(static_cast<std::size_t>(r));
  do {
    for (int i = 0; i < r; ++i)
      edge[static_cast<std::size_t>(i)] = s[static_cast<std::size_t>(idx[i])];
    if (g.has_edge(edge)) sub.set_edge_rank(colex_rank(idx));
  } while (next_subset_colex(idx, static_cast<int>(s.size())));
  return sub;
}

Hypergraph link_graph(const Hypergraph& g, int v) {
  if (v < 0 || v >= g.vertex_count())
    throw std::invalid_argument("link_graph: vertex out of range");
  if (g.uniformity() < 2)
    throw std::invalid_argument("link_graph: requires r >= 2");
  Hypergraph link(g.vertex_count() - 1, g.uniformity() - 1);
  std::vector<int> scratch(static_cast<std::size_t>(g.uniformity()));
  std::vector<int> reduced;
  g.edge_bits().for_each_set([&](std::uint64_t rank) {
    colex_unrank(rank, g.uniformity(), scratch);
    if (!std::binary_search(scratch.begin(), scratch.end(), v)) return;
    reduced.clear();
    for (int w : scratch) {
      if (w == v) continue;
      reduced.push_back(w > v ? w - 1 : w);
    }
    link.add_edge(reduced);
  });
  return link;
}

Hypergraph relabel(const Hypergraph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.vertex_count())
    throw std::invalid_argument("relabel: permutation size mismatch");
  Hypergraph out(g.vertex_count(), g.uniformity());
  std::vector<int> scratch(static_cast<std::size_t>(g.uniformity()));
  std::vector<int> image(static_cast<std::size_t>(g.uniformity()));
  g.edge_bits().for_each_set([&](std::uint64_t rank) {
    colex_unrank(rank, g.uniformity(), scratch);
    for (std::size_t i = 0; i < scratch.size(); ++i)
      image[i] = perm[static_cast<std::size_t>(scratch[i])];
    std::sort(image.begin(), image.end());
    out.set_edge_rank(colex_rank(image));
  });
  return out;
}

Hypergraph canonical_form(const Hypergraph& g) {
  const int n = g.vertex_count();
  if (n > 10)
    throw std::domain_error(
        "canonical_form: full permutation minimization is guarded to n <= 10");
  const int r = g.uniformity();
  // Unrank every slot once; each permutation then only remaps set bits.
  std::vector<std::vector<int>> slot_vertices;
  slot_vertices.reserve(g.slot_count());
  {
    std::vector<int> scratch(static_cast<std::size_t>(r));
    for (std::uint64_t rank = 0; rank < g.slot_count(); ++rank) {
      colex_unrank(rank, r, scratch);
      slot_vertices.push_back(scratch);
    }
  }
  std::vector<std::uint64_t> set_ranks;
  g.edge_bits().for_each_set(
      [&](std::uint64_t rank) { set_ranks.push_back(rank); });

  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  Bitset best = g.edge_bits();
  Bitset candidate(g.slot_count());
  std::vector<int> image(static_cast<std::size_t>(r));
  do {
    candidate.clear();
    for (std::uint64_t rank : set_ranks) {
      const auto& verts = slot_vertices[rank];
      for (std::size_t i = 0; i < verts.size(); ++i)
        image[i] = perm[static_cast<std::size_t>(verts[i])];
      std::sort(image.begin(), image.end());
      candidate.set(colex_rank(image));
    }
    if (candidate < best) best = candidate;
  } while (std::next_permutation(perm.begin(), perm.end()));

  Hypergraph out(n, r);
  best.for_each_set([&](std::uint64_t rank) { out.set_edge_rank(rank); });
  return out;
}

bool is_isomorphic(const Hypergraph& a, const Hypergraph& b) {
  if (a.vertex_count() != b.vertex_count() ||
      a.uniformity() != b.uniformity() || a.edge_count() != b.edge_count())
    return false;
  auto da = degree_sequence(a);
  auto db = degree_sequence(b);
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return canonical_form(a) == canonical_form(b);
}

std::vector<std::uint64_t> degree_sequence(const Hypergraph& g) {
  std::vector<std::uint64_t> deg(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<int> scratch(static_cast<std::size_t>(g.uniformity()));
  g.edge_bits().for_each_set([&](std::uint64_t rank) {
    colex_unrank(rank, g.uniformity(), scratch);
    for (int v : scratch) ++deg[static_cast<std::size_t>(v)];
  });
  return deg;
}

Hypergraph parse_hypergraph(std::istream& in) {
  int n = 0;
  int r = 0;
  if (!(in >> n >> r))
    throw std::invalid_argument("parse_hypergraph: missing 'n r' header");
  Hypergraph g(n, r);
  std::string line;
  std::getline(in, line);  // rest of header line
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::vector<int> verts;
    int v = 0;
    while (ls >> v) verts.push_back(v - 1);  // 1-based on disk
    if (!ls.eof())
      throw std::invalid_argument("parse_hypergraph: bad token on line " +
                                  std::to_string(lineno));
    if (verts.empty()) continue;  // blank line
    check_subset_shape(verts, n, r, "parse_hypergraph");
    const std::uint64_t rank = colex_rank(verts);
    if (g.has_edge_rank(rank))
      throw std::invalid_argument("parse_hypergraph: duplicate edge on line " +
                                  std::to_string(lineno));
    g.set_edge_rank(rank);
  }
  return g;
}

Hypergraph parse_hypergraph(const std::string& text) {
  std::istringstream in(text);
  return parse_hypergraph(in);
}

std::string format_hypergraph(const Hypergraph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.uniformity() << '\n';
  for (const auto& e : g.edge_list()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i) out << ' ';
      out << e[i] + 1;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace lkfree

// Scratch probe, part 2: d-values at n=6 via the free-graph list, and the
// triangle-and-induced-matching-free domain counts. Not part of the build.

#include <cstdio>

#include "oracles.hpp"

namespace {

// |D(A,anchor)| over an explicit list of free masks.
std::uint64_t d_size_list(const oracle::Universe& u,
                          const std::vector<std::uint64_t>& free_list,
                          const std::vector<int>& base,
                          std::uint64_t anchor) {
  std::uint64_t size = 0;
  for (std::uint64_t mask : free_list) {
    std::uint64_t delta = mask ^ anchor;
    bool agrees = true;
    for (std::size_t e = 0; e < u.edges.size() && agrees; ++e) {
      if (!((delta >> e) & 1)) continue;
      for (int v : base) {
        bool found = false;
        for (int w : u.edges[e])
          if (w == v) { found = true; break; }
        if (!found) { agrees = false; break; }
      }
    }
    if (agrees) ++size;
  }
  return size;
}

std::uint64_t d_value_list(int a, int n, int r, int k,
                           const std::set<int>& list) {
  oracle::Universe u(n, r, k);
  const auto free_list = oracle::free_masks(n, r, k, list);
  std::vector<int> base;
  for (int i = 0; i < a; ++i) base.push_back(i);
  std::uint64_t best = 0;
  for (std::uint64_t anchor : free_list) {
    const std::uint64_t size = d_size_list(u, free_list, base, anchor);
    if (size > best) best = size;
  }
  return best;
}

// Graphs on [m] as edge masks over lex pair order.
bool has_triangle(int m, std::uint32_t mask,
                  const std::vector<std::vector<int>>& pairs) {
  auto adj = [&](int a, int b) {
    for (std::size_t e = 0; e < pairs.size(); ++e)
      if ((pairs[e][0] == a && pairs[e][1] == b) ||
          (pairs[e][0] == b && pairs[e][1] == a))
        return ((mask >> e) & 1) != 0;
    return false;
  };
  for (int c = 2; c < m; ++c)
    for (int b = 1; b < c; ++b)
      for (int a = 0; a < b; ++a)
        if (adj(a, b) && adj(a, c) && adj(b, c)) return true;
  return false;
}

bool has_induced_2matching(int m, std::uint32_t mask,
                           const std::vector<std::vector<int>>& pairs) {
  auto adj = [&](int a, int b) {
    for (std::size_t e = 0; e < pairs.size(); ++e)
      if ((pairs[e][0] == a && pairs[e][1] == b) ||
          (pairs[e][0] == b && pairs[e][1] == a))
        return ((mask >> e) & 1) != 0;
    return false;
  };
  for (std::size_t e = 0; e < pairs.size(); ++e) {
    if (!((mask >> e) & 1)) continue;
    for (std::size_t f = e + 1; f < pairs.size(); ++f) {
      if (!((mask >> f) & 1)) continue;
      const int a = pairs[e][0], b = pairs[e][1];
      const int c = pairs[f][0], d = pairs[f][1];
      if (a == c || a == d || b == c || b == d) continue;
      if (!adj(a, c) && !adj(a, d) && !adj(b, c) && !adj(b, d)) return true;
    }
  }
  return false;
}

std::uint64_t admissible_link_count(int m) {
  const auto pairs = oracle::subsets_lex(m, 2);
  std::uint64_t count = 0;
  const std::uint32_t full = (std::uint32_t{1} << pairs.size()) - 1;
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    const std::uint32_t comp = full & ~mask;  // complement of A
    if (!has_triangle(m, comp, pairs) &&
        !has_induced_2matching(m, comp, pairs))
      ++count;
  }
  return count;
}

}  // namespace

int main() {
  const std::set<int> L14{1, 4};
  std::printf("d(2,6) = %llu\n",
              (unsigned long long)d_value_list(2, 6, 3, 4, L14));
  std::printf("d(1,6) = %llu\n",
              (unsigned long long)d_value_list(1, 6, 3, 4, L14));
  for (int m = 4; m <= 6; ++m)
    std::printf("|{A on [%d]: A^c triangle+matching free}| = %llu\n", m,
                (unsigned long long)admissible_link_count(m));
  return 0;
}

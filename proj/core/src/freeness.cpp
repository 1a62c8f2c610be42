#include "lkfree/freeness.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lkfree {

ForbiddenList::ForbiddenList(int k, int r, std::span<const int> values)
    : k_(k), r_(r) {
  if (r < 1) throw std::invalid_argument("ForbiddenList: r must be positive");
  if (k <= r) throw std::invalid_argument("ForbiddenList: need k > r");
  const std::uint64_t top =
      binom(static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(r));
  if (top >= (std::uint64_t{1} << 32))
    throw std::invalid_argument("ForbiddenList: C(k,r) too large");
  members_ = Bitset(top + 1);
  for (int v : values) {
    if (v < 0 || static_cast<std::uint64_t>(v) > top)
      throw std::invalid_argument(
          "ForbiddenList: member outside {0,...,C(k,r)}");
    members_.set(static_cast<std::uint64_t>(v));
  }
}

std::vector<int> ForbiddenList::values() const {
  std::vector<int> out;
  members_.for_each_set(
      [&](std::uint64_t i) { out.push_back(static_cast<int>(i)); });
  return out;
}

namespace {

FreenessReport scan_ksets(const Hypergraph& g, const ForbiddenList& list,
                          int required_vertex) {
  const int n = g.vertex_count();
  const int k = list.k();
  FreenessReport report;
  std::vector<int> s = first_subset(k);
  do {
    if (required_vertex >= 0 &&
        !std::binary_search(s.begin(), s.end(), required_vertex))
      continue;
    const std::uint64_t cnt = induced_edge_count(g, s);
    if (list.contains(cnt)) {
      report.free = false;
      report.witness = {s, cnt};
      return report;
    }
  } while (next_subset_colex(s, n));
  return report;
}

}  // namespace

FreenessReport is_lk_free(const Hypergraph& g, const ForbiddenList& list) {
  if (list.r() != g.uniformity())
    throw std::invalid_argument("is_lk_free: uniformity mismatch");
  if (list.k() > g.vertex_count())
    throw std::invalid_argument("is_lk_free: k exceeds vertex count");
  return scan_ksets(g, list, -1);
}

FreenessReport is_lk_free_containing(const Hypergraph& g,
                                     const ForbiddenList& list, int v) {
  if (list.r() != g.uniformity())
    throw std::invalid_argument("is_lk_free_containing: uniformity mismatch");
  if (list.k() > g.vertex_count())
    throw std::invalid_argument("is_lk_free_containing: k exceeds vertex count");
  if (v < 0 || v >= g.vertex_count())
    throw std::invalid_argument("is_lk_free_containing: vertex out of range");
  return scan_ksets(g, list, v);
}

ForbiddenList complement_list(const ForbiddenList& list) {
  const std::uint64_t top = list.max_count();
  std::vector<int> flipped;
  for (int v : list.values())
    flipped.push_back(static_cast<int>(top) - v);
  std::sort(flipped.begin(), flipped.end());
  return ForbiddenList(list.k(), list.r(), flipped);
}

bool is_3_good(const ForbiddenList& list) {
  const std::uint64_t top = list.max_count();
  for (std::uint64_t i = 0; i + 2 <= top; ++i) {
    if (!list.contains(i) && !list.contains(i + 1) && !list.contains(i + 2))
      return false;
  }
  return true;
}

ForbiddenList parse_list(const std::string& literal, int k, int r) {
  std::vector<int> values;
  std::string token;
  std::istringstream in(literal);
  while (std::getline(in, token, ',')) {
    if (token.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("parse_list: bad integer '" + token + "'");
    }
    if (used != token.size())
      throw std::invalid_argument("parse_list: bad integer '" + token + "'");
    values.push_back(v);
  }
  return ForbiddenList(k, r, values);
}

std::string format_list(const ForbiddenList& list) {
  std::ostringstream out;
  bool sep = false;
  for (int v : list.values()) {
    if (sep) out << ',';
    out << v;
    sep = true;
  }
  return out.str();
}

}  // namespace lkfree

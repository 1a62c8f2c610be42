#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lkfree/bitset.hpp"
#include "lkfree/hypergraph.hpp"

namespace lkfree {

// A list of forbidden induced edge counts on k-sets: membership bitset over
// {0, ..., C(k,r)}.
class ForbiddenList {
 public:
  ForbiddenList(int k, int r, std::span<const int> values);

  int k() const { return k_; }
  int r() const { return r_; }

  // C(k,r); members range over 0..max_count().
  std::uint64_t max_count() const { return members_.size() - 1; }

  bool contains(std::uint64_t induced_count) const {
    return induced_count < members_.size() && members_.test(induced_count);
  }

  std::vector<int> values() const;
  const Bitset& member_bits() const { return members_; }

  friend bool operator==(const ForbiddenList&, const ForbiddenList&) = default;

 private:
  int k_;
  int r_;
  Bitset members_;
};

// Result of a freeness check. The witness, present iff not free, is the
// colex-first k-set whose induced edge count lies in the list, paired with
// that count. Deterministic by construction, so failures reproduce.
struct FreenessReport {
  bool free = true;
  std::optional<std::pair<std::vector<int>, std::uint64_t>> witness;
};

// G is (L,k)-free iff no k-subset of its vertices induces a count in L.
// Scans k-subsets in colex order and short-circuits on the first violation.
FreenessReport is_lk_free(const Hypergraph& g, const ForbiddenList& list);

// Restricted variant for vertex-incremental searches: checks only the
// k-subsets containing vertex v.
FreenessReport is_lk_free_containing(const Hypergraph& g,
                                     const ForbiddenList& list, int v);

// {C(k,r) - i : i in L}; an involution.
ForbiddenList complement_list(const ForbiddenList& list);

// True iff every window {i, i+1, i+2} with 0 <= i <= C(k,r)-2 meets L,
// i.e. the complement of L has no 3 consecutive integers.
bool is_3_good(const ForbiddenList& list);

// CLI literal: comma-separated integers, e.g. "1,4"; empty string is the
// empty list.
ForbiddenList parse_list(const std::string& literal, int k, int r);
std::string format_list(const ForbiddenList& list);

}  // namespace lkfree

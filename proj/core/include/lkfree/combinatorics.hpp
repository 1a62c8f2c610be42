#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

namespace lkfree {

inline constexpr std::uint64_t kBinomOverflow =
    std::numeric_limits<std::uint64_t>::max();

// Binomial coefficient, saturating at kBinomOverflow when the exact value
// does not fit in 64 bits.
inline std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > kBinomOverflow) return kBinomOverflow;
  }
  return static_cast<std::uint64_t>(result);
}

// Colex rank of a strictly increasing subset of {0,1,...}: subsets are
// ordered by their largest differing element, so all r-subsets of {0..v-1}
// occupy ranks 0..C(v,r)-1.
inline std::uint64_t colex_rank(std::span<const int> sorted_subset) {
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < sorted_subset.size(); ++i) {
    rank += binom(static_cast<std::uint64_t>(sorted_subset[i]), i + 1);
  }
  return rank;
}

// Inverse of colex_rank; writes the r elements into `out` (ascending).
inline void colex_unrank(std::uint64_t rank, int r, std::span<int> out) {
  if (static_cast<int>(out.size()) != r)
    throw std::invalid_argument("colex_unrank: output span size != r");
  for (int i = r; i >= 1; --i) {
    // Largest m with binom(m, i) <= rank.
    std::uint64_t m = static_cast<std::uint64_t>(i) - 1;
    while (binom(m + 1, static_cast<std::uint64_t>(i)) <= rank) ++m;
    out[i - 1] = static_cast<int>(m);
    rank -= binom(m, static_cast<std::uint64_t>(i));
  }
}

// Advances `s` (an ascending r-subset of {0..n-1}) to its colex successor.
// Returns false when s was the last subset; s is then left unspecified.
inline bool next_subset_colex(std::span<int> s, int n) {
  const int r = static_cast<int>(s.size());
  for (int i = 0; i < r; ++i) {
    const int limit = (i + 1 < r) ? s[i + 1] : n;
    if (s[i] + 1 < limit) {
      ++s[i];
      for (int j = 0; j < i; ++j) s[j] = j;
      return true;
    }
  }
  return false;
}

// First r-subset in colex order: {0,...,r-1}.
inline std::vector<int> first_subset(int r) {
  std::vector<int> s(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) s[static_cast<std::size_t>(i)] = i;
  return s;
}

// All r-subsets of {0..n-1} in colex order.
inline std::vector<std::vector<int>> all_subsets_colex(int n, int r) {
  std::vector<std::vector<int>> out;
  if (r < 0 || r > n) return out;
  if (r == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<int> s = first_subset(r);
  do {
    out.push_back(s);
  } while (next_subset_colex(s, n));
  return out;
}

}  // namespace lkfree

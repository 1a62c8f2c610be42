#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "lkfree/freeness.hpp"
#include "lkfree/hypergraph.hpp"

namespace lkfree {

// The three pairwise constraints: forbid {(1,0),(0,1)}, {(0,0)} or {(1,1)}.
enum class ConstraintKind : std::uint8_t {
  forbid_mixed,
  forbid_both_zero,
  forbid_both_one,
};

// A total binary CSP on variables 0..m-1: every unordered pair carries
// exactly one constraint from the family above. Immutable use is thread-safe.
class Csp {
 public:
  explicit Csp(int m, ConstraintKind fill = ConstraintKind::forbid_both_one);

  int variable_count() const { return m_; }

  ConstraintKind constraint(int a, int b) const {
    return kinds_[pair_index(a, b)];
  }
  void set_constraint(int a, int b, ConstraintKind kind) {
    kinds_[pair_index(a, b)] = kind;
  }

 private:
  std::size_t pair_index(int a, int b) const;

  int m_;
  std::vector<ConstraintKind> kinds_;
};

// 0/1 value per variable.
using Assignment = std::vector<std::uint8_t>;

bool is_satisfying(const Csp& csp, const Assignment& g);

// Exact |A(G)| by branch-and-propagate: branch on the highest-index
// variable, force partners through the constraints to a fixpoint, verify the
// forced values pairwise, and recurse on the remaining free set. The free
// sets of the two branches are disjoint, which is what caps the count at
// m+1.
std::uint64_t count_satisfying(const Csp& csp);

// All satisfying assignments in lexicographic order; guarded to m <= 25.
std::vector<Assignment> enumerate_satisfying(const Csp& csp);

// Every pair forbids (1,1); attains |A(G)| = m+1 exactly.
Csp extremal_csp(int m);

// Text format: first line "m", then one line "a b KIND" per pair with
// 1-based a < b and KIND in {MIXED, ZERO, ONE}; all C(m,2) pairs required.
Csp parse_csp(std::istream& in);
Csp parse_csp(const std::string& text);
std::string format_csp(const Csp& csp);

// Reduction from link-extension counting to a CSP. The base edge slot is
// the (r-1)-set {0..r-2}; `coloring` fixes membership of the slots
// {0..r-2} u {s} for the k-r-1 vertices s in {r-1..k-3}. Variables of the
// returned CSP are the vertices k-2..n-1 in ascending order.
//
// For each variable pair the emitted constraint uses the smallest
// t in {0,1,2} with ||R||_c + t in L. strict_masks records, per pair, every
// forbidden value pattern implied by all admissible t (bit 2x+y set when
// (x,y) is forbidden); it is reported separately and never fed to the
// |A| <= m+1 checks.
struct ExtensionCspResult {
  Csp csp;
  std::vector<int> vertex_of_variable;
  std::vector<std::uint8_t> strict_masks;
};

ExtensionCspResult derive_extension_csp(const Hypergraph& h,
                                        const ForbiddenList& list,
                                        std::span<const std::uint8_t> coloring);

// Number of 0/1 assignments avoiding the per-pair forbidden-pattern masks
// (as produced in ExtensionCspResult::strict_masks); backtracking count.
std::uint64_t count_with_masks(int m, std::span<const std::uint8_t> masks);

}  // namespace lkfree

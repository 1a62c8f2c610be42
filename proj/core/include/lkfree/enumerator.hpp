#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lkfree/freeness.hpp"
#include "lkfree/hypergraph.hpp"

namespace lkfree {

using BigCount = boost::multiprecision::cpp_int;

// Budgets and parallelism for a census run. A budget of 0 means unlimited.
// The engine aborts with BudgetExceeded rather than returning a partial
// count.
struct CensusOptions {
  int threads = 1;
  std::uint64_t node_budget = 0;
  double time_budget_s = 0.0;
};

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t nodes_visited)
      : std::runtime_error(what), nodes(nodes_visited) {}
  std::uint64_t nodes;
};

struct CountReport {
  int n = 0;
  int r = 0;
  int k = 0;
  std::vector<int> list;
  BigCount labeled_count;
  std::optional<BigCount> iso_count;
  std::string method = "backtracking";
  double elapsed_s = 0.0;
  std::uint64_t nodes = 0;
};

// Exact number of (L,k)-free r-graphs on [n]. The backtracking engine
// requires C(n,r) <= 64: it decides all edges with maximum vertex v before
// moving to v+1, and after completing v rejects unless every k-subset of
// {0..v} containing v avoids L. For n < k the check is vacuous and the count
// is 2^C(n,r).
//
// With opts.threads > 1 the search splits at the first undecided vertex's
// edge-block assignments; partial counts are summed, so the total (and the
// node count) is independent of the thread count.
CountReport count_labeled(int n, const ForbiddenList& list,
                          const CensusOptions& opts = {});

// Exhaustive 2^C(n,r) scan over all edge subsets; cross-check path for
// count_labeled (method = "exhaustive"). Guarded to C(n,r) <= 25.
CountReport count_labeled_exhaustive(int n, const ForbiddenList& list,
                                     const CensusOptions& opts = {});

// Number of isomorphism classes among the (L,k)-free r-graphs on [n];
// canonical-form based, guarded to n <= 8. The report carries both counts.
CountReport count_iso_classes(int n, const ForbiddenList& list,
                              const CensusOptions& opts = {});

// Invokes `visit` once per free hypergraph and returns the visit count.
// Graphs are produced in the backtracking order: edge slots decided in
// increasing colex rank, edge-absent branch first. The Hypergraph passed to
// the visitor is a reused buffer; copy it to keep it. Visitor exceptions
// propagate. With threads > 1 the visitor must be safe for concurrent
// invocation; visit order is then unspecified.
std::uint64_t enumerate_free(int n, const ForbiddenList& list,
                             const std::function<void(const Hypergraph&)>& visit,
                             const CensusOptions& opts = {});

// D(A,H,n): the free graphs agreeing with H on every r-set not containing A.
// Members are edge-difference bitsets relative to the anchor, supported on
// the r-sets containing A; the anchor itself appears as the zero difference.
struct ExtensionSet {
  std::vector<int> base;
  Hypergraph anchor;
  std::vector<std::uint64_t> candidate_ranks;
  std::vector<Bitset> members;
};

// Requires |A| < r, an (L,k)-free anchor, and at most 30 candidate slots.
ExtensionSet extension_set(std::span<const int> base, const Hypergraph& anchor,
                           const ForbiddenList& list);

enum class DMode { exhaustive, sample };

struct DStat {
  int a = 0;
  int n = 0;
  int r = 0;
  int k = 0;
  std::vector<int> list;
  std::uint64_t value = 0;
  bool exact = true;
  std::uint64_t anchors = 0;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
  double elapsed_s = 0.0;
};

// d(a,n) = max |D(A,H,n)| over free anchors H, with A = {0..a-1} (the value
// does not depend on which a-set is used). Exhaustive mode enumerates every
// anchor; sample mode reservoir-samples `samples` anchors from the census
// under `seed` and reports a lower bound (exact = false).
DStat max_d(int a, int n, const ForbiddenList& list, DMode mode,
            const CensusOptions& opts = {}, std::uint64_t seed = 0,
            std::uint64_t samples = 0);

}  // namespace lkfree

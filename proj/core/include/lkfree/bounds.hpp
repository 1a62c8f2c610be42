#pragma once

#include <cstdint>
#include <string>

namespace lkfree {

// All logarithms are base 2. Bounds are evaluated in log2 space with long
// double (80-bit extended on x86-64) so that values at n = 10^4 and beyond
// stay representable; 2^value is never materialized.
enum class BoundFormula {
  theorem_main_upper,   // 2k n^{r-1} + n^{r-1} log n
  corollary_d_bound,    // k n^{i-1} + n^{i-1} log n
  linkgraph_bound,      // k + log n  (k for n <= k)
  qn_lower_log,         // (n^2/27 - n^2/log n) log(n / log n), 0 when vacuous
  steiner_lower_log,    // (n^{r-1} / (2 r^{r+1})) log n
  barnes_g_log,         // sum_{m=1}^{n-1} log(m!)
};

const char* bound_formula_name(BoundFormula f);

struct LogBound {
  BoundFormula formula;
  long double log2_value = 0.0L;
  bool vacuous = false;
  std::int64_t n = 0;
  int r = 0;
  int k = 0;
  int i = 0;
};

LogBound theorem_main_upper(std::int64_t n, int r, int k);
LogBound corollary_d_bound(int i, std::int64_t n, int r, int k);
LogBound linkgraph_bound(std::int64_t n, int k);

// The explicit pre-asymptotic lower exponent for |Q(n)|. Non-positive values
// are reported as vacuous with value 0 rather than clamped silently: the
// step count n^2/27 - n^2/log2(n) only turns positive once log2(n) > 27.
LogBound qn_lower_log(std::int64_t n);

LogBound steiner_lower_log(std::int64_t n, int r);
LogBound barnes_g_log(std::int64_t n);

}  // namespace lkfree

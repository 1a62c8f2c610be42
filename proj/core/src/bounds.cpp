#include "lkfree/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace lkfree {

namespace {

long double log2l_of(std::int64_t v) {
  return std::log2l(static_cast<long double>(v));
}

long double ipow(std::int64_t base, int exp) {
  long double out = 1.0L;
  for (int i = 0; i < exp; ++i) out *= static_cast<long double>(base);
  return out;
}

}  // namespace

const char* bound_formula_name(BoundFormula f) {
  switch (f) {
    case BoundFormula::theorem_main_upper:
      return "theorem_main_upper";
    case BoundFormula::corollary_d_bound:
      return "corollary_d_bound";
    case BoundFormula::linkgraph_bound:
      return "linkgraph_bound";
    case BoundFormula::qn_lower_log:
      return "qn_lower_log";
    case BoundFormula::steiner_lower_log:
      return "steiner_lower_log";
    case BoundFormula::barnes_g_log:
      return "barnes_g_log";
  }
  return "?";
}

LogBound theorem_main_upper(std::int64_t n, int r, int k) {
  if (!(n >= k && k > r && r >= 2))
    throw std::invalid_argument("theorem_main_upper: need n >= k > r >= 2");
  const long double p = ipow(n, r - 1);
  LogBound b{BoundFormula::theorem_main_upper};
  b.n = n;
  b.r = r;
  b.k = k;
  b.log2_value = 2.0L * k * p + p * log2l_of(n);
  return b;
}

LogBound corollary_d_bound(int i, std::int64_t n, int r, int k) {
  if (i < 1 || i > r - 1)
    throw std::invalid_argument("corollary_d_bound: need 1 <= i <= r-1");
  if (n < r || k <= r)
    throw std::invalid_argument("corollary_d_bound: need n >= r and k > r");
  const long double p = ipow(n, i - 1);
  LogBound b{BoundFormula::corollary_d_bound};
  b.n = n;
  b.r = r;
  b.k = k;
  b.i = i;
  b.log2_value = static_cast<long double>(k) * p + p * log2l_of(n);
  return b;
}

LogBound linkgraph_bound(std::int64_t n, int k) {
  if (n < 1 || k < 1)
    throw std::invalid_argument("linkgraph_bound: need positive n and k");
  LogBound b{BoundFormula::linkgraph_bound};
  b.n = n;
  b.k = k;
  // d(r-1,n) <= 2^k for n <= k, and <= 2^k n beyond.
  b.log2_value = n <= k ? static_cast<long double>(k)
                        : static_cast<long double>(k) + log2l_of(n);
  return b;
}

LogBound qn_lower_log(std::int64_t n) {
  if (n < 2) throw std::invalid_argument("qn_lower_log: requires n >= 2");
  LogBound b{BoundFormula::qn_lower_log};
  b.n = n;
  const long double logn = log2l_of(n);
  const long double n2 = static_cast<long double>(n) * n;
  const long double steps = n2 / 27.0L - n2 / logn;
  const long double per_step = std::log2l(static_cast<long double>(n) / logn);
  const long double value = steps * per_step;
  if (steps <= 0.0L || per_step <= 0.0L || value <= 0.0L) {
    b.vacuous = true;
    b.log2_value = 0.0L;
  } else {
    b.log2_value = value;
  }
  return b;
}

LogBound steiner_lower_log(std::int64_t n, int r) {
  if (r < 2 || n < r)
    throw std::invalid_argument("steiner_lower_log: need n >= r >= 2");
  LogBound b{BoundFormula::steiner_lower_log};
  b.n = n;
  b.r = r;
  const long double steps = ipow(n, r - 1) / (2.0L * ipow(r, r + 1));
  b.log2_value = steps * log2l_of(n);
  return b;
}

LogBound barnes_g_log(std::int64_t n) {
  if (n < 2) throw std::invalid_argument("barnes_g_log: requires n >= 2");
  LogBound b{BoundFormula::barnes_g_log};
  b.n = n;
  // sum_{m=1}^{n-1} log2(m!) via a running log2(m!) accumulator.
  long double log_fact = 0.0L;
  long double total = 0.0L;
  for (std::int64_t m = 1; m <= n - 1; ++m) {
    log_fact += log2l_of(m);
    total += log_fact;
  }
  b.log2_value = total;
  return b;
}

}  // namespace lkfree

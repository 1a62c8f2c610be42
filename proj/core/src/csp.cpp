#include "lkfree/csp.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace lkfree {

namespace {

constexpr int kUnset = -1;

// Value forced on the partner variable when one endpoint takes `value`;
// kUnset when the constraint leaves the partner free.
int forced_partner(ConstraintKind kind, int value) {
  switch (kind) {
    case ConstraintKind::forbid_mixed:
      return value;
    case ConstraintKind::forbid_both_zero:
      return value == 0 ? 1 : kUnset;
    case ConstraintKind::forbid_both_one:
      return value == 1 ? 0 : kUnset;
  }
  return kUnset;
}

bool pair_allowed(ConstraintKind kind, int a, int b) {
  switch (kind) {
    case ConstraintKind::forbid_mixed:
      return a == b;
    case ConstraintKind::forbid_both_zero:
      return a != 0 || b != 0;
    case ConstraintKind::forbid_both_one:
      return a != 1 || b != 1;
  }
  return true;
}

}  // namespace

Csp::Csp(int m, ConstraintKind fill) : m_(m) {
  if (m < 1) throw std::invalid_argument("Csp: m must be at least 1");
  kinds_.assign(static_cast<std::size_t>(m) * (m - 1) / 2, fill);
}

std::size_t Csp::pair_index(int a, int b) const {
  if (a == b || a < 0 || b < 0 || a >= m_ || b >= m_)
    throw std::invalid_argument("Csp: bad variable pair");
  if (a > b) std::swap(a, b);
  return static_cast<std::size_t>(b) * (b - 1) / 2 + static_cast<std::size_t>(a);
}

bool is_satisfying(const Csp& csp, const Assignment& g) {
  const int m = csp.variable_count();
  if (static_cast<int>(g.size()) != m)
    throw std::invalid_argument("is_satisfying: assignment length mismatch");
  for (int b = 1; b < m; ++b)
    for (int a = 0; a < b; ++a)
      if (!pair_allowed(csp.constraint(a, b), g[static_cast<std::size_t>(a)],
                        g[static_cast<std::size_t>(b)]))
        return false;
  return true;
}

namespace {

// Counts assignments of `vars` (ascending) satisfying all constraints among
// them. `value` is scratch over all original variables; entries for `vars`
// must be kUnset on entry and are restored before returning.
std::uint64_t count_rec(const Csp& csp, const std::vector<int>& vars,
                        std::vector<int>& value) {
  if (vars.empty()) return 1;
  const int branch_var = vars.back();
  std::uint64_t total = 0;
  std::vector<int> forced;
  for (int branch_value = 0; branch_value <= 1; ++branch_value) {
    forced.clear();
    value[static_cast<std::size_t>(branch_var)] = branch_value;
    forced.push_back(branch_var);
    // Propagate forced values to a fixpoint within `vars`.
    for (std::size_t qi = 0; qi < forced.size(); ++qi) {
      const int u = forced[qi];
      const int uv = value[static_cast<std::size_t>(u)];
      for (int w : vars) {
        if (w == u || value[static_cast<std::size_t>(w)] != kUnset) continue;
        const int f = forced_partner(csp.constraint(u, w), uv);
        if (f != kUnset) {
          value[static_cast<std::size_t>(w)] = f;
          forced.push_back(w);
        }
      }
    }
    // Verify every pair among the forced variables. Constraints between a
    // forced and a still-free variable impose nothing at the fixpoint.
    bool consistent = true;
    for (std::size_t i = 0; i < forced.size() && consistent; ++i)
      for (std::size_t j = i + 1; j < forced.size(); ++j)
        if (!pair_allowed(csp.constraint(forced[i], forced[j]),
                          value[static_cast<std::size_t>(forced[i])],
                          value[static_cast<std::size_t>(forced[j])])) {
          consistent = false;
          break;
        }
    if (consistent) {
      std::vector<int> free_vars;
      free_vars.reserve(vars.size());
      for (int w : vars)
        if (value[static_cast<std::size_t>(w)] == kUnset)
          free_vars.push_back(w);
      total += count_rec(csp, free_vars, value);
    }
    for (int w : forced) value[static_cast<std::size_t>(w)] = kUnset;
  }
  return total;
}

}  // namespace

std::uint64_t count_satisfying(const Csp& csp) {
  const int m = csp.variable_count();
  std::vector<int> vars(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) vars[static_cast<std::size_t>(i)] = i;
  std::vector<int> value(static_cast<std::size_t>(m), kUnset);
  return count_rec(csp, vars, value);
}

std::vector<Assignment> enumerate_satisfying(const Csp& csp) {
  const int m = csp.variable_count();
  if (m > 25)
    throw std::domain_error("enumerate_satisfying: guarded to m <= 25");
  std::vector<Assignment> out;
  Assignment g(static_cast<std::size_t>(m), 0);
  // Assign variables in index order, 0 before 1, pruning against the prefix;
  // emission order is therefore lexicographic.
  auto dfs = [&](auto&& self, int next) -> void {
    if (next == m) {
      out.push_back(g);
      return;
    }
    for (std::uint8_t v = 0; v <= 1; ++v) {
      g[static_cast<std::size_t>(next)] = v;
      bool ok = true;
      for (int a = 0; a < next; ++a)
        if (!pair_allowed(csp.constraint(a, next),
                          g[static_cast<std::size_t>(a)], v)) {
          ok = false;
          break;
        }
      if (ok) self(self, next + 1);
    }
  };
  dfs(dfs, 0);
  return out;
}

Csp extremal_csp(int m) { return Csp(m, ConstraintKind::forbid_both_one); }

namespace {

const char* kind_name(ConstraintKind kind) {
  switch (kind) {
    case ConstraintKind::forbid_mixed:
      return "MIXED";
    case ConstraintKind::forbid_both_zero:
      return "ZERO";
    case ConstraintKind::forbid_both_one:
      return "ONE";
  }
  return "?";
}

ConstraintKind kind_from_name(const std::string& name) {
  if (name == "MIXED") return ConstraintKind::forbid_mixed;
  if (name == "ZERO") return ConstraintKind::forbid_both_zero;
  if (name == "ONE") return ConstraintKind::forbid_both_one;
  throw std::invalid_argument("parse_csp: unknown constraint kind '" + name +
                              "'");
}

}  // namespace

Csp parse_csp(std::istream& in) {
  int m = 0;
  if (!(in >> m)) throw std::invalid_argument("parse_csp: missing 'm' header");
  Csp csp(m);
  std::vector<bool> seen(static_cast<std::size_t>(m) * (m - 1) / 2, false);
  int a = 0, b = 0;
  std::string kind;
  std::size_t read = 0;
  while (in >> a >> b >> kind) {
    if (a < 1 || b < 1 || a > m || b > m || a >= b)
      throw std::invalid_argument("parse_csp: bad pair " + std::to_string(a) +
                                  " " + std::to_string(b));
    const std::size_t idx = static_cast<std::size_t>(b - 1) * (b - 2) / 2 +
                            static_cast<std::size_t>(a - 1);
    if (seen[idx])
      throw std::invalid_argument("parse_csp: duplicate pair " +
                                  std::to_string(a) + " " + std::to_string(b));
    seen[idx] = true;
    ++read;
    csp.set_constraint(a - 1, b - 1, kind_from_name(kind));
  }
  if (read != seen.size())
    throw std::invalid_argument("parse_csp: expected all C(m,2) pairs, got " +
                                std::to_string(read));
  return csp;
}

Csp parse_csp(const std::string& text) {
  std::istringstream in(text);
  return parse_csp(in);
}

std::string format_csp(const Csp& csp) {
  std::ostringstream out;
  const int m = csp.variable_count();
  out << m << '\n';
  for (int b = 1; b < m; ++b)
    for (int a = 0; a < b; ++a)
      out << a + 1 << ' ' << b + 1 << ' ' << kind_name(csp.constraint(a, b))
          << '\n';
  return out.str();
}

ExtensionCspResult derive_extension_csp(
    const Hypergraph& h, const ForbiddenList& list,
    std::span<const std::uint8_t> coloring) {
  const int n = h.vertex_count();
  const int r = h.uniformity();
  const int k = list.k();
  if (list.r() != r)
    throw std::invalid_argument("derive_extension_csp: uniformity mismatch");
  if (n <= k)
    throw std::invalid_argument("derive_extension_csp: requires n > k");
  const int s_size = k - r - 1;  // |S| = |[k-2] \ [r-1]|
  if (static_cast<int>(coloring.size()) != s_size)
    throw std::invalid_argument(
        "derive_extension_csp: coloring must cover the k-r-1 vertices of S");
  for (auto c : coloring)
    if (c > 1)
      throw std::invalid_argument("derive_extension_csp: coloring is 0/1");

  const int m = n - (k - 2);  // variables: vertices k-2..n-1
  ExtensionCspResult result{Csp(m), {}, {}};
  result.vertex_of_variable.resize(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i)
    result.vertex_of_variable[static_cast<std::size_t>(i)] = k - 2 + i;
  result.strict_masks.assign(static_cast<std::size_t>(m) * (m - 1) / 2, 0);

  std::vector<int> kset(static_cast<std::size_t>(k));
  std::vector<int> edge(static_cast<std::size_t>(r));
  for (int vb = 1; vb < m; ++vb) {
    for (int va = 0; va < vb; ++va) {
      const int i = result.vertex_of_variable[static_cast<std::size_t>(va)];
      const int j = result.vertex_of_variable[static_cast<std::size_t>(vb)];
      // K = {0..k-3} u {i,j}; both i and j exceed k-3, so K stays sorted.
      for (int v = 0; v < k - 2; ++v) kset[static_cast<std::size_t>(v)] = v;
      kset[static_cast<std::size_t>(k - 2)] = i;
      kset[static_cast<std::size_t>(k - 1)] = j;

      // ||R_{i,j}||_c: edges among the r-subsets of K other than
      // {0..r-2} u {i} and {0..r-2} u {j}, reading the colored slots from c
      // and everything else from H.
      std::uint64_t norm = 0;
      std::vector<int> idx = first_subset(r);
      do {
        for (int t = 0; t < r; ++t)
          edge[static_cast<std::size_t>(t)] =
              kset[static_cast<std::size_t>(idx[static_cast<std::size_t>(t)])];
        bool base_prefix = true;
        for (int t = 0; t + 1 < r; ++t)
          if (edge[static_cast<std::size_t>(t)] != t) {
            base_prefix = false;
            break;
          }
        if (base_prefix) {
          const int last = edge[static_cast<std::size_t>(r - 1)];
          if (last == i || last == j) continue;  // the two excluded slots
          // last is in S u {i,j}; the {i,j} slots were skipped above.
          norm += coloring[static_cast<std::size_t>(last - (r - 1))];
          continue;
        }
        norm += h.has_edge(edge) ? 1 : 0;
      } while (next_subset_colex(idx, k));

      int chosen_t = -1;
      std::uint8_t strict = 0;
      for (int t = 0; t <= 2; ++t) {
        if (list.contains(norm + static_cast<std::uint64_t>(t))) {
          if (chosen_t < 0) chosen_t = t;
          if (t == 0) strict |= 0b0001;          // (0,0)
          if (t == 1) strict |= 0b0110;          // (0,1), (1,0)
          if (t == 2) strict |= 0b1000;          // (1,1)
        }
      }
      if (chosen_t < 0)
        throw std::invalid_argument(
            "derive_extension_csp: no t in {0,1,2} with ||R||+t in L; the "
            "list is not 3-good");
      const ConstraintKind kind = chosen_t == 0
                                      ? ConstraintKind::forbid_both_zero
                                      : (chosen_t == 1
                                             ? ConstraintKind::forbid_mixed
                                             : ConstraintKind::forbid_both_one);
      result.csp.set_constraint(va, vb, kind);
      result.strict_masks[static_cast<std::size_t>(vb) * (vb - 1) / 2 +
                          static_cast<std::size_t>(va)] = strict;
    }
  }
  return result;
}

std::uint64_t count_with_masks(int m, std::span<const std::uint8_t> masks) {
  if (m < 1) throw std::invalid_argument("count_with_masks: m must be >= 1");
  if (masks.size() != static_cast<std::size_t>(m) * (m - 1) / 2)
    throw std::invalid_argument("count_with_masks: mask count mismatch");
  std::vector<std::uint8_t> g(static_cast<std::size_t>(m), 0);
  std::uint64_t total = 0;
  auto dfs = [&](auto&& self, int next) -> void {
    if (next == m) {
      ++total;
      return;
    }
    for (std::uint8_t v = 0; v <= 1; ++v) {
      bool ok = true;
      for (int a = 0; a < next && ok; ++a) {
        const std::uint8_t mask =
            masks[static_cast<std::size_t>(next) * (next - 1) / 2 +
                  static_cast<std::size_t>(a)];
        const int bit = g[static_cast<std::size_t>(a)] * 2 + v;
        if ((mask >> bit) & 1) ok = false;
      }
      if (ok) {
        g[static_cast<std::size_t>(next)] = v;
        self(self, next + 1);
      }
    }
  };
  dfs(dfs, 0);
  return total;
}

}  // namespace lkfree

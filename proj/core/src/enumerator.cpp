#include "lkfree/enumerator.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

namespace lkfree {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Precomputed structures for the 64-bit search engine.
struct Tables {
  int n = 0;
  int r = 0;
  int k = 0;
  std::uint64_t slots = 0;
  std::vector<std::uint64_t> block_end;            // block_end[v] = C(v+1, r)
  std::vector<std::vector<std::uint64_t>> ksets;   // per max vertex v
  std::vector<std::uint8_t> in_list;               // size C(k,r)+1
};

Tables build_tables(int n, const ForbiddenList& list) {
  Tables t;
  t.n = n;
  t.r = list.r();
  t.k = list.k();
  if (t.r < 2) throw std::invalid_argument("census: requires r >= 2");
  if (n < t.r) throw std::invalid_argument("census: requires n >= r");
  t.slots = binom(static_cast<std::uint64_t>(n),
                  static_cast<std::uint64_t>(t.r));
  if (t.slots > 64)
    throw std::invalid_argument(
        "census: the backtracking engine requires C(n,r) <= 64");
  t.block_end.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    t.block_end[static_cast<std::size_t>(v)] =
        binom(static_cast<std::uint64_t>(v + 1),
              static_cast<std::uint64_t>(t.r));
  t.in_list.assign(list.max_count() + 1, 0);
  for (int m : list.values()) t.in_list[static_cast<std::size_t>(m)] = 1;

  t.ksets.resize(static_cast<std::size_t>(n));
  if (t.k <= n) {
    std::vector<int> kset(static_cast<std::size_t>(t.k));
    std::vector<int> edge(static_cast<std::size_t>(t.r));
    for (int v = t.k - 1; v < n; ++v) {
      // k-subsets of {0..v} with maximum element v.
      std::vector<int> rest = first_subset(t.k - 1);
      do {
        for (int i = 0; i < t.k - 1; ++i)
          kset[static_cast<std::size_t>(i)] = rest[static_cast<std::size_t>(i)];
        kset[static_cast<std::size_t>(t.k - 1)] = v;
        std::uint64_t mask = 0;
        std::vector<int> idx = first_subset(t.r);
        do {
          for (int i = 0; i < t.r; ++i)
            edge[static_cast<std::size_t>(i)] =
                kset[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
          mask |= std::uint64_t{1} << colex_rank(edge);
        } while (next_subset_colex(idx, t.k));
        t.ksets[static_cast<std::size_t>(v)].push_back(mask);
      } while (next_subset_colex(rest, v));
    }
  }
  return t;
}

// Depth-first walker over edge-block assignments. Counts decision nodes and
// enforces budgets; `leaf` (when set) receives each completed free graph.
struct Walker {
  const Tables* t = nullptr;
  std::uint64_t node_budget = 0;
  double time_budget_s = 0.0;
  Clock::time_point start;
  std::function<void(std::uint64_t)>* leaf = nullptr;
  std::atomic<bool>* abort_flag = nullptr;

  std::uint64_t nodes = 0;
  std::uint64_t count = 0;

  void tick() {
    ++nodes;
    if (node_budget && nodes > node_budget)
      throw BudgetExceeded("census: node budget exceeded", nodes);
    if ((nodes & 0xFFF) == 0) {
      if (time_budget_s > 0 && seconds_since(start) > time_budget_s)
        throw BudgetExceeded("census: time budget exceeded", nodes);
      if (abort_flag && abort_flag->load(std::memory_order_relaxed))
        throw BudgetExceeded("census: aborted by sibling worker", nodes);
    }
  }

  bool vertex_ok(std::uint64_t mask, int v) const {
    for (std::uint64_t kmask : t->ksets[static_cast<std::size_t>(v)]) {
      const int cnt = std::popcount(mask & kmask);
      if (t->in_list[static_cast<std::size_t>(cnt)]) return false;
    }
    return true;
  }

  void complete_vertex(std::uint64_t mask, int v) {
    if (!vertex_ok(mask, v)) return;
    if (v == t->n - 1) {
      ++count;
      if (leaf) (*leaf)(mask);
      return;
    }
    decide(mask, v + 1, t->block_end[static_cast<std::size_t>(v)]);
  }

  void decide(std::uint64_t mask, int v, std::uint64_t pos) {
    tick();
    if (pos == t->block_end[static_cast<std::size_t>(v)]) {
      complete_vertex(mask, v);
      return;
    }
    decide(mask, v, pos + 1);
    decide(mask | (std::uint64_t{1} << pos), v, pos + 1);
  }

  void run_from(std::uint64_t mask, int v) {
    decide(mask, v, v > 0 ? t->block_end[static_cast<std::size_t>(v - 1)] : 0);
  }
};

struct RunResult {
  std::uint64_t count = 0;
  std::uint64_t nodes = 0;
};

RunResult run_single(const Tables& t, const CensusOptions& opts,
                     std::function<void(std::uint64_t)>* leaf) {
  Walker w;
  w.t = &t;
  w.node_budget = opts.node_budget;
  w.time_budget_s = opts.time_budget_s;
  w.start = Clock::now();
  w.leaf = leaf;
  w.run_from(0, t.r - 1);
  return {w.count, w.nodes};
}

// Splits the search at the first vertices' block assignments until the
// fan-out covers the workers, then processes branches in parallel. Counts
// and node totals are sums over branches, independent of scheduling.
RunResult run_parallel(const Tables& t, const CensusOptions& opts,
                       std::function<void(std::uint64_t)>* leaf) {
  const auto start = Clock::now();
  std::uint64_t setup_nodes = 0;
  std::vector<std::uint64_t> prefixes{0};
  int done_v = t.r - 2;  // all blocks through done_v are decided (none yet)
  const std::size_t want =
      static_cast<std::size_t>(opts.threads) * 16;
  while (done_v < t.n - 2 && prefixes.size() < want) {
    const int v = done_v + 1;
    std::vector<std::uint64_t> expanded;
    std::function<void(std::uint64_t)> collect =
        [&](std::uint64_t mask) { expanded.push_back(mask); };
    // Reuse the walker with the target vertex acting as the last one.
    Tables shallow = t;
    shallow.n = v + 1;
    Walker w;
    w.t = &shallow;
    w.node_budget = opts.node_budget;
    w.time_budget_s = opts.time_budget_s;
    w.start = start;
    w.leaf = &collect;
    for (std::uint64_t p : prefixes) w.run_from(p, v);
    setup_nodes += w.nodes;
    prefixes = std::move(expanded);
    done_v = v;
    if (prefixes.empty()) return {0, setup_nodes};
  }
  if (done_v == t.n - 1) {
    // Fully expanded; the prefixes are the free graphs themselves.
    if (leaf)
      for (std::uint64_t p : prefixes) (*leaf)(p);
    return {prefixes.size(), setup_nodes};
  }

  std::atomic<std::size_t> next{0};
  std::atomic<bool> abort{false};
  std::atomic<std::uint64_t> shared_nodes{setup_nodes};
  std::vector<RunResult> results(prefixes.size());
  std::vector<std::exception_ptr> errors(
      static_cast<std::size_t>(opts.threads));
  const int resume_v = done_v + 1;

  auto worker = [&](int wi) {
    try {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= prefixes.size()) break;
        if (abort.load(std::memory_order_relaxed)) break;
        Walker w;
        w.t = &t;
        w.node_budget = 0;  // budget enforced via the shared counter
        w.time_budget_s = opts.time_budget_s;
        w.start = start;
        w.leaf = leaf;
        w.abort_flag = &abort;
        w.run_from(prefixes[i], resume_v);
        results[i] = {w.count, w.nodes};
        const std::uint64_t total =
            shared_nodes.fetch_add(w.nodes) + w.nodes;
        if (opts.node_budget && total > opts.node_budget) {
          abort.store(true);
          throw BudgetExceeded("census: node budget exceeded", total);
        }
      }
    } catch (...) {
      abort.store(true);
      errors[static_cast<std::size_t>(wi)] = std::current_exception();
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(opts.threads));
  for (int i = 0; i < opts.threads; ++i) pool.emplace_back(worker, i);
  for (auto& th : pool) th.join();
  for (auto& err : errors)
    if (err) std::rethrow_exception(err);

  RunResult total{0, setup_nodes};
  for (const auto& res : results) {
    total.count += res.count;
    total.nodes += res.nodes;
  }
  return total;
}

RunResult run_census(const Tables& t, const CensusOptions& opts,
                     std::function<void(std::uint64_t)>* leaf) {
  if (opts.threads > 1) return run_parallel(t, opts, leaf);
  return run_single(t, opts, leaf);
}

void validate_params(int n, const ForbiddenList& list) {
  if (list.r() < 2) throw std::invalid_argument("census: requires r >= 2");
  if (list.k() <= list.r())
    throw std::invalid_argument("census: requires k > r");
  if (n < list.r()) throw std::invalid_argument("census: requires n >= r");
}

Hypergraph hypergraph_from_mask(int n, int r, std::uint64_t mask) {
  Hypergraph g(n, r);
  while (mask) {
    const int b = std::countr_zero(mask);
    g.set_edge_rank(static_cast<std::uint64_t>(b));
    mask &= mask - 1;
  }
  return g;
}

}  // namespace

CountReport count_labeled(int n, const ForbiddenList& list,
                          const CensusOptions& opts) {
  validate_params(n, list);
  const auto t0 = Clock::now();
  const Tables t = build_tables(n, list);
  const RunResult res = run_census(t, opts, nullptr);
  CountReport report;
  report.n = n;
  report.r = list.r();
  report.k = list.k();
  report.list = list.values();
  report.labeled_count = res.count;
  report.method = "backtracking";
  report.nodes = res.nodes;
  report.elapsed_s = seconds_since(t0);
  return report;
}

CountReport count_labeled_exhaustive(int n, const ForbiddenList& list,
                                     const CensusOptions& opts) {
  validate_params(n, list);
  const auto t0 = Clock::now();
  const Tables t = build_tables(n, list);
  if (t.slots > 25)
    throw std::domain_error(
        "count_labeled_exhaustive: guarded to C(n,r) <= 25");
  std::uint64_t count = 0;
  std::uint64_t nodes = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << t.slots); ++mask) {
    ++nodes;
    if (opts.node_budget && nodes > opts.node_budget)
      throw BudgetExceeded("census: node budget exceeded", nodes);
    bool free = true;
    for (int v = t.k - 1; v < n && free; ++v)
      for (std::uint64_t kmask : t.ksets[static_cast<std::size_t>(v)]) {
        if (t.in_list[static_cast<std::size_t>(
                std::popcount(mask & kmask))]) {
          free = false;
          break;
        }
      }
    count += free ? 1 : 0;
  }
  CountReport report;
  report.n = n;
  report.r = list.r();
  report.k = list.k();
  report.list = list.values();
  report.labeled_count = count;
  report.method = "exhaustive";
  report.nodes = nodes;
  report.elapsed_s = seconds_since(t0);
  return report;
}

CountReport count_iso_classes(int n, const ForbiddenList& list,
                              const CensusOptions& opts) {
  validate_params(n, list);
  if (n > 8)
    throw std::domain_error("count_iso_classes: guarded to n <= 8");
  const auto t0 = Clock::now();
  const Tables t = build_tables(n, list);
  std::set<Bitset> forms;
  std::function<void(std::uint64_t)> leaf = [&](std::uint64_t mask) {
    const Hypergraph g = hypergraph_from_mask(n, t.r, mask);
    forms.insert(canonical_form(g).edge_bits());
  };
  CensusOptions single = opts;
  single.threads = 1;
  const RunResult res = run_census(t, single, &leaf);
  CountReport report;
  report.n = n;
  report.r = list.r();
  report.k = list.k();
  report.list = list.values();
  report.labeled_count = res.count;
  report.iso_count = BigCount(forms.size());
  report.method = "backtracking";
  report.nodes = res.nodes;
  report.elapsed_s = seconds_since(t0);
  return report;
}

std::uint64_t enumerate_free(
    int n, const ForbiddenList& list,
    const std::function<void(const Hypergraph&)>& visit,
    const CensusOptions& opts) {
  validate_params(n, list);
  const Tables t = build_tables(n, list);
  if (opts.threads > 1) {
    std::function<void(std::uint64_t)> leaf = [&](std::uint64_t mask) {
      const Hypergraph g = hypergraph_from_mask(n, t.r, mask);
      visit(g);
    };
    return run_census(t, opts, &leaf).count;
  }
  Hypergraph buffer(n, t.r);
  std::function<void(std::uint64_t)> leaf = [&](std::uint64_t mask) {
    for (std::uint64_t i = 0; i < t.slots; ++i)
      buffer.set_edge_rank(i, (mask >> i) & 1);
    visit(buffer);
  };
  return run_census(t, opts, &leaf).count;
}

namespace {

// Shared candidate/k-set geometry for D(A,H,n) computations on 64-bit masks.
struct DTables {
  std::vector<std::uint64_t> candidate_ranks;
  std::uint64_t candidate_mask = 0;  // global mask over all candidate slots
  // Per k-set containing A: global mask with candidates stripped, plus the
  // candidate-index mask of its candidate slots.
  std::vector<std::uint64_t> kset_stripped;
  std::vector<std::uint32_t> kset_inside;
  std::vector<std::uint8_t> in_list;
};

// Merges the sorted base A with a choice of extra vertices taken (by index)
// from the vertices outside A.
std::vector<int> merge_with_base(std::span<const int> base,
                                 std::span<const int> others,
                                 std::span<const int> chosen_idx) {
  std::vector<int> out(base.begin(), base.end());
  for (int ci : chosen_idx) out.push_back(others[static_cast<std::size_t>(ci)]);
  std::sort(out.begin(), out.end());
  return out;
}

DTables build_d_tables(std::span<const int> base, int n,
                       const ForbiddenList& list) {
  DTables d;
  const int r = list.r();
  const int k = list.k();
  const int a = static_cast<int>(base.size());
  std::vector<int> others;
  for (int v = 0; v < n; ++v)
    if (!std::binary_search(base.begin(), base.end(), v)) others.push_back(v);
  {
    // r-sets containing A: choose the remaining r-a vertices outside A.
    std::vector<int> rest = first_subset(r - a);
    do {
      d.candidate_ranks.push_back(
          colex_rank(merge_with_base(base, others, rest)));
    } while (next_subset_colex(rest, n - a));
  }
  if (d.candidate_ranks.size() > 30)
    throw std::domain_error(
        "extension set: more than 30 candidate slots for exhaustive scan");
  for (std::uint64_t rank : d.candidate_ranks)
    d.candidate_mask |= std::uint64_t{1} << rank;

  d.in_list.assign(list.max_count() + 1, 0);
  for (int m : list.values()) d.in_list[static_cast<std::size_t>(m)] = 1;

  if (k <= n) {
    // k-sets containing A: only these can change induced counts, since every
    // modified edge contains A.
    std::vector<int> edge(static_cast<std::size_t>(r));
    std::vector<int> rest = first_subset(k - a);
    do {
      const std::vector<int> kset = merge_with_base(base, others, rest);
      std::uint64_t kmask = 0;
      std::vector<int> idx = first_subset(r);
      do {
        for (int i = 0; i < r; ++i)
          edge[static_cast<std::size_t>(i)] =
              kset[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
        kmask |= std::uint64_t{1} << colex_rank(edge);
      } while (next_subset_colex(idx, k));
      d.kset_stripped.push_back(kmask & ~d.candidate_mask);
      std::uint32_t inside = 0;
      for (std::size_t ci = 0; ci < d.candidate_ranks.size(); ++ci)
        if ((kmask >> d.candidate_ranks[ci]) & 1)
          inside |= std::uint32_t{1} << ci;
      d.kset_inside.push_back(inside);
    } while (next_subset_colex(rest, n - a));
  }
  return d;
}

// |D(A, anchor, n)| for a 64-bit anchor mask; optionally reports the
// accepted candidate patterns.
std::uint64_t d_size_for_anchor(const DTables& d, std::uint64_t anchor_mask,
                                std::vector<std::uint32_t>* accepted) {
  const std::size_t c = d.candidate_ranks.size();
  std::vector<int> base(d.kset_stripped.size());
  for (std::size_t i = 0; i < d.kset_stripped.size(); ++i)
    base[i] = std::popcount(anchor_mask & d.kset_stripped[i]);
  std::uint64_t count = 0;
  const std::uint64_t patterns = std::uint64_t{1} << c;
  for (std::uint64_t pattern = 0; pattern < patterns; ++pattern) {
    bool ok = true;
    for (std::size_t i = 0; i < base.size(); ++i) {
      const int cnt = base[i] + std::popcount(
                                    static_cast<std::uint32_t>(pattern) &
                                    d.kset_inside[i]);
      if (d.in_list[static_cast<std::size_t>(cnt)]) {
        ok = false;
        break;
      }
    }
    if (ok) {
      ++count;
      if (accepted) accepted->push_back(static_cast<std::uint32_t>(pattern));
    }
  }
  return count;
}

std::uint64_t mask_of(const Hypergraph& g) {
  if (g.slot_count() > 64)
    throw std::invalid_argument("expected a graph with at most 64 edge slots");
  std::uint64_t mask = 0;
  g.edge_bits().for_each_set(
      [&](std::uint64_t rank) { mask |= std::uint64_t{1} << rank; });
  return mask;
}

}  // namespace

ExtensionSet extension_set(std::span<const int> base, const Hypergraph& anchor,
                           const ForbiddenList& list) {
  const int n = anchor.vertex_count();
  const int r = anchor.uniformity();
  if (list.r() != r)
    throw std::invalid_argument("extension_set: uniformity mismatch");
  const int a = static_cast<int>(base.size());
  if (a >= r)
    throw std::invalid_argument("extension_set: requires |A| < r");
  for (int i = 0; i < a; ++i) {
    if (base[static_cast<std::size_t>(i)] < 0 ||
        base[static_cast<std::size_t>(i)] >= n)
      throw std::invalid_argument("extension_set: base vertex out of range");
    if (i > 0 &&
        base[static_cast<std::size_t>(i)] <= base[static_cast<std::size_t>(i - 1)])
      throw std::invalid_argument(
          "extension_set: base must be strictly increasing");
  }
  if (list.k() <= n) {
    const FreenessReport anchor_report = is_lk_free(anchor, list);
    if (!anchor_report.free)
      throw std::invalid_argument("extension_set: anchor is not (L,k)-free");
  }
  const DTables d = build_d_tables(base, n, list);
  const std::uint64_t anchor_mask = mask_of(anchor);

  std::vector<std::uint32_t> accepted;
  d_size_for_anchor(d, anchor_mask, &accepted);

  ExtensionSet out{std::vector<int>(base.begin(), base.end()), anchor,
                   d.candidate_ranks, {}};
  const std::uint32_t anchor_bits = [&] {
    std::uint32_t bits = 0;
    for (std::size_t ci = 0; ci < d.candidate_ranks.size(); ++ci)
      if ((anchor_mask >> d.candidate_ranks[ci]) & 1)
        bits |= std::uint32_t{1} << ci;
    return bits;
  }();
  for (std::uint32_t pattern : accepted) {
    Bitset diff(anchor.slot_count());
    std::uint32_t delta = pattern ^ anchor_bits;
    while (delta) {
      const int ci = std::countr_zero(delta);
      diff.set(d.candidate_ranks[static_cast<std::size_t>(ci)]);
      delta &= delta - 1;
    }
    out.members.push_back(std::move(diff));
  }
  return out;
}

DStat max_d(int a, int n, const ForbiddenList& list, DMode mode,
            const CensusOptions& opts, std::uint64_t seed,
            std::uint64_t samples) {
  if (a < 1 || a >= list.r())
    throw std::invalid_argument("max_d: requires 1 <= a < r");
  if (n == list.r() - 1) {
    // No r-set fits on r-1 vertices, so D(A,H,n) = {H} and d(a, r-1) = 1.
    DStat stat;
    stat.a = a;
    stat.n = n;
    stat.r = list.r();
    stat.k = list.k();
    stat.list = list.values();
    stat.value = 1;
    stat.exact = true;
    stat.anchors = 1;
    return stat;
  }
  validate_params(n, list);
  const auto t0 = Clock::now();
  const Tables t = build_tables(n, list);
  const std::vector<int> base_prefix = first_subset(a);
  const DTables d = build_d_tables(base_prefix, n, list);

  DStat stat;
  stat.a = a;
  stat.n = n;
  stat.r = list.r();
  stat.k = list.k();
  stat.list = list.values();
  stat.seed = seed;
  stat.samples = samples;

  CensusOptions single = opts;
  single.threads = 1;

  if (mode == DMode::exhaustive) {
    std::uint64_t best = 0;
    std::function<void(std::uint64_t)> leaf = [&](std::uint64_t mask) {
      const std::uint64_t size = d_size_for_anchor(d, mask, nullptr);
      if (size > best) best = size;
    };
    const RunResult res = run_census(t, single, &leaf);
    stat.value = best;
    stat.exact = true;
    stat.anchors = res.count;
  } else {
    if (samples == 0)
      throw std::invalid_argument("max_d: sample mode needs samples > 0");
    // Reservoir-sample anchors from the census visit stream.
    std::mt19937_64 rng(seed);
    std::vector<std::uint64_t> reservoir;
    reservoir.reserve(samples);
    std::uint64_t seen = 0;
    std::function<void(std::uint64_t)> leaf = [&](std::uint64_t mask) {
      if (reservoir.size() < samples) {
        reservoir.push_back(mask);
      } else {
        std::uniform_int_distribution<std::uint64_t> dist(0, seen);
        const std::uint64_t j = dist(rng);
        if (j < samples) reservoir[static_cast<std::size_t>(j)] = mask;
      }
      ++seen;
    };
    const RunResult res = run_census(t, single, &leaf);
    std::uint64_t best = 0;
    for (std::uint64_t mask : reservoir)
      best = std::max(best, d_size_for_anchor(d, mask, nullptr));
    stat.value = best;
    stat.exact = false;
    stat.anchors = std::min<std::uint64_t>(res.count, samples);
  }
  stat.elapsed_s = seconds_since(t0);
  return stat;
}

}  // namespace lkfree

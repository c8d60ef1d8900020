#include "intorder/dimension.hpp"

#include <algorithm>
#include <atomic>
#include <variant>

#include "intorder/instances.hpp"
#include "intorder/interval.hpp"
#include "intorder/reversal.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace intorder {

namespace {

/// Reachability over P plus the reversal edges of one bucket. Adding the
/// pair (u over v) inserts the edge v -> u; the bucket stays reversible
/// exactly while this closure is acyclic, which the insert test guards.
struct BucketClosure {
  BitMatrix reach;  // strict: reach(a,b) means a reaches b via >= 1 edge

  explicit BucketClosure(const Poset& p) : reach(p.up_matrix()) {}

  bool can_add(int u, int v) const { return !reach.test(u, v); }

  void add(int u, int v) {
    // New paths all run a ->* v -> u ->* b.
    int n = reach.size();
    for (int a = 0; a < n; ++a) {
      if (a != v && !reach.test(a, v)) continue;
      reach.or_row_into(u, a);
      reach.set(a, u);
    }
  }
};

struct Slot {
  int u = 0;
  int v = 0;
  bool fixed_orientation = false;  // full-orientation rerun assigns as-is
};

struct SearchResult {
  bool found = false;
  std::vector<int> bucket_of;       // per slot
  std::vector<int> orientation_of;  // 0: (u,v), 1: (v,u); fixed slots use 0
  std::uint64_t nodes = 0;
};

class BucketSearch {
 public:
  BucketSearch(const Poset& p, std::vector<Slot> slots, int buckets)
      : p_(p), slots_(std::move(slots)), t_(buckets) {}

  SearchResult run(int jobs) {
    if (jobs > 1 && slots_.size() >= 2) return run_parallel(jobs);
    State st = initial_state();
    SearchResult r;
    r.bucket_of.assign(slots_.size(), -1);
    r.orientation_of.assign(slots_.size(), 0);
    r.found = dfs(st, 0, r);
    r.nodes = st.nodes;
    return r;
  }

 private:
  struct State {
    std::vector<BucketClosure> buckets;
    std::vector<int> sizes;
    int used = 0;
    std::uint64_t nodes = 0;
    std::vector<int> bucket_of;
    std::vector<int> orientation_of;
  };

  State initial_state() const {
    State st;
    st.buckets.assign(t_, BucketClosure(p_));
    st.sizes.assign(t_, 0);
    st.bucket_of.assign(slots_.size(), -1);
    st.orientation_of.assign(slots_.size(), 0);
    return st;
  }

  // Depth-first over slots; each tries (orientation, bucket) choices in a
  // fixed order, so the first assignment found is the same on every run.
  bool dfs(State& st, std::size_t i, SearchResult& out) const {
    if (i == slots_.size()) {
      out.bucket_of = st.bucket_of;
      out.orientation_of = st.orientation_of;
      return true;
    }
    ++st.nodes;
    const Slot& slot = slots_[i];
    int orientations = slot.fixed_orientation || i == 0 ? 1 : 2;
    for (int o = 0; o < orientations; ++o) {
      int u = o == 0 ? slot.u : slot.v;
      int v = o == 0 ? slot.v : slot.u;
      int limit = std::min(st.used, t_ - 1);
      for (int b = 0; b <= limit; ++b) {
        if (!st.buckets[b].can_add(u, v)) continue;
        BitMatrix saved = st.buckets[b].reach;
        st.buckets[b].add(u, v);
        ++st.sizes[b];
        if (st.sizes[b] == 1) ++st.used;
        st.bucket_of[i] = b;
        st.orientation_of[i] = o;
        if (dfs(st, i + 1, out)) return true;
        st.bucket_of[i] = -1;
        if (st.sizes[b] == 1) --st.used;
        --st.sizes[b];
        st.buckets[b].reach = std::move(saved);
      }
    }
    return false;
  }

  // Fan out the first-slot choice combinations up to a fixed depth, then
  // search subtrees independently. The leftmost successful prefix wins, so
  // the assignment matches the serial search; failing levels explore every
  // subtree either way, keeping node counts schedule-independent.
  SearchResult run_parallel(int jobs) {
    int depth = 1;
    std::vector<std::vector<std::pair<int, int>>> prefixes;  // (o, b) per slot
    while (true) {
      prefixes.clear();
      collect_prefixes(depth, prefixes);
      if (static_cast<int>(prefixes.size()) >= 4 * jobs ||
          depth >= static_cast<int>(slots_.size()))
        break;
      ++depth;
    }

    std::uint64_t prefix_nodes = count_prefix_nodes(depth);
    std::vector<SearchResult> results(prefixes.size());
    std::atomic<int> best{static_cast<int>(prefixes.size())};
    std::uint64_t total_nodes = 0;

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs) \
    reduction(+ : total_nodes)
#endif
    for (int k = 0; k < static_cast<int>(prefixes.size()); ++k) {
      if (k > best.load(std::memory_order_relaxed)) continue;
      State st = initial_state();
      bool ok = true;
      for (std::size_t i = 0; i < prefixes[k].size() && ok; ++i)
        ok = apply_choice(st, i, prefixes[k][i].first, prefixes[k][i].second);
      if (!ok) continue;  // cannot happen: prefixes were feasible
      SearchResult local;
      local.bucket_of = st.bucket_of;
      local.orientation_of = st.orientation_of;
      if (dfs(st, prefixes[k].size(), local)) {
        local.found = true;
        int expect = best.load();
        while (k < expect && !best.compare_exchange_weak(expect, k)) {
        }
      }
      total_nodes += st.nodes;
      results[k] = std::move(local);
    }

    int winner = best.load();
    SearchResult out;
    out.nodes = prefix_nodes + total_nodes;
    if (winner < static_cast<int>(prefixes.size())) {
      out = std::move(results[winner]);
      out.found = true;
      out.nodes = prefix_nodes + total_nodes;
    } else {
      out.bucket_of.assign(slots_.size(), -1);
      out.orientation_of.assign(slots_.size(), 0);
    }
    return out;
  }

  bool apply_choice(State& st, std::size_t i, int o, int b) const {
    const Slot& slot = slots_[i];
    int u = o == 0 ? slot.u : slot.v;
    int v = o == 0 ? slot.v : slot.u;
    if (b > std::min(st.used, t_ - 1) || !st.buckets[b].can_add(u, v))
      return false;
    st.buckets[b].add(u, v);
    ++st.sizes[b];
    if (st.sizes[b] == 1) ++st.used;
    st.bucket_of[i] = b;
    st.orientation_of[i] = o;
    return true;
  }

  void collect_prefixes(
      int depth, std::vector<std::vector<std::pair<int, int>>>& out) const {
    State st = initial_state();
    std::vector<std::pair<int, int>> current;
    walk_prefix(st, 0, depth, current, out);
  }

  void walk_prefix(State& st, std::size_t i, int depth,
                   std::vector<std::pair<int, int>>& current,
                   std::vector<std::vector<std::pair<int, int>>>& out) const {
    if (static_cast<int>(i) == depth || i == slots_.size()) {
      out.push_back(current);
      return;
    }
    const Slot& slot = slots_[i];
    int orientations = slot.fixed_orientation || i == 0 ? 1 : 2;
    for (int o = 0; o < orientations; ++o) {
      int u = o == 0 ? slot.u : slot.v;
      int v = o == 0 ? slot.v : slot.u;
      int limit = std::min(st.used, t_ - 1);
      for (int b = 0; b <= limit; ++b) {
        if (!st.buckets[b].can_add(u, v)) continue;
        BitMatrix saved = st.buckets[b].reach;
        st.buckets[b].add(u, v);
        ++st.sizes[b];
        if (st.sizes[b] == 1) ++st.used;
        current.emplace_back(o, b);
        walk_prefix(st, i + 1, depth, current, out);
        current.pop_back();
        if (st.sizes[b] == 1) --st.used;
        --st.sizes[b];
        st.buckets[b].reach = std::move(saved);
      }
    }
  }

  // Nodes the serial search would count while expanding the fanned-out
  // prefix levels themselves.
  std::uint64_t count_prefix_nodes(int depth) const {
    State st = initial_state();
    return prefix_nodes_walk(st, 0, depth);
  }

  std::uint64_t prefix_nodes_walk(State& st, std::size_t i, int depth) const {
    if (static_cast<int>(i) == depth || i == slots_.size()) return 0;
    std::uint64_t nodes = 1;
    const Slot& slot = slots_[i];
    int orientations = slot.fixed_orientation || i == 0 ? 1 : 2;
    for (int o = 0; o < orientations; ++o) {
      int u = o == 0 ? slot.u : slot.v;
      int v = o == 0 ? slot.v : slot.u;
      int limit = std::min(st.used, t_ - 1);
      for (int b = 0; b <= limit; ++b) {
        if (!st.buckets[b].can_add(u, v)) continue;
        BitMatrix saved = st.buckets[b].reach;
        st.buckets[b].add(u, v);
        ++st.sizes[b];
        if (st.sizes[b] == 1) ++st.used;
        nodes += prefix_nodes_walk(st, i + 1, depth);
        if (st.sizes[b] == 1) --st.used;
        --st.sizes[b];
        st.buckets[b].reach = std::move(saved);
      }
    }
    return nodes;
  }

  const Poset& p_;
  std::vector<Slot> slots_;
  int t_;
};

/// Unordered incomparable pairs ordered by how many other pairs they can
/// form a length-2 alternating cycle with, descending; dense conflicts first
/// makes refutations fail fast. Correctness does not depend on the order.
std::vector<Slot> conflict_ordered_slots(const Poset& p) {
  std::vector<Slot> slots;
  for (int u = 0; u < p.size(); ++u)
    for (int v = u + 1; v < p.size(); ++v)
      if (p.incomparable(u, v)) slots.push_back({u, v});

  auto two_cycle = [&](int x1, int y1, int x2, int y2) {
    return p.leq(x1, y2) && p.leq(x2, y1);
  };
  std::vector<int> degree(slots.size(), 0);
  for (std::size_t a = 0; a < slots.size(); ++a)
    for (std::size_t b = a + 1; b < slots.size(); ++b) {
      bool conflict = false;
      for (int oa = 0; oa < 2 && !conflict; ++oa)
        for (int ob = 0; ob < 2 && !conflict; ++ob) {
          int x1 = oa == 0 ? slots[a].u : slots[a].v;
          int y1 = oa == 0 ? slots[a].v : slots[a].u;
          int x2 = ob == 0 ? slots[b].u : slots[b].v;
          int y2 = ob == 0 ? slots[b].v : slots[b].u;
          conflict = two_cycle(x1, y1, x2, y2);
        }
      if (conflict) {
        ++degree[a];
        ++degree[b];
      }
    }
  std::vector<std::size_t> idx(slots.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return degree[a] > degree[b];
  });
  std::vector<Slot> ordered;
  ordered.reserve(slots.size());
  for (std::size_t i : idx) ordered.push_back(slots[i]);
  return ordered;
}

std::vector<std::vector<IncPair>> bucket_pair_sets(
    const std::vector<Slot>& slots, const SearchResult& r, int t) {
  std::vector<std::vector<IncPair>> sets(t);
  for (std::size_t i = 0; i < slots.size(); ++i) {
    int u = r.orientation_of[i] == 0 ? slots[i].u : slots[i].v;
    int v = r.orientation_of[i] == 0 ? slots[i].v : slots[i].u;
    sets[r.bucket_of[i]].push_back({u, v});
  }
  return sets;
}

Realizer extensions_from_sets(const Poset& p,
                              std::vector<std::vector<IncPair>> sets) {
  Realizer out;
  for (auto& s : sets) {
    ReversalResult r = linear_extension_reversing(p, s);
    auto* ext = std::get_if<LinearExtension>(&r);
    if (!ext)
      throw DomainError(Errc::self_check_failed,
                        "search produced an irreversible bucket");
    out.extensions.push_back(std::move(*ext));
  }
  return out;
}

/// Adds each still-uncovered mirror orientation to the first bucket that
/// tolerates it. Returns the completed realizer, or nothing if some mirror
/// fits nowhere (then the caller reruns with explicit orientations).
std::optional<Realizer> greedy_mirror_completion(
    const Poset& p, std::vector<std::vector<IncPair>> sets) {
  std::vector<BucketClosure> closures;
  for (const auto& s : sets) {
    BucketClosure c(p);
    for (const IncPair& pr : s) {
      if (!c.can_add(pr.first, pr.second)) return std::nullopt;
      c.add(pr.first, pr.second);
    }
    closures.push_back(std::move(c));
  }
  while (true) {
    Realizer candidate = extensions_from_sets(p, sets);
    RealizerCheck check = check_realizer(p, candidate);
    if (check.ok) return candidate;
    bool placed = false;
    for (std::size_t b = 0; b < sets.size() && !placed; ++b) {
      if (!closures[b].can_add(check.uncovered.first, check.uncovered.second))
        continue;
      closures[b].add(check.uncovered.first, check.uncovered.second);
      sets[b].push_back(check.uncovered);
      placed = true;
    }
    if (!placed) return std::nullopt;
  }
}

std::vector<Slot> full_orientation_slots(const std::vector<Slot>& slots) {
  std::vector<Slot> full;
  full.reserve(slots.size() * 2);
  for (const Slot& s : slots) {
    full.push_back({s.u, s.v, true});
    full.push_back({s.v, s.u, true});
  }
  return full;
}

}  // namespace

DimensionResult exact_dimension(const Poset& p, const DimensionOptions& opts) {
  if (p.size() > opts.max_elements)
    throw DomainError(Errc::size_bound,
                      "poset has " + std::to_string(p.size()) +
                          " elements, bound is " +
                          std::to_string(opts.max_elements));
  if (opts.limit && *opts.limit < 1)
    throw DomainError(Errc::limit_exceeded, "limit must be at least 1");

  DimensionResult result;
  std::vector<Slot> slots = conflict_ordered_slots(p);
  if (slots.empty()) {
    ReversalResult chain = linear_extension_reversing(p, {});
    result.dimension = 1;
    result.realizer.extensions.push_back(std::get<LinearExtension>(chain));
    if (opts.limit && result.dimension > *opts.limit)
      throw DomainError(Errc::limit_exceeded, "dimension exceeds limit");
    return result;
  }

  // A non-chain has dimension at least 2: one extension cannot reverse both
  // orientations of any incomparable pair.
  std::uint64_t last_fail_nodes = 0;
  for (int t = 2;; ++t) {
    if (opts.limit && t > *opts.limit)
      throw DomainError(Errc::limit_exceeded,
                        "dimension exceeds limit " +
                            std::to_string(*opts.limit));
    BucketSearch search(p, slots, t);
    SearchResult sym = search.run(opts.jobs);
    if (!sym.found) {
      last_fail_nodes = sym.nodes;
      continue;
    }
    auto realizer =
        greedy_mirror_completion(p, bucket_pair_sets(slots, sym, t));
    if (!realizer) {
      // Rare: the one-orientation cover cannot be completed. Decide the
      // level exactly with both orientations as explicit slots.
      BucketSearch full(p, full_orientation_slots(slots), t);
      SearchResult full_result = full.run(opts.jobs);
      if (!full_result.found) {
        last_fail_nodes = full_result.nodes;
        continue;
      }
      realizer = extensions_from_sets(
          p, bucket_pair_sets(full_orientation_slots(slots), full_result, t));
      if (!verify_realizer(p, *realizer))
        throw DomainError(Errc::self_check_failed,
                          "full-orientation realizer failed verification");
    }
    result.dimension = t;
    result.realizer = std::move(*realizer);
    result.certificate.no_realizer_of_size = t - 1;
    result.certificate.nodes_explored = last_fail_nodes;
    if (!verify_realizer(p, result.realizer))
      throw DomainError(Errc::self_check_failed,
                        "dimension realizer failed verification");
    return result;
  }
}

bool unit_dim3_by_pattern(const Poset& p) {
  if (!is_unit_interval_order(p))
    throw DomainError(Errc::not_unit_interval,
                      "poset is not a unit interval order");
  if (p.is_chain())
    throw DomainError(Errc::is_chain, "chains are outside this test's domain");
  for (const char* name : {"FX2", "H0", "G0"})
    if (contains_subposet(p, named(name).poset)) return true;
  return false;
}

}  // namespace intorder

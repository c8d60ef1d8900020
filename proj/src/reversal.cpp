#include "intorder/reversal.hpp"

#include <algorithm>
#include <queue>

#include "intorder/interval.hpp"

namespace intorder {

namespace {

std::vector<IncPair> checked_pairs(const Poset& p,
                                   const std::vector<IncPair>& s) {
  std::vector<IncPair> pairs = s;
  for (const IncPair& pr : pairs) {
    if (pr.first < 0 || pr.first >= p.size() || pr.second < 0 ||
        pr.second >= p.size())
      throw DomainError(Errc::unknown_element, "pair index out of range");
    if (!p.incomparable(pr.first, pr.second))
      throw DomainError(Errc::pair_not_incomparable,
                        "('" + p.name(pr.first) + "', '" + p.name(pr.second) +
                            "') is not an incomparable pair");
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return pairs;
}

/// Augmented digraph: x -> y when x < y in P, plus second -> first for every
/// requested pair (the pair's first element must end up above its second).
BitMatrix augmented_edges(const Poset& p, const std::vector<IncPair>& pairs) {
  int n = p.size();
  BitMatrix adj(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (p.less(x, y)) adj.set(x, y);
  for (const IncPair& pr : pairs) adj.set(pr.second, pr.first);
  return adj;
}

std::optional<LinearExtension> toposort_min_index(const BitMatrix& adj) {
  int n = adj.size();
  std::vector<int> indeg(n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (adj.test(x, y)) ++indeg[y];
  std::priority_queue<int, std::vector<int>, std::greater<int>> avail;
  for (int x = 0; x < n; ++x)
    if (indeg[x] == 0) avail.push(x);
  LinearExtension ext;
  ext.order.reserve(n);
  while (!avail.empty()) {
    int x = avail.top();
    avail.pop();
    ext.order.push_back(x);
    for (int y = 0; y < n; ++y)
      if (adj.test(x, y) && --indeg[y] == 0) avail.push(y);
  }
  if (static_cast<int>(ext.order.size()) != n) return std::nullopt;
  return ext;
}

/// A directed cycle in the leftover of a failed topological sort, as the
/// forward node sequence z0 -> z1 -> ... -> z_{m-1} -> z0.
std::vector<int> extract_digraph_cycle(const BitMatrix& adj,
                                       const std::vector<int>& emitted) {
  int n = adj.size();
  std::vector<char> remaining(n, 1);
  for (int x : emitted) remaining[x] = 0;
  int start = -1;
  for (int x = 0; x < n && start < 0; ++x)
    if (remaining[x]) start = x;
  // Every remaining node keeps a remaining predecessor; walk least
  // predecessors until a node repeats.
  std::vector<int> walk;
  std::vector<int> seen_at(n, -1);
  int v = start;
  while (seen_at[v] < 0) {
    seen_at[v] = static_cast<int>(walk.size());
    walk.push_back(v);
    int pred = -1;
    for (int u = 0; u < n; ++u)
      if (remaining[u] && adj.test(u, v)) {
        pred = u;
        break;
      }
    v = pred;
  }
  // walk[seen_at[v]..] follows predecessor edges; reverse it for the forward
  // cycle direction.
  std::vector<int> cycle(walk.begin() + seen_at[v], walk.end());
  std::reverse(cycle.begin(), cycle.end());
  return cycle;
}

/// Turns a digraph cycle into the alternating-pair form, then shortcuts
/// through stray comparabilities until the strictness conditions hold.
CycleWitness witnessify(const Poset& p, const std::vector<IncPair>& pairs,
                        const std::vector<int>& cycle) {
  auto in_s = [&](int head, int tail) {
    IncPair key{head, tail};
    return std::binary_search(pairs.begin(), pairs.end(), key);
  };

  int m = static_cast<int>(cycle.size());
  int first_s = -1;
  for (int i = 0; i < m && first_s < 0; ++i) {
    int tail = cycle[i];
    int head = cycle[(i + 1) % m];
    if (in_s(head, tail)) first_s = i;
  }

  // Collect the reversal edges in cycle order; the poset edges between them
  // witness x_i <= y_{i+1}.
  std::vector<IncPair> alt;
  for (int k = 0; k < m; ++k) {
    int i = (first_s + k) % m;
    int tail = cycle[i];
    int head = cycle[(i + 1) % m];
    if (in_s(head, tail)) alt.push_back({head, tail});
  }

  auto shortened = [&](int from, int to) {
    // Keep the cyclic segment pairs[from..to] inclusive.
    std::vector<IncPair> seg;
    int k = static_cast<int>(alt.size());
    for (int i = from;; i = (i + 1) % k) {
      seg.push_back(alt[i]);
      if (i == to) break;
    }
    return seg;
  };

  bool changed = true;
  while (changed) {
    changed = false;
    int k = static_cast<int>(alt.size());
    for (int i = 0; i < k && !changed; ++i) {
      for (int j = 0; j < k && !changed; ++j) {
        if (j == i || j == (i + 1) % k) continue;
        int xi = alt[i].first;
        int yj = alt[j].second;
        if (p.leq(xi, yj)) {
          // x_i already reaches y_j, so the pairs j..i close a shorter cycle.
          alt = shortened(j, i);
          changed = true;
        } else if (p.less(yj, xi)) {
          // Then x_{j-1} <= y_j < x_i <= y_{i+1} closes the segment
          // (i+1)..(j-1) directly.
          alt = shortened((i + 1) % k, (j - 1 + k) % k);
          changed = true;
        }
      }
    }
  }

  CycleWitness w{std::move(alt)};
  if (!is_strict_alternating_cycle(p, w))
    throw DomainError(Errc::self_check_failed,
                      "cycle witness failed strictness validation");
  return w;
}

}  // namespace

ReversalResult linear_extension_reversing(const Poset& p,
                                          const std::vector<IncPair>& s) {
  std::vector<IncPair> pairs = checked_pairs(p, s);
  BitMatrix adj = augmented_edges(p, pairs);
  if (auto ext = toposort_min_index(adj)) return *ext;

  // Re-run the sort to learn which nodes were emitted before the stall.
  int n = p.size();
  std::vector<int> indeg(n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (adj.test(x, y)) ++indeg[y];
  std::priority_queue<int, std::vector<int>, std::greater<int>> avail;
  for (int x = 0; x < n; ++x)
    if (indeg[x] == 0) avail.push(x);
  std::vector<int> emitted;
  while (!avail.empty()) {
    int x = avail.top();
    avail.pop();
    emitted.push_back(x);
    for (int y = 0; y < n; ++y)
      if (adj.test(x, y) && --indeg[y] == 0) avail.push(y);
  }
  std::vector<int> cycle = extract_digraph_cycle(adj, emitted);
  return witnessify(p, pairs, cycle);
}

std::optional<CycleWitness> find_strict_alternating_cycle(
    const Poset& p, const std::vector<IncPair>& s) {
  ReversalResult result = linear_extension_reversing(p, s);
  if (auto* witness = std::get_if<CycleWitness>(&result))
    return std::move(*witness);
  return std::nullopt;
}

bool is_strict_alternating_cycle(const Poset& p, const CycleWitness& w) {
  int k = static_cast<int>(w.pairs.size());
  if (k < 2) return false;
  for (const IncPair& pr : w.pairs) {
    if (pr.first < 0 || pr.first >= p.size() || pr.second < 0 ||
        pr.second >= p.size())
      return false;
    if (!p.incomparable(pr.first, pr.second)) return false;
  }
  for (int i = 0; i < k; ++i) {
    if (!p.leq(w.pairs[i].first, w.pairs[(i + 1) % k].second)) return false;
    for (int j = 0; j < k; ++j) {
      if (j == (i + 1) % k || j == i) continue;
      int xi = w.pairs[i].first;
      int yj = w.pairs[j].second;
      if (xi == yj || !p.incomparable(xi, yj)) return false;
    }
  }
  return true;
}

int strict_comparability_count(const Poset& p, const CycleWitness& w) {
  int k = static_cast<int>(w.pairs.size());
  int strict = 0;
  for (int i = 0; i < k; ++i)
    if (p.less(w.pairs[i].first, w.pairs[(i + 1) % k].second)) ++strict;
  return strict;
}

LinearExtension extension_separating(const Poset& q, const std::vector<int>& a,
                                     const std::vector<int>& b) {
  std::vector<char> in_a(q.size(), 0);
  for (int x : a) in_a.at(x) = 1;
  for (int x : b)
    if (in_a.at(x))
      throw DomainError(Errc::not_disjoint,
                        "'" + q.name(x) + "' appears in both sides");
  if (!is_interval_order(q)) throw_not_interval_order(q);

  std::vector<IncPair> s;
  for (int x : a)
    for (int y : b)
      if (q.incomparable(x, y)) s.push_back({x, y});
  ReversalResult result = linear_extension_reversing(q, s);
  if (auto* ext = std::get_if<LinearExtension>(&result)) return *ext;
  throw DomainError(Errc::internal_cycle,
                    "separating pair set cycled in an interval order");
}

}  // namespace intorder

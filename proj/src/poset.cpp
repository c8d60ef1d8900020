#include "intorder/poset.hpp"

#include <algorithm>
#include <map>

namespace intorder {

Poset Poset::from_relations(
    std::vector<ElementId> elements,
    const std::vector<std::pair<ElementId, ElementId>>& relations) {
  Poset p;
  p.elements_ = std::move(elements);
  int n = static_cast<int>(p.elements_.size());
  p.index_.reserve(p.elements_.size());
  for (int i = 0; i < n; ++i) p.index_.emplace_back(p.elements_[i], i);
  std::sort(p.index_.begin(), p.index_.end());
  for (std::size_t i = 1; i < p.index_.size(); ++i) {
    if (p.index_[i - 1].first == p.index_[i].first)
      throw DomainError(Errc::duplicate_element,
                        "element '" + p.index_[i].first + "' listed twice");
  }

  p.up_ = BitMatrix(n);
  for (const auto& [lo, hi] : relations)
    p.up_.set(p.index_of(lo), p.index_of(hi));

  // Warshall closure over packed rows.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (p.up_.test(i, k)) p.up_.or_row_into(k, i);

  for (int i = 0; i < n; ++i)
    if (p.up_.test(i, i))
      throw DomainError(Errc::cycle,
                        "relation has a cycle through '" + p.elements_[i] + "'");

  p.down_ = BitMatrix(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (p.up_.test(i, j)) p.down_.set(j, i);
  return p;
}

int Poset::index_of(const ElementId& id) const {
  auto it = std::lower_bound(
      index_.begin(), index_.end(), id,
      [](const auto& entry, const ElementId& key) { return entry.first < key; });
  if (it == index_.end() || it->first != id)
    throw DomainError(Errc::unknown_element, "no element named '" + id + "'");
  return it->second;
}

bool Poset::has_element(const ElementId& id) const {
  auto it = std::lower_bound(
      index_.begin(), index_.end(), id,
      [](const auto& entry, const ElementId& key) { return entry.first < key; });
  return it != index_.end() && it->first == id;
}

std::vector<int> Poset::down_set(int x) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (down_.test(x, i)) out.push_back(i);
  return out;
}

std::vector<int> Poset::up_set(int x) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (up_.test(x, i)) out.push_back(i);
  return out;
}

bool Poset::is_chain() const {
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (incomparable(i, j)) return false;
  return true;
}

std::vector<IncPair> Poset::incomparable_pairs() const {
  std::vector<IncPair> out;
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j)
      if (i != j && incomparable(i, j)) out.push_back({i, j});
  return out;
}

std::vector<std::pair<int, int>> Poset::cover_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < size(); ++x)
    for (int y = 0; y < size(); ++y) {
      if (!less(x, y)) continue;
      bool covered = true;
      for (int z = 0; z < size(); ++z)
        if (less(x, z) && less(z, y)) {
          covered = false;
          break;
        }
      if (covered) out.emplace_back(x, y);
    }
  return out;
}

Poset Poset::induced(const std::vector<int>& keep) const {
  Poset q;
  int m = static_cast<int>(keep.size());
  q.elements_.reserve(keep.size());
  for (int idx : keep) q.elements_.push_back(elements_[idx]);
  q.index_.reserve(keep.size());
  for (int i = 0; i < m; ++i) q.index_.emplace_back(q.elements_[i], i);
  std::sort(q.index_.begin(), q.index_.end());
  for (std::size_t i = 1; i < q.index_.size(); ++i)
    if (q.index_[i - 1].first == q.index_[i].first)
      throw DomainError(Errc::duplicate_element,
                        "induced subposet repeats '" + q.index_[i].first + "'");
  q.up_ = BitMatrix(m);
  q.down_ = BitMatrix(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (less(keep[i], keep[j])) {
        q.up_.set(i, j);
        q.down_.set(j, i);
      }
  return q;
}

bool Poset::same_order_as(const Poset& other) const {
  if (size() != other.size()) return false;
  for (const auto& id : elements_)
    if (!other.has_element(id)) return false;
  for (int i = 0; i < size(); ++i) {
    int oi = other.index_of(elements_[i]);
    for (int j = 0; j < size(); ++j) {
      int oj = other.index_of(elements_[j]);
      if (less(i, j) != other.less(oi, oj)) return false;
    }
  }
  return true;
}

bool is_linear_extension(const Poset& p, const LinearExtension& ext) {
  int n = p.size();
  if (static_cast<int>(ext.order.size()) != n)
    throw DomainError(Errc::not_a_permutation,
                      "order has " + std::to_string(ext.order.size()) +
                          " entries, poset has " + std::to_string(n));
  std::vector<int> rank(n, -1);
  for (int k = 0; k < n; ++k) {
    int e = ext.order[k];
    if (e < 0 || e >= n || rank[e] != -1)
      throw DomainError(Errc::not_a_permutation,
                        "order is not a permutation of the elements");
    rank[e] = k;
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (p.less(x, y) && rank[x] > rank[y]) return false;
  return true;
}

RealizerCheck check_realizer(const Poset& p, const Realizer& r) {
  int n = p.size();
  for (std::size_t e = 0; e < r.extensions.size(); ++e)
    if (!is_linear_extension(p, r.extensions[e]))
      throw DomainError(Errc::invalid_extension,
                        "extension " + std::to_string(e) +
                            " does not extend the poset");
  // above[e](x, y) == x strictly above y in extension e.
  std::vector<std::vector<int>> rank(r.extensions.size(), std::vector<int>(n));
  for (std::size_t e = 0; e < r.extensions.size(); ++e)
    for (int k = 0; k < n; ++k) rank[e][r.extensions[e].order[k]] = k;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v || !p.incomparable(u, v)) continue;
      bool reversed = false;
      for (std::size_t e = 0; e < r.extensions.size() && !reversed; ++e)
        reversed = rank[e][u] > rank[e][v];
      if (!reversed) return {false, {u, v}};
    }
  return {true, {}};
}

bool verify_realizer(const Poset& p, const Realizer& r) {
  return check_realizer(p, r).ok;
}

std::vector<HoldingsClass> holdings_classes(const Poset& p) {
  int n = p.size();
  std::vector<HoldingsClass> classes;
  std::vector<int> owner(n, -1);
  for (int i = 0; i < n; ++i) {
    if (owner[i] != -1) continue;
    HoldingsClass cls;
    cls.representative = i;
    cls.members.push_back(i);
    owner[i] = static_cast<int>(classes.size());
    for (int j = i + 1; j < n; ++j) {
      if (owner[j] != -1) continue;
      if (p.up_matrix().rows_equal(i, j) && p.down_matrix().rows_equal(i, j)) {
        owner[j] = owner[i];
        cls.members.push_back(j);
      }
    }
    classes.push_back(std::move(cls));
  }
  return classes;
}

Quotient quotient_duplicates(const Poset& p) {
  Quotient q;
  q.classes = holdings_classes(p);
  std::vector<int> reps;
  reps.reserve(q.classes.size());
  for (const auto& cls : q.classes) reps.push_back(cls.representative);
  q.poset = p.induced(reps);
  return q;
}

Realizer reinflate_realizer(const Realizer& quotient_realizer,
                            const std::vector<HoldingsClass>& classes,
                            int original_size) {
  int total = 0;
  for (const auto& cls : classes) total += static_cast<int>(cls.members.size());
  if (total != original_size)
    throw DomainError(Errc::unknown_element,
                      "classes cover " + std::to_string(total) +
                          " elements, expected " +
                          std::to_string(original_size));
  bool any_block = false;
  for (const auto& cls : classes) any_block |= cls.members.size() > 1;
  if (any_block && quotient_realizer.extensions.size() < 2)
    throw DomainError(Errc::need_two_extensions,
                      "duplicated holdings need at least two extensions");

  Realizer out;
  out.extensions.reserve(quotient_realizer.extensions.size());
  for (std::size_t e = 0; e < quotient_realizer.extensions.size(); ++e) {
    LinearExtension ext;
    ext.order.reserve(original_size);
    for (int q : quotient_realizer.extensions[e].order) {
      const auto& members = classes[q].members;
      if (e == 1) {
        for (auto it = members.rbegin(); it != members.rend(); ++it)
          ext.order.push_back(*it);
      } else {
        for (int m : members) ext.order.push_back(m);
      }
    }
    out.extensions.push_back(std::move(ext));
  }
  return out;
}

std::optional<Embedding> contains_subposet(const Poset& host,
                                           const Poset& pattern) {
  int k = pattern.size();
  int n = host.size();
  if (k > n) return std::nullopt;
  std::vector<int> map(k, -1);
  std::vector<char> used(n, 0);

  auto consistent = [&](int v, int h) {
    for (int u = 0; u < v; ++u) {
      if (pattern.less(u, v) != host.less(map[u], h)) return false;
      if (pattern.less(v, u) != host.less(h, map[u])) return false;
    }
    return true;
  };

  int v = 0;
  std::vector<int> next(k, 0);
  while (true) {
    if (v == k) {
      Embedding emb;
      emb.map = map;
      return emb;
    }
    bool advanced = false;
    for (int h = next[v]; h < n; ++h) {
      if (used[h] || !consistent(v, h)) continue;
      map[v] = h;
      used[h] = 1;
      next[v] = h + 1;
      ++v;
      if (v < k) next[v] = 0;
      advanced = true;
      break;
    }
    if (advanced) continue;
    if (v == 0) return std::nullopt;
    --v;
    used[map[v]] = 0;
    map[v] = -1;
  }
}

}  // namespace intorder

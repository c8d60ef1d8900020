#include "intorder/builders.hpp"

#include <algorithm>
#include <map>

#include "intorder/reversal.hpp"

namespace intorder {

namespace {

struct IntervalGroups {
  std::vector<HoldingsClass> classes;  // grouped by identical interval
  bool any_merge = false;
};

/// Groups elements whose intervals are identical (endpoints and flags).
/// Such elements have duplicated holdings; collapsing exactly these groups
/// is enough for the theorem constructions, which only need pairwise
/// distinct intervals.
IntervalGroups group_identical_intervals(const Representation& rep) {
  IntervalGroups g;
  int n = rep.size();
  std::vector<int> owner(n, -1);
  for (int i = 0; i < n; ++i) {
    if (owner[i] != -1) continue;
    HoldingsClass cls;
    cls.representative = i;
    cls.members.push_back(i);
    owner[i] = static_cast<int>(g.classes.size());
    for (int j = i + 1; j < n; ++j)
      if (owner[j] == -1 && rep.interval(j) == rep.interval(i)) {
        owner[j] = owner[i];
        cls.members.push_back(j);
        g.any_merge = true;
      }
    g.classes.push_back(std::move(cls));
  }
  return g;
}

Representation sub_representation(const Representation& rep,
                                  const std::vector<int>& keep) {
  Representation out;
  for (int i : keep) out.add(rep.name(i), rep.interval(i));
  return out;
}

LinearExtension chain_extension(const Poset& p) {
  ReversalResult r = linear_extension_reversing(p, {});
  return std::get<LinearExtension>(r);
}

LinearExtension expect_extension(const Poset& p, const std::vector<IncPair>& s,
                                 const char* stage) {
  ReversalResult r = linear_extension_reversing(p, s);
  if (auto* ext = std::get_if<LinearExtension>(&r)) return *ext;
  throw DomainError(Errc::self_check_failed,
                    std::string(stage) + " pair set cycled unexpectedly");
}

/// Block walk with each block in the reverse of its order in `base`.
void append_block_reversed(const std::vector<int>& block,
                           const LinearExtension& base,
                           std::vector<int>& out) {
  std::vector<int> rank(base.order.size());
  for (std::size_t k = 0; k < base.order.size(); ++k) rank[base.order[k]] = k;
  std::vector<int> sorted = block;
  std::sort(sorted.begin(), sorted.end(),
            [&](int a, int b) { return rank[a] > rank[b]; });
  out.insert(out.end(), sorted.begin(), sorted.end());
}

void require_consistent(const Poset& p, const Representation& rep) {
  if (!is_consistent(rep, p))
    throw DomainError(Errc::inconsistent,
                      "representation does not derive the given poset");
}

Realizer finish(const Poset& p, const Poset& quotient, Realizer r,
                const IntervalGroups& groups) {
  if (!verify_realizer(quotient, r))
    throw DomainError(Errc::self_check_failed,
                      "constructed extensions do not realize the quotient");
  if (groups.any_merge) {
    r = reinflate_realizer(r, groups.classes, p.size());
    if (!verify_realizer(p, r))
      throw DomainError(Errc::self_check_failed,
                        "reinflated extensions do not realize the poset");
  }
  return r;
}

Realizer build_unit_oc(const Poset& p, const Representation& rep) {
  if (p.size() == 0) return Realizer{{{}, {}, {}}};
  if (rep.interval(0).is_point()) {
    // Common length zero: distinct points form a chain.
    LinearExtension chain = chain_extension(p);
    return Realizer{{chain, chain, chain}};
  }

  Poset q = poset_from_representation(open_all(rep));
  AntichainPartition part = antichain_partition_minima(q);
  std::vector<int> evens;
  std::vector<int> odds;
  for (std::size_t b = 0; b < part.blocks.size(); ++b) {
    auto& side = (b % 2 == 1) ? evens : odds;  // 1-based parity
    side.insert(side.end(), part.blocks[b].begin(), part.blocks[b].end());
  }

  LinearExtension l1 = extension_separating(p, evens, odds);
  LinearExtension l2 = extension_separating(p, odds, evens);
  LinearExtension l3;
  l3.order.reserve(p.size());
  for (const auto& block : part.blocks)
    append_block_reversed(block, l1, l3.order);
  if (!is_linear_extension(p, l3))
    throw DomainError(Errc::self_check_failed,
                      "block walk is not a linear extension");
  return Realizer{{std::move(l1), std::move(l2), std::move(l3)}};
}

Realizer build_zero_one(const Poset& p, const Representation& rep) {
  if (p.size() == 0) return Realizer{{{}, {}, {}}};
  ZeroOneDecomposition dec = zero_one_decomposition(p, rep);
  if (dec.unit_blocks.blocks.empty()) {
    // Every interval is a point; distinct points form a chain.
    LinearExtension chain = chain_extension(p);
    return Realizer{{chain, chain, chain}};
  }

  LinearExtension l1 = expect_extension(p, dec.s1, "S1");
  LinearExtension l2 = expect_extension(p, dec.s2, "S2");
  LinearExtension l3;
  l3.order.reserve(p.size());
  std::size_t t = dec.unit_blocks.blocks.size();
  for (std::size_t i = 0; i <= t; ++i) {
    if (i > 0) append_block_reversed(dec.unit_blocks.blocks[i - 1], l1, l3.order);
    l3.order.insert(l3.order.end(), dec.zero_buckets[i].begin(),
                    dec.zero_buckets[i].end());
  }
  if (!is_linear_extension(p, l3))
    throw DomainError(Errc::self_check_failed,
                      "bucket walk is not a linear extension");
  return Realizer{{std::move(l1), std::move(l2), std::move(l3)}};
}

}  // namespace

AntichainPartition antichain_partition_minima(const Poset& p) {
  AntichainPartition part;
  std::vector<char> removed(p.size(), 0);
  int left = p.size();
  while (left > 0) {
    std::vector<int> block;
    for (int x = 0; x < p.size(); ++x) {
      if (removed[x]) continue;
      bool minimal = true;
      for (int y = 0; y < p.size() && minimal; ++y)
        minimal = removed[y] || !p.less(y, x);
      if (minimal) block.push_back(x);
    }
    for (int x : block) removed[x] = 1;
    left -= static_cast<int>(block.size());
    part.blocks.push_back(std::move(block));
  }
  return part;
}

ZeroOneDecomposition zero_one_decomposition(const Poset& p,
                                            const Representation& rep) {
  require_consistent(p, rep);
  ReprClass cls = classify(rep);
  if (!cls.lengths_01)
    throw DomainError(Errc::not_zero_one,
                      "representation is not all-closed with lengths in {0,1}");

  ZeroOneDecomposition dec;
  std::vector<int> units;
  std::vector<int> zeros;
  for (int x = 0; x < p.size(); ++x)
    (rep.interval(x).is_point() ? zeros : units).push_back(x);

  // Heights of the unit subposet, carried back to P's indices.
  AntichainPartition qpart = antichain_partition_minima(p.induced(units));
  for (const auto& block : qpart.blocks) {
    std::vector<int> mapped;
    mapped.reserve(block.size());
    for (int q : block) mapped.push_back(units[q]);
    dec.unit_blocks.blocks.push_back(std::move(mapped));
  }
  std::size_t t = dec.unit_blocks.blocks.size();

  for (const auto& block : dec.unit_blocks.blocks) {
    Rational p_i = rep.interval(block[0]).right;
    for (int x : block) p_i = std::min(p_i, rep.interval(x).right);
    dec.thresholds.push_back(p_i);
  }

  dec.zero_buckets.assign(t + 1, {});
  for (int z : zeros) {
    Rational c = rep.interval(z).left;
    std::size_t bucket = 0;
    while (bucket < t && c > dec.thresholds[bucket]) ++bucket;
    dec.zero_buckets[bucket].push_back(z);
  }
  for (auto& bucket : dec.zero_buckets)
    std::sort(bucket.begin(), bucket.end(), [&](int a, int b) {
      return rep.interval(a).left < rep.interval(b).left ||
             (rep.interval(a).left == rep.interval(b).left && a < b);
    });

  // Window membership, 1-based: block_of[x] = i for x in A_i, bucket_of[z]
  // the D index. Odd lower index feeds S_1, even feeds S_2.
  std::vector<int> block_of(p.size(), -1);
  std::vector<int> bucket_of(p.size(), -1);
  for (std::size_t i = 0; i < t; ++i)
    for (int x : dec.unit_blocks.blocks[i]) block_of[x] = static_cast<int>(i) + 1;
  for (std::size_t i = 0; i <= t; ++i)
    for (int z : dec.zero_buckets[i]) bucket_of[z] = static_cast<int>(i);

  for (const IncPair& pr : p.incomparable_pairs()) {
    int u = pr.first, v = pr.second;
    int window = -1;
    if (block_of[u] > 0 && block_of[v] == block_of[u] + 1)
      window = block_of[u];
    else if (bucket_of[u] >= 0 && block_of[v] == bucket_of[u] + 1)
      window = bucket_of[u];
    else if (block_of[u] > 0 && bucket_of[v] == block_of[u])
      window = block_of[u];
    if (window < 0) continue;
    (window % 2 == 1 ? dec.s1 : dec.s2).push_back(pr);
  }
  return dec;
}

Realizer realizer_unit_oc(const Poset& p, const Representation& rep) {
  require_consistent(p, rep);
  if (!classify(rep).unit_mixed)
    throw DomainError(Errc::not_unit_mixed,
                      "intervals do not share a common length");

  IntervalGroups groups = group_identical_intervals(rep);
  if (!groups.any_merge) return finish(p, p, build_unit_oc(p, rep), groups);

  std::vector<int> reps;
  for (const auto& cls : groups.classes) reps.push_back(cls.representative);
  Poset quotient = p.induced(reps);
  Representation quotient_rep = sub_representation(rep, reps);
  return finish(p, quotient, build_unit_oc(quotient, quotient_rep), groups);
}

Realizer realizer_zero_one(const Poset& p, const Representation& rep) {
  require_consistent(p, rep);
  ReprClass cls = classify(rep);
  if (!cls.all_closed)
    throw DomainError(Errc::not_zero_one, "all intervals must be closed");
  if (cls.length_set.size() > 2 ||
      (cls.length_set.size() == 2 && !(cls.length_set[0] == Rational(0))))
    throw DomainError(Errc::not_zero_one,
                      "lengths must lie in {0, r} for a single r");
  Rational unit =
      cls.length_set.empty() ? Rational(1) : cls.length_set.back();
  if (unit == Rational(0)) unit = 1;  // points only, nothing to scale

  Representation work =
      unit == Rational(1) ? rep : scale(rep, Rational(1) / unit);

  IntervalGroups groups = group_identical_intervals(work);
  if (!groups.any_merge) return finish(p, p, build_zero_one(p, work), groups);

  std::vector<int> reps;
  for (const auto& cls2 : groups.classes) reps.push_back(cls2.representative);
  Poset quotient = p.induced(reps);
  Representation quotient_rep = sub_representation(work, reps);
  return finish(p, quotient, build_zero_one(quotient, quotient_rep), groups);
}

Realizer realizer_multi_length(const Poset& p, const Representation& rep) {
  require_consistent(p, rep);
  ReprClass cls = classify(rep);
  if (!cls.all_closed)
    throw DomainError(Errc::not_closed,
                      "multi-length construction needs closed intervals");

  // Length classes C_1..C_r in ascending length order.
  std::vector<std::vector<int>> classes(cls.length_set.size());
  for (int x = 0; x < p.size(); ++x) {
    Rational len = rep.interval(x).length();
    std::size_t k = std::lower_bound(cls.length_set.begin(),
                                     cls.length_set.end(), len) -
                    cls.length_set.begin();
    classes[k].push_back(x);
  }

  Realizer out;
  for (const auto& cl : classes) {
    Poset sub = p.induced(cl);
    Realizer sub_realizer = realizer_unit_oc(sub, sub_representation(rep, cl));
    for (const LinearExtension& sub_ext : sub_realizer.extensions) {
      // Lift: reverse in P exactly the class-internal incomparable pairs the
      // class extension reverses. Any alternating cycle among them would
      // already live in the induced subposet, so this cannot fail.
      std::vector<int> rank(sub.size());
      for (std::size_t k = 0; k < sub_ext.order.size(); ++k)
        rank[sub_ext.order[k]] = k;
      std::vector<IncPair> s;
      for (std::size_t a = 0; a < cl.size(); ++a)
        for (std::size_t b = 0; b < cl.size(); ++b)
          if (a != b && p.incomparable(cl[a], cl[b]) && rank[a] > rank[b])
            s.push_back({cl[a], cl[b]});
      out.extensions.push_back(expect_extension(p, s, "class lift"));
    }
  }
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = 0; j < classes.size(); ++j)
      if (i != j)
        out.extensions.push_back(
            extension_separating(p, classes[i], classes[j]));

  if (!verify_realizer(p, out))
    throw DomainError(Errc::self_check_failed,
                      "multi-length extensions do not realize the poset");
  return out;
}

}  // namespace intorder

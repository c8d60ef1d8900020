#include "intorder/interval.hpp"

#include <algorithm>

namespace intorder {

MixedInterval MixedInterval::make(Rational left, Rational right,
                                  bool left_closed, bool right_closed) {
  if (left > right || (left == right && !(left_closed && right_closed)))
    throw DomainError(Errc::empty_interval,
                      "interval [" + left.str() + ", " + right.str() +
                          "] with these flags is empty");
  MixedInterval iv;
  iv.left = left;
  iv.right = right;
  iv.left_closed = left_closed;
  iv.right_closed = right_closed;
  return iv;
}

bool precedes(const MixedInterval& i, const MixedInterval& j) {
  if (i.right < j.left) return true;
  return i.right == j.left && !(i.right_closed && j.left_closed);
}

bool intersects(const MixedInterval& i, const MixedInterval& j) {
  return !precedes(i, j) && !precedes(j, i);
}

void Representation::add(const ElementId& id, const MixedInterval& interval) {
  auto it = std::lower_bound(
      index_.begin(), index_.end(), id,
      [](const auto& entry, const ElementId& key) { return entry.first < key; });
  if (it != index_.end() && it->first == id)
    throw DomainError(Errc::duplicate_element,
                      "interval for '" + id + "' given twice");
  index_.insert(it, {id, static_cast<int>(entries_.size())});
  entries_.emplace_back(id, interval);
}

const MixedInterval& Representation::interval(const ElementId& id) const {
  return entries_[index_of(id)].second;
}

int Representation::index_of(const ElementId& id) const {
  auto it = std::lower_bound(
      index_.begin(), index_.end(), id,
      [](const auto& entry, const ElementId& key) { return entry.first < key; });
  if (it == index_.end() || it->first != id)
    throw DomainError(Errc::unknown_element, "no interval for '" + id + "'");
  return it->second;
}

bool Representation::has_element(const ElementId& id) const {
  auto it = std::lower_bound(
      index_.begin(), index_.end(), id,
      [](const auto& entry, const ElementId& key) { return entry.first < key; });
  return it != index_.end() && it->first == id;
}

Poset poset_from_representation(const Representation& rep) {
  std::vector<ElementId> elements;
  elements.reserve(rep.size());
  for (int i = 0; i < rep.size(); ++i) elements.push_back(rep.name(i));
  std::vector<std::pair<ElementId, ElementId>> relations;
  for (int i = 0; i < rep.size(); ++i)
    for (int j = 0; j < rep.size(); ++j)
      if (i != j && precedes(rep.interval(i), rep.interval(j)))
        relations.emplace_back(rep.name(i), rep.name(j));
  return Poset::from_relations(std::move(elements), relations);
}

bool is_consistent(const Representation& rep, const Poset& p) {
  if (rep.size() != p.size())
    throw DomainError(Errc::ground_set_mismatch,
                      "representation has " + std::to_string(rep.size()) +
                          " elements, poset has " + std::to_string(p.size()));
  for (int i = 0; i < rep.size(); ++i)
    if (!p.has_element(rep.name(i)))
      throw DomainError(Errc::ground_set_mismatch,
                        "representation names '" + rep.name(i) +
                            "', absent from the poset");
  return poset_from_representation(rep).same_order_as(p);
}

ReprClass classify(const Representation& rep) {
  ReprClass cls;
  cls.all_closed = true;
  bool all_oc = true;  // every interval fully open or fully closed
  for (int i = 0; i < rep.size(); ++i) {
    const MixedInterval& iv = rep.interval(i);
    cls.all_closed &= iv.fully_closed();
    all_oc &= iv.fully_closed() || iv.fully_open();
    Rational len = iv.length();
    auto it = std::lower_bound(cls.length_set.begin(), cls.length_set.end(), len);
    if (it == cls.length_set.end() || !(*it == len))
      cls.length_set.insert(it, len);
  }
  cls.all_unit = cls.length_set.size() <= 1;
  cls.unit_mixed = cls.all_unit;
  cls.unit_oc = cls.all_unit && all_oc;
  cls.lengths_01 = cls.all_closed;
  for (const Rational& len : cls.length_set)
    cls.lengths_01 &= len == Rational(0) || len == Rational(1);
  return cls;
}

namespace {

Poset make_pattern(std::vector<ElementId> elements,
                   std::vector<std::pair<ElementId, ElementId>> relations) {
  return Poset::from_relations(std::move(elements), relations);
}

}  // namespace

const Poset& two_plus_two_pattern() {
  static const Poset pattern =
      make_pattern({"a1", "b1", "a2", "b2"}, {{"a1", "b1"}, {"a2", "b2"}});
  return pattern;
}

const Poset& one_plus_three_pattern() {
  static const Poset pattern =
      make_pattern({"x1", "x2", "x3", "y"}, {{"x1", "x2"}, {"x2", "x3"}});
  return pattern;
}

std::optional<Embedding> find_two_plus_two(const Poset& p) {
  return contains_subposet(p, two_plus_two_pattern());
}

std::optional<Embedding> find_one_plus_three(const Poset& p) {
  return contains_subposet(p, one_plus_three_pattern());
}

bool is_interval_order_by_downsets(const Poset& p) {
  for (int x = 0; x < p.size(); ++x)
    for (int y = x + 1; y < p.size(); ++y)
      if (!p.down_matrix().row_subset(x, y) &&
          !p.down_matrix().row_subset(y, x))
        return false;
  return true;
}

bool is_interval_order_by_pattern(const Poset& p) {
  return !find_two_plus_two(p).has_value();
}

bool is_interval_order(const Poset& p) {
  return is_interval_order_by_downsets(p);
}

bool is_unit_interval_order(const Poset& p) {
  return is_interval_order(p) && !find_one_plus_three(p).has_value();
}

void throw_not_interval_order(const Poset& p) {
  if (auto twotwo = find_two_plus_two(p)) {
    NotIntervalOrderError::Witness witness;
    const Poset& pattern = two_plus_two_pattern();
    for (int i = 0; i < pattern.size(); ++i)
      witness.emplace_back(pattern.name(i), p.name(twotwo->map[i]));
    throw NotIntervalOrderError(std::move(witness));
  }
  throw DomainError(Errc::self_check_failed,
                    "claimed 2+2 is absent from the poset");
}

Representation canonical_closed_representation(const Poset& p) {
  if (!is_interval_order(p)) throw_not_interval_order(p);

  int n = p.size();
  // Distinct down sets ordered by inclusion; in a 2+2-free order sizes are
  // strictly increasing along the chain, so size works as the sort key.
  auto rank_by = [n](const BitMatrix& rows) {
    std::vector<int> ranks(n, 0);
    std::vector<int> reps;  // one row index per distinct set
    for (int x = 0; x < n; ++x) {
      bool seen = false;
      for (int r : reps)
        if (rows.rows_equal(x, r)) {
          seen = true;
          break;
        }
      if (!seen) reps.push_back(x);
    }
    std::sort(reps.begin(), reps.end(), [&](int a, int b) {
      int ca = 0, cb = 0;
      for (int i = 0; i < n; ++i) {
        ca += rows.test(a, i);
        cb += rows.test(b, i);
      }
      return ca < cb;
    });
    for (int x = 0; x < n; ++x)
      for (std::size_t k = 0; k < reps.size(); ++k)
        if (rows.rows_equal(x, reps[k])) {
          ranks[x] = static_cast<int>(k) + 1;
          break;
        }
    return ranks;
  };

  // Left endpoint: rank of D(x) by inclusion. Right endpoint: rank of U(x)
  // by reverse inclusion, i.e. the largest up set gets rank 1.
  std::vector<int> left = rank_by(p.down_matrix());
  std::vector<int> right(n, 0);
  {
    std::vector<int> by_size = rank_by(p.up_matrix());
    int max_rank = 0;
    for (int x = 0; x < n; ++x) max_rank = std::max(max_rank, by_size[x]);
    for (int x = 0; x < n; ++x) right[x] = max_rank + 1 - by_size[x];
  }

  Representation rep;
  for (int x = 0; x < n; ++x)
    rep.add(p.name(x), MixedInterval::closed(left[x], right[x]));
  if (!is_consistent(rep, p))
    throw DomainError(Errc::self_check_failed,
                      "canonical representation does not derive the poset");
  return rep;
}

Representation open_all(const Representation& rep) {
  Representation out;
  for (int i = 0; i < rep.size(); ++i) {
    const MixedInterval& iv = rep.interval(i);
    if (iv.is_point())
      throw DomainError(Errc::degenerate_interval,
                        "opening the point interval of '" + rep.name(i) +
                            "' would empty it");
    out.add(rep.name(i), MixedInterval::open(iv.left, iv.right));
  }
  return out;
}

Representation scale(const Representation& rep, const Rational& factor) {
  if (!(factor > Rational(0)))
    throw std::domain_error("scale factor must be positive");
  Representation out;
  for (int i = 0; i < rep.size(); ++i) {
    const MixedInterval& iv = rep.interval(i);
    out.add(rep.name(i), MixedInterval::make(iv.left * factor,
                                             iv.right * factor, iv.left_closed,
                                             iv.right_closed));
  }
  return out;
}

}  // namespace intorder

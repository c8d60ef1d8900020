#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "intorder/poset.hpp"
#include "intorder/rational.hpp"

namespace intorder {

/// Bounded interval with independently open or closed ends. Never empty: a
/// degenerate interval (left == right) must be closed at both ends.
struct MixedInterval {
  Rational left;
  Rational right;
  bool left_closed = true;
  bool right_closed = true;

  static MixedInterval make(Rational left, Rational right, bool left_closed,
                            bool right_closed);
  static MixedInterval closed(Rational left, Rational right) {
    return make(left, right, true, true);
  }
  static MixedInterval open(Rational left, Rational right) {
    return make(left, right, false, false);
  }
  static MixedInterval point(Rational value) {
    return make(value, value, true, true);
  }

  Rational length() const { return right - left; }
  bool is_point() const { return left == right; }
  bool fully_closed() const { return left_closed && right_closed; }
  bool fully_open() const { return !left_closed && !right_closed; }

  friend bool operator==(const MixedInterval&, const MixedInterval&) = default;
};

/// I lies entirely to the left of J; a shared endpoint separates them unless
/// both touching ends are closed.
bool precedes(const MixedInterval& i, const MixedInterval& j);
bool intersects(const MixedInterval& i, const MixedInterval& j);

/// Total map from element names to intervals, insertion-ordered; the order
/// fixes element indices of any poset derived from it.
class Representation {
 public:
  void add(const ElementId& id, const MixedInterval& interval);

  int size() const { return static_cast<int>(entries_.size()); }
  bool empty() const { return entries_.empty(); }
  const ElementId& name(int i) const { return entries_[i].first; }
  const MixedInterval& interval(int i) const { return entries_[i].second; }
  const MixedInterval& interval(const ElementId& id) const;
  int index_of(const ElementId& id) const;
  bool has_element(const ElementId& id) const;

 private:
  std::vector<std::pair<ElementId, MixedInterval>> entries_;
  std::vector<std::pair<ElementId, int>> index_;  // sorted by name
};

/// x < y iff interval(x) precedes interval(y). Element order follows the
/// representation.
Poset poset_from_representation(const Representation& rep);

/// Same ground set required; true iff the representation derives exactly P.
bool is_consistent(const Representation& rep, const Poset& p);

struct ReprClass {
  bool all_closed = false;
  bool all_unit = false;   // all lengths equal
  bool unit_oc = false;    // all_unit and every interval fully open or closed
  bool unit_mixed = false; // all_unit, any end flags
  bool lengths_01 = false; // all closed, lengths within {0,1}
  std::vector<Rational> length_set;  // distinct lengths, ascending
};

ReprClass classify(const Representation& rep);

/// Integer-endpoint closed representation from down-set/up-set ranks; the
/// result is checked against P before being returned.
Representation canonical_closed_representation(const Poset& p);

/// All flags opened; rejects degenerate intervals, which opening would empty.
Representation open_all(const Representation& rep);

/// Endpoints multiplied by a positive factor, flags kept.
Representation scale(const Representation& rep, const Rational& factor);

/// Down-set inclusion-chain route.
bool is_interval_order_by_downsets(const Poset& p);
/// Induced 2+2 search route.
bool is_interval_order_by_pattern(const Poset& p);
bool is_interval_order(const Poset& p);
bool is_unit_interval_order(const Poset& p);

std::optional<Embedding> find_two_plus_two(const Poset& p);
std::optional<Embedding> find_one_plus_three(const Poset& p);

/// Throws NotIntervalOrderError carrying p's induced 2+2 as a named witness;
/// p must actually contain one.
[[noreturn]] void throw_not_interval_order(const Poset& p);

/// The forbidden patterns themselves: a1<b1, a2<b2 and x1<x2<x3 with y aside.
const Poset& two_plus_two_pattern();
const Poset& one_plus_three_pattern();

}  // namespace intorder

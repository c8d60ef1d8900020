#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "intorder/bitmatrix.hpp"
#include "intorder/errors.hpp"

namespace intorder {

using ElementId = std::string;

/// Ordered pair of element indices; in a reversal request (first, second)
/// means "first goes above second".
struct IncPair {
  int first = -1;
  int second = -1;
  friend bool operator==(const IncPair&, const IncPair&) = default;
  friend auto operator<=>(const IncPair&, const IncPair&) = default;
};

/// Total order on the elements, bottom first; order[k] is the element index
/// at rank k.
struct LinearExtension {
  std::vector<int> order;
  friend bool operator==(const LinearExtension&, const LinearExtension&) =
      default;
};

struct Realizer {
  std::vector<LinearExtension> extensions;
};

/// Elements with identical strict down sets and up sets; members are
/// ascending by index and include the representative (its minimum).
struct HoldingsClass {
  int representative = -1;
  std::vector<int> members;
};

/// Injective order-embedding; map[i] is the host index of pattern element i.
struct Embedding {
  std::vector<int> map;
};

/// Finite strict partial order over named elements. Immutable after
/// construction; elements keep the order in which they were supplied, and
/// every index-based query refers to that order.
class Poset {
 public:
  Poset() = default;

  /// Builds the reflexive-free transitive closure of `relations` over
  /// `elements`. Unknown names, duplicate names, and cycles (including
  /// self-loops) are rejected.
  static Poset from_relations(
      std::vector<ElementId> elements,
      const std::vector<std::pair<ElementId, ElementId>>& relations);

  int size() const { return static_cast<int>(elements_.size()); }
  const std::vector<ElementId>& elements() const { return elements_; }
  const ElementId& name(int i) const { return elements_[i]; }
  int index_of(const ElementId& id) const;
  bool has_element(const ElementId& id) const;

  bool less(int x, int y) const { return up_.test(x, y); }
  bool leq(int x, int y) const { return x == y || up_.test(x, y); }
  bool incomparable(int x, int y) const {
    return x != y && !up_.test(x, y) && !up_.test(y, x);
  }

  std::vector<int> down_set(int x) const;
  std::vector<int> up_set(int x) const;

  /// Row x holds the strict up set of x (bits y with x < y).
  const BitMatrix& up_matrix() const { return up_; }
  /// Row x holds the strict down set of x (bits y with y < x).
  const BitMatrix& down_matrix() const { return down_; }

  bool is_chain() const;

  /// All ordered incomparable pairs, listed with (u, v) and (v, u) both
  /// present, sorted lexicographically by index.
  std::vector<IncPair> incomparable_pairs() const;

  /// Covering pairs (x, y): x < y with nothing strictly between.
  std::vector<std::pair<int, int>> cover_pairs() const;

  /// Subposet induced by `keep` (indices, order preserved, no duplicates).
  Poset induced(const std::vector<int>& keep) const;

  /// Same ground set (as a set of names) and same relation under the name
  /// identification.
  bool same_order_as(const Poset& other) const;

 private:
  std::vector<ElementId> elements_;
  std::vector<std::pair<ElementId, int>> index_;  // sorted by name
  BitMatrix up_;
  BitMatrix down_;
};

/// Decides whether `order` lists every element exactly once in a way that
/// respects the poset; a non-permutation is an error, a mere order violation
/// is just `false`.
bool is_linear_extension(const Poset& p, const LinearExtension& order);

struct RealizerCheck {
  bool ok = false;
  /// First ordered incomparable pair (by index, lexicographic) that no
  /// extension reverses; meaningful only when !ok.
  IncPair uncovered;
};

/// A realizer must consist of linear extensions (else InvalidExtension) and
/// put every incomparable pair both ways round across its extensions.
RealizerCheck check_realizer(const Poset& p, const Realizer& r);
bool verify_realizer(const Poset& p, const Realizer& r);

/// Partition of the elements into duplicated-holdings classes (equal strict
/// down set and up set), ordered by representative index.
std::vector<HoldingsClass> holdings_classes(const Poset& p);

struct Quotient {
  Poset poset;                         // representatives, input order kept
  std::vector<HoldingsClass> classes;  // classes[i] belongs to quotient element i
};

/// Collapses each duplicated-holdings class to its representative.
Quotient quotient_duplicates(const Poset& p);

/// Expands a realizer of the quotient to one of the original poset: each
/// class is inserted as a block at its representative's position, ascending
/// by index in the first extension and descending in the second. Requires at
/// least two extensions when any class has two or more members, since the
/// class members are pairwise incomparable in the original order.
Realizer reinflate_realizer(const Realizer& quotient_realizer,
                            const std::vector<HoldingsClass>& classes,
                            int original_size);

/// First embedding of `pattern` as an induced subposet of `host`
/// (lexicographically least in host indices over pattern input order), or
/// nothing. An empty pattern embeds trivially.
std::optional<Embedding> contains_subposet(const Poset& host,
                                           const Poset& pattern);

}  // namespace intorder

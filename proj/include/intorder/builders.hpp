#pragma once

#include <vector>

#include "intorder/interval.hpp"
#include "intorder/poset.hpp"
#include "intorder/rational.hpp"

namespace intorder {

/// Height partition A_1,...,A_t: repeatedly remove the minimal elements.
/// Each block is an antichain and each element of A_{i+1} lies above some
/// element of A_i.
struct AntichainPartition {
  std::vector<std::vector<int>> blocks;
};

AntichainPartition antichain_partition_minima(const Poset& p);

/// Skeleton of the lengths-{0,1} construction. Block and bucket entries are
/// indices into the poset the decomposition was computed from; buckets run
/// D_0..D_t around the t unit blocks.
struct ZeroOneDecomposition {
  AntichainPartition unit_blocks;
  std::vector<Rational> thresholds;           // p_i = min right endpoint of A_i
  std::vector<std::vector<int>> zero_buckets; // ascending by point value
  std::vector<IncPair> s1;
  std::vector<IncPair> s2;
};

/// Requires an all-closed representation with lengths within {0,1} and no
/// two identical intervals. D_0 takes points c <= p_1, D_i the window
/// (p_i, p_{i+1}], D_t everything past p_t. S_1 collects the incomparable
/// pairs of the odd windows (A_{2i-1} over A_{2i}, D_{2i-1} over A_{2i},
/// A_{2i-1} over D_{2i-1}); S_2 the even analogues.
ZeroOneDecomposition zero_one_decomposition(const Poset& p,
                                            const Representation& rep);

/// Three linear extensions realizing P from any representation with all
/// interval lengths equal (half-open ends allowed). L_1 separates the
/// even-height blocks of the opened representation above the odd ones, L_2
/// the reverse, L_3 walks the blocks bottom-up with each block reversed
/// against L_1.
Realizer realizer_unit_oc(const Poset& p, const Representation& rep);

/// Three linear extensions realizing P from an all-closed representation
/// whose lengths lie in {0, r} for a single r > 0 (scaled internally to
/// {0, 1}). L_1 and L_2 reverse S_1 and S_2; L_3 is
/// D_0 < A_1 < D_1 < ... < A_t < D_t with blocks reversed against L_1 and
/// buckets ascending.
Realizer realizer_zero_one(const Poset& p, const Representation& rep);

/// Realizer for an all-closed representation with r distinct lengths: at
/// most 3 extensions per length class plus one separating extension per
/// ordered class pair, 3r + r(r-1) in total (8 when r = 2).
Realizer realizer_multi_length(const Poset& p, const Representation& rep);

}  // namespace intorder

#pragma once

#include <cstdint>
#include <optional>

#include "intorder/poset.hpp"

namespace intorder {

/// Lower-bound evidence: the deterministic refutation search at size
/// dimension-1 visited `nodes_explored` nodes before exhausting. Zero when
/// dimension is 1 or 2, where the refutation is immediate (a size-0 realizer
/// never exists, and a single extension cannot reverse both orientations of
/// an incomparable pair).
struct DimensionCertificate {
  int no_realizer_of_size = 0;
  std::uint64_t nodes_explored = 0;
};

struct DimensionResult {
  int dimension = 1;
  Realizer realizer;
  DimensionCertificate certificate;
};

struct DimensionOptions {
  std::optional<int> limit;  // throw once dimension is proven to exceed this
  int jobs = 1;              // parallel subtree fan-out; results identical
  int max_elements = 14;
};

/// Exact order dimension by iterative deepening: assign one orientation of
/// each unordered incomparable pair to one of t buckets so that every bucket
/// stays reversible (no alternating cycle), then complete the mirrors
/// greedily; if the greedy completion fails, rerun the level with both
/// orientations assigned explicitly. The value and certificate do not depend
/// on `jobs`.
DimensionResult exact_dimension(const Poset& p,
                                const DimensionOptions& opts = {});

/// Figure-pattern test for unit interval orders that are not chains: true
/// iff one of the three dimension-3 witnesses embeds. Agrees with
/// exact_dimension(P) == 3 on its whole domain.
bool unit_dim3_by_pattern(const Poset& p);

}  // namespace intorder

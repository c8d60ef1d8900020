#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "intorder/poset.hpp"

namespace intorder {

/// Strict alternating cycle ((x1,y1),...,(xk,yk)): x_i <= y_{i+1} cyclically
/// (equality allowed), x_i incomparable to y_j for j != i+1, k >= 2.
struct CycleWitness {
  std::vector<IncPair> pairs;
};

using ReversalResult = std::variant<LinearExtension, CycleWitness>;

/// Attempts a linear extension of P placing u above v for every (u,v) in S;
/// on failure returns a strict alternating cycle inside S. Topological sort
/// of P plus the edges v->u, lowest index first among available elements.
ReversalResult linear_extension_reversing(const Poset& p,
                                          const std::vector<IncPair>& s);

std::optional<CycleWitness> find_strict_alternating_cycle(
    const Poset& p, const std::vector<IncPair>& s);

/// Checks the CycleWitness invariants verbatim against P.
bool is_strict_alternating_cycle(const Poset& p, const CycleWitness& w);

/// Number of strict (non-reflexive) comparabilities x_i < y_{i+1} along the
/// cycle; witnesses in interval orders carry at most one.
int strict_comparability_count(const Poset& p, const CycleWitness& w);

/// Linear extension of the interval order q with every a in A above every
/// b in B whenever the two are incomparable. A and B must be disjoint; the
/// reversal can never cycle here, so a cycle reports a bug.
LinearExtension extension_separating(const Poset& q, const std::vector<int>& a,
                                     const std::vector<int>& b);

}  // namespace intorder

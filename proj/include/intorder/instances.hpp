#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "intorder/interval.hpp"
#include "intorder/poset.hpp"
#include "intorder/rational.hpp"

namespace intorder {

struct NamedInstance {
  std::string name;
  Poset poset;
  std::optional<Representation> representation;
};

/// Fixture names in a fixed order: two_plus_two, one_plus_three, FX2, H0,
/// G0, figure2.
const std::vector<std::string>& instance_names();
NamedInstance named(const std::string& name);

/// I[n]: all closed intervals with endpoints in {1..n}, n(n+1)/2 elements
/// named "[i,j]".
std::pair<Poset, Representation> canonical_interval_order(int n);

enum class FlagPolicy { all_closed, oc, mixed };
FlagPolicy flag_policy_from_string(const std::string& text);
const char* flag_policy_name(FlagPolicy policy);

/// Counter-based generator: draw i is a pure function of (seed, i), so any
/// shard of a sweep reproduces without shared state.
struct SplitRng {
  std::uint64_t seed = 0;

  std::uint64_t at(std::uint64_t i) const {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (i + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform-enough value in [0, m) for draw index i; m must be positive.
  std::uint64_t below(std::uint64_t i, std::uint64_t m) const {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(at(i)) * m) >> 64);
  }
};

struct RandomRepSpec {
  int n = 0;
  std::vector<Rational> lengths;  // drawn uniformly
  FlagPolicy policy = FlagPolicy::all_closed;
  int grid = 1;   // endpoints are multiples of 1/grid
  int span = -1;  // left endpoints lie in [0, span]; -1 means max(1, n)
  std::uint64_t seed = 0;
};

/// Elements e1..en with uniform left endpoints on the grid and lengths from
/// the given set. A zero length anywhere requires the all_closed policy.
Representation random_representation(const RandomRepSpec& spec);

}  // namespace intorder

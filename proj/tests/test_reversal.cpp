#include <doctest.h>

#include <algorithm>
#include <variant>
#include <vector>

#include "intorder/errors.hpp"
#include "intorder/instances.hpp"
#include "intorder/interval.hpp"
#include "intorder/reversal.hpp"
#include "oracles.hpp"

using namespace intorder;

namespace {

bool reverses_all(const Poset& p, const LinearExtension& ext,
                  const std::vector<IncPair>& pairs) {
  return is_linear_extension(p, ext) &&
         oracles::extension_reverses(p, ext, pairs);
}

Poset random_interval_order(int n, std::uint64_t seed) {
  RandomRepSpec spec;
  spec.n = n;
  spec.lengths = {Rational(0), Rational(1), Rational(2)};
  spec.grid = 2;
  spec.seed = seed;
  return poset_from_representation(random_representation(spec));
}

}  // namespace

TEST_CASE("reversing a single pair in an antichain") {
  Poset anti = Poset::from_relations({"x", "y"}, {});
  ReversalResult res = linear_extension_reversing(anti, {{0, 1}});
  REQUIRE(std::holds_alternative<LinearExtension>(res));
  CHECK(std::get<LinearExtension>(res).order == std::vector<int>{1, 0});
}

TEST_CASE("both orientations of one pair give the reflexive 2-cycle") {
  Poset anti = Poset::from_relations({"x", "y"}, {});
  ReversalResult res = linear_extension_reversing(anti, {{0, 1}, {1, 0}});
  REQUIRE(std::holds_alternative<CycleWitness>(res));
  const CycleWitness& w = std::get<CycleWitness>(res);
  REQUIRE(w.pairs.size() == 2);
  CHECK(is_strict_alternating_cycle(anti, w));
  CHECK(strict_comparability_count(anti, w) == 0);
}

TEST_CASE("the forced 2-cycle with one strict comparability") {
  // x2 < y1, x1 incomparable to both: reversing (x1,y1) and (x2,x1) is
  // impossible, and the only witness is {(x1,y1),(x2,x1)}.
  Poset p = Poset::from_relations({"x1", "y1", "x2"}, {{"x2", "y1"}});
  std::vector<IncPair> s = {{p.index_of("x1"), p.index_of("y1")},
                            {p.index_of("x2"), p.index_of("x1")}};
  ReversalResult res = linear_extension_reversing(p, s);
  REQUIRE(std::holds_alternative<CycleWitness>(res));
  const CycleWitness& w = std::get<CycleWitness>(res);
  REQUIRE(w.pairs.size() == 2);
  CHECK(is_strict_alternating_cycle(p, w));
  CHECK(strict_comparability_count(p, w) == 1);
  CHECK(std::find(w.pairs.begin(), w.pairs.end(), s[0]) != w.pairs.end());
  CHECK(std::find(w.pairs.begin(), w.pairs.end(), s[1]) != w.pairs.end());
}

TEST_CASE("comparable or reflexive pairs are rejected") {
  Poset chain = Poset::from_relations({"a", "b"}, {{"a", "b"}});
  try {
    (void)linear_extension_reversing(chain, {{0, 1}});
    FAIL("comparable pair accepted");
  } catch (const DomainError& e) {
    CHECK(e.code() == Errc::pair_not_incomparable);
  }
  Poset anti = Poset::from_relations({"x", "y"}, {});
  try {
    (void)linear_extension_reversing(anti, {{0, 0}});
    FAIL("reflexive pair accepted");
  } catch (const DomainError& e) {
    CHECK(e.code() == Errc::pair_not_incomparable);
  }
  try {
    (void)linear_extension_reversing(anti, {{0, 7}});
    FAIL("out-of-range pair accepted");
  } catch (const DomainError& e) {
    CHECK(e.code() == Errc::unknown_element);
  }
}

TEST_CASE("find_strict_alternating_cycle basics") {
  Poset anti = Poset::from_relations({"x", "y"}, {});
  CHECK_FALSE(find_strict_alternating_cycle(anti, {}).has_value());
  std::optional<CycleWitness> w =
      find_strict_alternating_cycle(anti, anti.incomparable_pairs());
  REQUIRE(w.has_value());
  CHECK(w->pairs.size() == 2);
}

TEST_CASE("witness validator rejects malformed cycles") {
  Poset anti = Poset::from_relations({"x", "y", "z"}, {});
  // k = 1 is not a cycle.
  CHECK_FALSE(is_strict_alternating_cycle(anti, CycleWitness{{{0, 1}}}));
  // x_1 must relate to y_2: here 0 vs 2 fails the cyclic comparability.
  CHECK_FALSE(
      is_strict_alternating_cycle(anti, CycleWitness{{{0, 1}, {2, 0}}}));
  // Valid reflexive 2-cycle.
  CHECK(is_strict_alternating_cycle(anti, CycleWitness{{{0, 1}, {1, 0}}}));
  // Strictness: x_1 and y_1 comparable breaks the pair itself.
  Poset chain = Poset::from_relations({"a", "b"}, {{"a", "b"}});
  CHECK_FALSE(
      is_strict_alternating_cycle(chain, CycleWitness{{{0, 1}, {1, 0}}}));
}

TEST_CASE("success/failure matches brute force exhaustively at n <= 4") {
  for (int n = 2; n <= 4; ++n) {
    for (const Poset& p : oracles::all_posets(n)) {
      std::vector<IncPair> inc = p.incomparable_pairs();
      if (inc.empty()) continue;
      int m = static_cast<int>(inc.size());
      for (unsigned mask = 1; mask < (1u << m); ++mask) {
        std::vector<IncPair> s;
        for (int b = 0; b < m; ++b)
          if (mask & (1u << b)) s.push_back(inc[b]);
        ReversalResult res = linear_extension_reversing(p, s);
        bool brute = oracles::brute_reversible(p, s);
        if (std::holds_alternative<LinearExtension>(res)) {
          CHECK(brute);
          CHECK(reverses_all(p, std::get<LinearExtension>(res), s));
        } else {
          CHECK_FALSE(brute);
          const CycleWitness& w = std::get<CycleWitness>(res);
          CHECK(is_strict_alternating_cycle(p, w));
          // The witness lies inside S.
          for (const IncPair& pr : w.pairs)
            CHECK(std::find(s.begin(), s.end(), pr) != s.end());
        }
      }
    }
  }
}

TEST_CASE("success/failure matches the digraph oracle on random instances") {
  for (std::uint64_t seed = 0; seed < 1500; ++seed) {
    Poset p = oracles::random_poset(6, seed, 40);
    std::vector<IncPair> s = oracles::random_pair_subset(p, seed ^ 0xabcd, 60);
    if (s.size() > 6) s.resize(6);
    ReversalResult res = linear_extension_reversing(p, s);
    CHECK(std::holds_alternative<LinearExtension>(res) ==
          oracles::digraph_reversible(p, s));
    if (std::holds_alternative<LinearExtension>(res))
      CHECK(reverses_all(p, std::get<LinearExtension>(res), s));
    else
      CHECK(is_strict_alternating_cycle(p, std::get<CycleWitness>(res)));
  }
}

TEST_CASE("witnesses in interval orders carry at most one strict comparability") {
  int witnessed = 0;
  for (std::uint64_t seed = 0; seed < 2000; ++seed) {
    Poset p = random_interval_order(7, seed);
    std::vector<IncPair> s = oracles::random_pair_subset(p, seed ^ 0x77, 70);
    std::optional<CycleWitness> w = find_strict_alternating_cycle(p, s);
    if (!w) continue;
    ++witnessed;
    CHECK(is_strict_alternating_cycle(p, *w));
    CHECK(strict_comparability_count(p, *w) <= 1);
  }
  CHECK(witnessed > 50);  // the sweep actually exercises the witness path
}

TEST_CASE("extension_separating worked examples") {
  Poset anti = Poset::from_relations({"a", "b"}, {});
  CHECK(extension_separating(anti, {0}, {1}).order == std::vector<int>{1, 0});

  Poset opt = Poset::from_relations({"a", "b", "c", "d"},
                                    {{"a", "b"}, {"b", "c"}});
  int d = opt.index_of("d");
  CHECK(extension_separating(opt, {d}, {0, 1, 2}).order ==
        std::vector<int>{0, 1, 2, d});
  CHECK(extension_separating(opt, {0, 1, 2}, {d}).order ==
        std::vector<int>{d, 0, 1, 2});

  // A and B need not cover the ground set.
  Poset anti3 = Poset::from_relations({"a", "b", "c"}, {});
  LinearExtension part = extension_separating(anti3, {0}, {2});
  CHECK(is_linear_extension(anti3, part));

  try {
    (void)extension_separating(anti, {0}, {0, 1});
    FAIL("overlapping sides accepted");
  } catch (const DomainError& e) {
    CHECK(e.code() == Errc::not_disjoint);
  }
  Poset tpt = Poset::from_relations({"a1", "b1", "a2", "b2"},
                                    {{"a1", "b1"}, {"a2", "b2"}});
  CHECK_THROWS_AS((void)extension_separating(tpt, {0}, {2}),
                  NotIntervalOrderError);
}

TEST_CASE("extension_separating never cycles on interval orders") {
  for (std::uint64_t seed = 0; seed < 2000; ++seed) {
    Poset p = random_interval_order(8, seed * 31 + 7);
    SplitRng rng{seed};
    std::vector<int> a, b;
    for (int x = 0; x < p.size(); ++x) {
      switch (rng.below(x, 3)) {
        case 0: a.push_back(x); break;
        case 1: b.push_back(x); break;
        default: break;
      }
    }
    LinearExtension ext = extension_separating(p, a, b);
    CHECK(is_linear_extension(p, ext));
    std::vector<int> rank(p.size());
    for (int k = 0; k < p.size(); ++k) rank[ext.order[k]] = k;
    for (int x : a)
      for (int y : b)
        if (p.incomparable(x, y)) CHECK(rank[x] > rank[y]);
  }
}

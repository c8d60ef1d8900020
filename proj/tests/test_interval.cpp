#include <doctest.h>

#include <algorithm>
#include <vector>

#include "intorder/errors.hpp"
#include "intorder/instances.hpp"
#include "intorder/interval.hpp"
#include "oracles.hpp"

using namespace intorder;

namespace {

Representation figure2_rep() { return *named("figure2").representation; }

Representation rep_of(
    std::initializer_list<std::pair<const char*, MixedInterval>> entries) {
  Representation rep;
  for (const auto& [id, interval] : entries) rep.add(id, interval);
  return rep;
}

}  // namespace

TEST_CASE("mixed interval invariants") {
  CHECK_THROWS_AS((void)MixedInterval::make(1, 0, true, true), DomainError);
  // A degenerate interval must be closed on both ends or it is empty.
  CHECK_THROWS_AS((void)MixedInterval::make(1, 1, false, true), DomainError);
  CHECK_THROWS_AS((void)MixedInterval::make(1, 1, true, false), DomainError);
  MixedInterval pt = MixedInterval::point(2);
  CHECK(pt.is_point());
  CHECK(pt.fully_closed());
  CHECK(pt.length() == Rational(0));
  CHECK(MixedInterval::open(0, 1).fully_open());
  CHECK(MixedInterval::make(Rational(1, 2), Rational(3, 2), true, false)
            .length() == Rational(1));
}

TEST_CASE("precedes handles shared endpoints by closure flags") {
  CHECK_FALSE(precedes(MixedInterval::closed(0, 1), MixedInterval::closed(1, 2)));
  CHECK(precedes(MixedInterval::open(0, 1), MixedInterval::closed(1, 2)));
  CHECK(precedes(MixedInterval::make(2, 3, true, false),
                 MixedInterval::closed(3, 4)));
  CHECK(precedes(MixedInterval::closed(0, 1), MixedInterval::open(1, 2)));
  CHECK_FALSE(precedes(MixedInterval::closed(1, 2), MixedInterval::closed(0, 1)));
}

TEST_CASE("precedes/intersects trichotomy across all flag combinations") {
  std::vector<MixedInterval> intervals;
  for (Rational left : {Rational(0), Rational(1), Rational(1, 2)})
    for (Rational len : {Rational(0), Rational(1), Rational(1, 2)})
      for (int lc = 0; lc < 2; ++lc)
        for (int rc = 0; rc < 2; ++rc) {
          if (len == Rational(0) && !(lc && rc)) continue;
          intervals.push_back(
              MixedInterval::make(left, left + len, lc == 1, rc == 1));
        }
  for (const MixedInterval& i : intervals)
    for (const MixedInterval& j : intervals) {
      int holds = (precedes(i, j) ? 1 : 0) + (precedes(j, i) ? 1 : 0) +
                  (intersects(i, j) ? 1 : 0);
      CHECK(holds == 1);
    }
}

TEST_CASE("poset_from_representation matches the precedence rule") {
  Representation rep = rep_of({{"x", MixedInterval::closed(0, 1)},
                               {"y", MixedInterval::closed(1, 2)},
                               {"z", MixedInterval::point(3)}});
  Poset p = poset_from_representation(rep);
  CHECK(p.incomparable(p.index_of("x"), p.index_of("y")));
  CHECK(p.less(p.index_of("x"), p.index_of("z")));
  CHECK(p.less(p.index_of("y"), p.index_of("z")));

  Poset fig2 = poset_from_representation(figure2_rep());
  CHECK(fig2.same_order_as(named("figure2").poset));

  Representation copies = rep_of({{"a", MixedInterval::closed(0, 1)},
                                  {"b", MixedInterval::closed(0, 1)},
                                  {"c", MixedInterval::closed(0, 1)}});
  CHECK(poset_from_representation(copies).incomparable_pairs().size() == 6);
}

TEST_CASE("representation rejects duplicate names") {
  Representation rep;
  rep.add("x", MixedInterval::closed(0, 1));
  CHECK_THROWS_AS(rep.add("x", MixedInterval::closed(2, 3)), DomainError);
}

TEST_CASE("is_consistent compares the derived order") {
  Representation rep = figure2_rep();
  CHECK(is_consistent(rep, named("figure2").poset));
  Poset antichain = Poset::from_relations(
      {"x1", "x2", "x3", "x4", "y", "z"}, {});
  CHECK_FALSE(is_consistent(rep, antichain));
  CHECK(is_consistent(Representation(), Poset()));
  try {
    (void)is_consistent(rep, Poset::from_relations({"x1"}, {}));
    FAIL("ground set mismatch accepted");
  } catch (const DomainError& e) {
    CHECK(e.code() == Errc::ground_set_mismatch);
  }
}

TEST_CASE("classify flags") {
  ReprClass fig2 = classify(figure2_rep());
  CHECK(fig2.all_unit);
  CHECK(fig2.unit_mixed);
  CHECK_FALSE(fig2.unit_oc);
  CHECK_FALSE(fig2.all_closed);
  CHECK(fig2.length_set == std::vector<Rational>{Rational(1)});

  ReprClass zo = classify(rep_of({{"a", MixedInterval::closed(0, 1)},
                                  {"b", MixedInterval::point(2)},
                                  {"c", MixedInterval::closed(3, 4)}}));
  CHECK(zo.lengths_01);
  CHECK(zo.all_closed);
  CHECK_FALSE(zo.all_unit);
  CHECK(zo.length_set == std::vector<Rational>{Rational(0), Rational(1)});

  ReprClass oc = classify(rep_of({{"a", MixedInterval::open(0, 1)},
                                  {"b", MixedInterval::closed(5, 6)}}));
  CHECK(oc.unit_oc);
  CHECK(oc.unit_mixed);
  CHECK(oc.all_unit);
  CHECK_FALSE(oc.all_closed);

  // Invariant: all_unit and all_closed force unit_oc.
  ReprClass closed_unit = classify(rep_of({{"a", MixedInterval::closed(0, 2)},
                                           {"b", MixedInterval::closed(1, 3)}}));
  CHECK(closed_unit.all_unit);
  CHECK(closed_unit.unit_oc);
  CHECK(closed_unit.unit_mixed);
  CHECK_FALSE(closed_unit.lengths_01);

  ReprClass empty = classify(Representation());
  CHECK(empty.all_closed);
  CHECK(empty.all_unit);
  CHECK(empty.unit_oc);
  CHECK(empty.lengths_01);
  CHECK(empty.length_set.empty());
}

TEST_CASE("canonical_closed_representation ranks down and up sets") {
  Poset chain = Poset::from_relations({"a", "b"}, {{"a", "b"}});
  Representation rep = canonical_closed_representation(chain);
  CHECK(rep.interval("a") == MixedInterval::closed(1, 1));
  CHECK(rep.interval("b") == MixedInterval::closed(2, 2));

  Poset opt = Poset::from_relations({"a", "b", "c", "d"},
                                    {{"a", "b"}, {"b", "c"}});
  Representation opt_rep = canonical_closed_representation(opt);
  CHECK(opt_rep.interval("a") == MixedInterval::closed(1, 1));
  CHECK(opt_rep.interval("b") == MixedInterval::closed(2, 2));
  CHECK(opt_rep.interval("c") == MixedInterval::closed(3, 3));
  CHECK(opt_rep.interval("d") == MixedInterval::closed(1, 3));

  Poset tpt = Poset::from_relations({"a1", "b1", "a2", "b2"},
                                    {{"a1", "b1"}, {"a2", "b2"}});
  try {
    (void)canonical_closed_representation(tpt);
    FAIL("2+2 accepted");
  } catch (const NotIntervalOrderError& e) {
    REQUIRE(e.witness().size() == 4);
    for (const auto& [pattern, host] : e.witness()) CHECK(pattern == host);
  }
}

TEST_CASE("canonical representation round trips on random interval orders") {
  int seen = 0;
  for (std::uint64_t seed = 0; seen < 60; ++seed) {
    RandomRepSpec spec;
    spec.n = 3 + static_cast<int>(seed % 6);
    spec.lengths = {Rational(0), Rational(1), Rational(5, 2)};
    spec.grid = 2;
    spec.seed = seed;
    Poset p = poset_from_representation(random_representation(spec));
    Representation canon = canonical_closed_representation(p);
    CHECK(is_consistent(canon, p));
    for (int i = 0; i < canon.size(); ++i) {
      CHECK(canon.interval(i).fully_closed());
      CHECK(canon.interval(i).left.is_integer());
      CHECK(canon.interval(i).right.is_integer());
    }
    ++seen;
  }
}

TEST_CASE("open_all opens every flag and keeps comparabilities") {
  Representation rep = rep_of({{"a", MixedInterval::closed(0, 1)},
                               {"b", MixedInterval::closed(1, 2)}});
  Representation opened = open_all(rep);
  CHECK(opened.interval("a") == MixedInterval::open(0, 1));
  CHECK(opened.interval("b") == MixedInterval::open(1, 2));
  Poset before = poset_from_representation(rep);
  Poset after = poset_from_representation(opened);
  CHECK(before.incomparable(0, 1));
  CHECK(after.less(0, 1));

  Representation already = rep_of({{"a", MixedInterval::open(0, 1)}});
  CHECK(open_all(already).interval("a") == MixedInterval::open(0, 1));

  // The 1+3 unit OC fixture: y and x2 collapse onto the same open interval.
  Representation opt = open_all(*named("one_plus_three").representation);
  CHECK(opt.interval("y") == opt.interval("x2"));
  CHECK(opt.interval("y") == MixedInterval::open(1, 2));

  try {
    (void)open_all(rep_of({{"p", MixedInterval::point(1)}}));
    FAIL("degenerate interval opened");
  } catch (const DomainError& e) {
    CHECK(e.code() == Errc::degenerate_interval);
  }
}

TEST_CASE("open_all never destroys a comparability") {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    RandomRepSpec spec;
    spec.n = 6;
    spec.lengths = {Rational(1), Rational(1, 2)};
    spec.grid = 2;
    spec.policy = FlagPolicy::mixed;
    spec.seed = seed;
    Representation rep = random_representation(spec);
    Poset p = poset_from_representation(rep);
    Poset q = poset_from_representation(open_all(rep));
    for (int u = 0; u < p.size(); ++u)
      for (int v = 0; v < p.size(); ++v)
        if (p.less(u, v)) CHECK(q.less(u, v));
  }
}

TEST_CASE("scale multiplies endpoints and preserves the order") {
  Representation rep = rep_of({{"a", MixedInterval::closed(0, 2)},
                               {"b", MixedInterval::point(3)}});
  Representation half = scale(rep, Rational(1, 2));
  CHECK(half.interval("a") == MixedInterval::closed(0, 1));
  CHECK(half.interval("b") == MixedInterval::point(Rational(3, 2)));
  CHECK(classify(half).lengths_01);

  Representation fig2 = figure2_rep();
  CHECK(scale(fig2, 1).interval("x3") == fig2.interval("x3"));
  Poset p = poset_from_representation(fig2);
  CHECK(poset_from_representation(scale(fig2, 3)).same_order_as(p));

  std::vector<Rational> lengths = classify(fig2).length_set;
  std::vector<Rational> scaled = classify(scale(fig2, Rational(7, 3))).length_set;
  REQUIRE(lengths.size() == scaled.size());
  for (std::size_t i = 0; i < lengths.size(); ++i)
    CHECK(scaled[i] == lengths[i] * Rational(7, 3));

  CHECK_THROWS_AS((void)scale(rep, Rational(0)), std::domain_error);
  CHECK_THROWS_AS((void)scale(rep, Rational(-1)), std::domain_error);
}

TEST_CASE("interval order recognition examples") {
  Poset tpt = Poset::from_relations({"a1", "b1", "a2", "b2"},
                                    {{"a1", "b1"}, {"a2", "b2"}});
  CHECK_FALSE(is_interval_order(tpt));
  CHECK_FALSE(is_unit_interval_order(tpt));

  Poset opt = Poset::from_relations({"a", "b", "c", "d"},
                                    {{"a", "b"}, {"b", "c"}});
  CHECK(is_interval_order(opt));
  CHECK_FALSE(is_unit_interval_order(opt));

  Poset fx2 = named("FX2").poset;
  CHECK(is_interval_order(fx2));
  CHECK(is_unit_interval_order(fx2));
}

TEST_CASE("both interval-order routes agree exhaustively") {
  for (int n = 1; n <= 5; ++n)
    for (const Poset& p : oracles::all_posets(n)) {
      bool by_downsets = is_interval_order_by_downsets(p);
      CHECK(by_downsets == is_interval_order_by_pattern(p));
      CHECK(by_downsets == !oracles::brute_two_plus_two(p));
    }
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Poset p = oracles::random_poset(6, seed, 35);
    CHECK(is_interval_order_by_downsets(p) == is_interval_order_by_pattern(p));
  }
}

TEST_CASE("pattern finders return valid embeddings") {
  Poset tpt = Poset::from_relations({"u", "b1", "a2", "b2", "a1"},
                                    {{"a1", "b1"}, {"a2", "b2"}, {"u", "b1"}});
  std::optional<Embedding> emb = find_two_plus_two(tpt);
  REQUIRE(emb.has_value());
  const Poset& pat = two_plus_two_pattern();
  CHECK(tpt.less(emb->map[0], emb->map[1]));
  CHECK(tpt.less(emb->map[2], emb->map[3]));
  for (int i = 0; i < pat.size(); ++i)
    for (int j = 0; j < pat.size(); ++j) {
      if (pat.less(i, j)) CHECK(tpt.less(emb->map[i], emb->map[j]));
      if (pat.incomparable(i, j))
        CHECK(tpt.incomparable(emb->map[i], emb->map[j]));
    }
  CHECK_FALSE(find_two_plus_two(named("G0").poset).has_value());
  CHECK(find_one_plus_three(named("figure2").poset).has_value());
}

#include "intorder/instances.hpp"

#include <algorithm>

namespace intorder {

namespace {

using Covers = std::vector<std::pair<ElementId, ElementId>>;

NamedInstance make_two_plus_two() {
  NamedInstance inst;
  inst.name = "two_plus_two";
  inst.poset = Poset::from_relations({"a1", "b1", "a2", "b2"},
                                     {{"a1", "b1"}, {"a2", "b2"}});
  return inst;
}

NamedInstance make_one_plus_three() {
  NamedInstance inst;
  inst.name = "one_plus_three";
  inst.poset = Poset::from_relations({"x1", "x2", "x3", "y"},
                                     {{"x1", "x2"}, {"x2", "x3"}});
  Representation rep;
  rep.add("x1", MixedInterval::closed(0, 1));
  rep.add("x2", MixedInterval::open(1, 2));
  rep.add("x3", MixedInterval::closed(2, 3));
  rep.add("y", MixedInterval::closed(1, 2));
  inst.representation = std::move(rep);
  return inst;
}

NamedInstance make_fx2() {
  NamedInstance inst;
  inst.name = "FX2";
  Covers covers = {{"a1", "b1"}, {"a2", "b1"}, {"a2", "b2"},
                   {"a2", "b3"}, {"a1", "b3"}, {"a3", "b3"},
                   {"a1", "c"},  {"a3", "c"},  {"b2", "c"}};
  inst.poset = Poset::from_relations({"a1", "a2", "a3", "b1", "b2", "b3", "c"},
                                     covers);
  return inst;
}

NamedInstance make_h0() {
  NamedInstance inst;
  inst.name = "H0";
  Covers covers = {{"b1", "c"},  {"b1", "b2"}, {"b2", "b3"}, {"d", "b3"},
                   {"b1", "a2"}, {"a1", "a2"}, {"a1", "b3"}};
  inst.poset = Poset::from_relations({"a1", "a2", "b1", "b2", "b3", "c", "d"},
                                     covers);
  return inst;
}

NamedInstance make_g0() {
  NamedInstance inst;
  inst.name = "G0";
  Covers covers = {{"a1", "a2"}, {"a2", "a3"}, {"b1", "a3"},
                   {"b1", "b2"}, {"b2", "b3"}, {"c", "b3"},
                   {"a1", "c"},  {"a1", "b2"}, {"a2", "b3"}};
  inst.poset = Poset::from_relations({"a1", "a2", "a3", "b1", "b2", "b3", "c"},
                                     covers);
  return inst;
}

NamedInstance make_figure2() {
  NamedInstance inst;
  inst.name = "figure2";
  Covers covers = {
      {"x1", "x2"}, {"x2", "x3"}, {"x3", "x4"}, {"x2", "z"}, {"y", "x4"}};
  inst.poset =
      Poset::from_relations({"x1", "x2", "x3", "x4", "y", "z"}, covers);
  Representation rep;
  rep.add("x1", MixedInterval::closed(0, 1));
  rep.add("x2", MixedInterval::open(1, 2));
  rep.add("x3", MixedInterval::make(2, 3, true, false));
  rep.add("x4", MixedInterval::closed(3, 4));
  rep.add("y", MixedInterval::closed(1, 2));
  rep.add("z", MixedInterval::closed(2, 3));
  inst.representation = std::move(rep);
  return inst;
}

}  // namespace

const std::vector<std::string>& instance_names() {
  static const std::vector<std::string> names = {
      "two_plus_two", "one_plus_three", "FX2", "H0", "G0", "figure2"};
  return names;
}

NamedInstance named(const std::string& name) {
  if (name == "two_plus_two") return make_two_plus_two();
  if (name == "one_plus_three") return make_one_plus_three();
  if (name == "FX2") return make_fx2();
  if (name == "H0") return make_h0();
  if (name == "G0") return make_g0();
  if (name == "figure2") return make_figure2();
  throw DomainError(Errc::unknown_name, "no fixture named '" + name + "'");
}

std::pair<Poset, Representation> canonical_interval_order(int n) {
  if (n < 1) throw DomainError(Errc::invalid_policy, "n must be at least 1");
  Representation rep;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      rep.add("[" + std::to_string(i) + "," + std::to_string(j) + "]",
              MixedInterval::closed(i, j));
  return {poset_from_representation(rep), std::move(rep)};
}

FlagPolicy flag_policy_from_string(const std::string& text) {
  if (text == "all_closed") return FlagPolicy::all_closed;
  if (text == "oc") return FlagPolicy::oc;
  if (text == "mixed") return FlagPolicy::mixed;
  throw DomainError(Errc::invalid_policy, "unknown flag policy '" + text + "'");
}

const char* flag_policy_name(FlagPolicy policy) {
  switch (policy) {
    case FlagPolicy::all_closed: return "all_closed";
    case FlagPolicy::oc: return "oc";
    case FlagPolicy::mixed: return "mixed";
  }
  return "unknown";
}

Representation random_representation(const RandomRepSpec& spec) {
  if (spec.n < 0)
    throw DomainError(Errc::invalid_policy, "n must be nonnegative");
  if (spec.grid < 1)
    throw DomainError(Errc::invalid_policy, "grid must be at least 1");
  if (spec.lengths.empty())
    throw DomainError(Errc::invalid_policy, "length set must be nonempty");
  for (const Rational& len : spec.lengths) {
    if (len < Rational(0))
      throw DomainError(Errc::invalid_policy, "lengths must be nonnegative");
    if (len == Rational(0) && spec.policy != FlagPolicy::all_closed)
      throw DomainError(Errc::invalid_policy,
                        "zero length forces the all_closed policy");
  }

  int span = spec.span >= 0 ? spec.span : std::max(1, spec.n);
  std::uint64_t positions =
      static_cast<std::uint64_t>(span) * spec.grid + 1;
  SplitRng rng{spec.seed};

  Representation rep;
  for (int i = 0; i < spec.n; ++i) {
    std::uint64_t base = 3 * static_cast<std::uint64_t>(i);
    Rational left(static_cast<std::int64_t>(rng.below(base, positions)),
                  spec.grid);
    const Rational& len =
        spec.lengths[rng.below(base + 1, spec.lengths.size())];
    bool left_closed = true;
    bool right_closed = true;
    std::uint64_t flag_bits = rng.at(base + 2);
    switch (spec.policy) {
      case FlagPolicy::all_closed:
        break;
      case FlagPolicy::oc:
        left_closed = right_closed = (flag_bits & 1) != 0;
        break;
      case FlagPolicy::mixed:
        left_closed = (flag_bits & 1) != 0;
        right_closed = (flag_bits & 2) != 0;
        break;
    }
    rep.add("e" + std::to_string(i + 1),
            MixedInterval::make(left, left + len, left_closed, right_closed));
  }
  return rep;
}

}  // namespace intorder

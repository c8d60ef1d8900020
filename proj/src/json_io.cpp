#include "intorder/json_io.hpp"

namespace intorder {

namespace {

const json& expect(const json& doc, const char* key, const char* context) {
  if (!doc.is_object() || !doc.contains(key))
    throw ParseError(std::string(context) + " needs a '" + key + "' key");
  return doc.at(key);
}

std::string expect_string(const json& value, const char* context) {
  if (!value.is_string())
    throw ParseError(std::string(context) + " must be a string");
  return value.get<std::string>();
}

}  // namespace

json endpoint_to_json(const Rational& value) {
  if (value.is_integer()) return json(value.num());
  return json(value.str());
}

Rational endpoint_from_json(const json& value) {
  if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
  if (value.is_string()) return Rational::parse(value.get<std::string>());
  if (value.is_number_float())
    throw ParseError("endpoint " + value.dump() +
                     " is a float; use an integer or \"p/q\"");
  throw ParseError("endpoint must be an integer or \"p/q\" string, got " +
                   value.dump());
}

json poset_to_json(const Poset& p) {
  json doc;
  doc["elements"] = json::array();
  for (const ElementId& id : p.elements()) doc["elements"].push_back(id);
  doc["relations"] = json::array();
  for (const auto& [lo, hi] : p.cover_pairs())
    doc["relations"].push_back(json::array({p.name(lo), p.name(hi)}));
  return doc;
}

Poset poset_from_json(const json& doc) {
  const json& elements = expect(doc, "elements", "poset");
  if (!elements.is_array()) throw ParseError("'elements' must be an array");
  std::vector<ElementId> ids;
  ids.reserve(elements.size());
  for (const json& e : elements) ids.push_back(expect_string(e, "element"));

  std::vector<std::pair<ElementId, ElementId>> relations;
  const json& rels = expect(doc, "relations", "poset");
  if (!rels.is_array()) throw ParseError("'relations' must be an array");
  for (const json& r : rels) {
    if (!r.is_array() || r.size() != 2)
      throw ParseError("each relation must be a [low, high] pair");
    relations.emplace_back(expect_string(r[0], "relation endpoint"),
                           expect_string(r[1], "relation endpoint"));
  }
  return Poset::from_relations(std::move(ids), relations);
}

json representation_to_json(const Representation& rep) {
  json intervals = json::object();
  for (int i = 0; i < rep.size(); ++i) {
    const MixedInterval& iv = rep.interval(i);
    json entry;
    entry["left"] = endpoint_to_json(iv.left);
    entry["right"] = endpoint_to_json(iv.right);
    entry["left_closed"] = iv.left_closed;
    entry["right_closed"] = iv.right_closed;
    intervals[rep.name(i)] = std::move(entry);
  }
  json doc;
  doc["intervals"] = std::move(intervals);
  return doc;
}

Representation representation_from_json(const json& doc) {
  const json& intervals = expect(doc, "intervals", "representation");
  if (!intervals.is_object())
    throw ParseError("'intervals' must be an object");
  Representation rep;
  for (auto it = intervals.begin(); it != intervals.end(); ++it) {
    const json& entry = it.value();
    Rational left = endpoint_from_json(expect(entry, "left", "interval"));
    Rational right = endpoint_from_json(expect(entry, "right", "interval"));
    const json& lc = expect(entry, "left_closed", "interval");
    const json& rc = expect(entry, "right_closed", "interval");
    if (!lc.is_boolean() || !rc.is_boolean())
      throw ParseError("interval flags must be booleans");
    rep.add(it.key(), MixedInterval::make(left, right, lc.get<bool>(),
                                          rc.get<bool>()));
  }
  return rep;
}

json realizer_to_json(const Poset& p, const Realizer& r) {
  json extensions = json::array();
  for (const LinearExtension& ext : r.extensions) {
    json order = json::array();
    for (int x : ext.order) order.push_back(p.name(x));
    extensions.push_back(std::move(order));
  }
  json doc;
  doc["extensions"] = std::move(extensions);
  return doc;
}

Realizer realizer_from_json(const Poset& p, const json& doc) {
  const json& extensions = expect(doc, "extensions", "realizer");
  if (!extensions.is_array())
    throw ParseError("'extensions' must be an array");
  Realizer r;
  for (const json& ext : extensions) {
    if (!ext.is_array()) throw ParseError("each extension must be an array");
    LinearExtension order;
    for (const json& e : ext)
      order.order.push_back(p.index_of(expect_string(e, "extension entry")));
    r.extensions.push_back(std::move(order));
  }
  return r;
}

json witness_to_json(const Poset& p, const CycleWitness& w) {
  json pairs = json::array();
  for (const IncPair& pr : w.pairs)
    pairs.push_back(json::array({p.name(pr.first), p.name(pr.second)}));
  json doc;
  doc["pairs"] = std::move(pairs);
  return doc;
}

json embedding_to_json(const Poset& pattern, const Poset& host,
                       const Embedding& emb) {
  json doc = json::object();
  for (int i = 0; i < pattern.size(); ++i)
    doc[pattern.name(i)] = host.name(emb.map[i]);
  return doc;
}

json repr_class_to_json(const ReprClass& cls) {
  json doc;
  doc["all_closed"] = cls.all_closed;
  doc["all_unit"] = cls.all_unit;
  doc["unit_oc"] = cls.unit_oc;
  doc["unit_mixed"] = cls.unit_mixed;
  doc["lengths_01"] = cls.lengths_01;
  doc["length_set"] = json::array();
  for (const Rational& len : cls.length_set)
    doc["length_set"].push_back(endpoint_to_json(len));
  return doc;
}

json dimension_result_to_json(const Poset& p, const DimensionResult& result) {
  json doc;
  doc["dimension"] = result.dimension;
  doc["realizer"] = realizer_to_json(p, result.realizer);
  doc["certificate"] = {
      {"no_realizer_of_size", result.certificate.no_realizer_of_size},
      {"nodes_explored", result.certificate.nodes_explored}};
  return doc;
}

}  // namespace intorder

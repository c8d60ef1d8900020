#pragma once

#include <nlohmann/json.hpp>

#include "intorder/builders.hpp"
#include "intorder/dimension.hpp"
#include "intorder/interval.hpp"
#include "intorder/poset.hpp"
#include "intorder/reversal.hpp"

namespace intorder {

/// Key order is meaningful on the wire: a representation's element order is
/// its key order, so parsing must preserve it.
using json = nlohmann::ordered_json;

/// Endpoints encode as plain integers or "p/q" strings; decimal floats are
/// rejected when parsing.
json endpoint_to_json(const Rational& value);
Rational endpoint_from_json(const json& value);

/// {"elements": [...], "relations": [[lo, hi], ...]}; emitted relations are
/// the cover pairs, parsed relations may be any generating set.
json poset_to_json(const Poset& p);
Poset poset_from_json(const json& doc);

/// {"intervals": {name: {"left":, "right":, "left_closed":, "right_closed":}}}
json representation_to_json(const Representation& rep);
Representation representation_from_json(const json& doc);

/// {"extensions": [[name, ...], ...]}, bottom of each order first.
json realizer_to_json(const Poset& p, const Realizer& r);
Realizer realizer_from_json(const Poset& p, const json& doc);

json witness_to_json(const Poset& p, const CycleWitness& w);
json embedding_to_json(const Poset& pattern, const Poset& host,
                       const Embedding& emb);
json repr_class_to_json(const ReprClass& cls);
json dimension_result_to_json(const Poset& p, const DimensionResult& result);

}  // namespace intorder

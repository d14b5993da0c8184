#pragma once

#include "linkhom/extremal.hpp"
#include "linkhom/nh.hpp"
#include "linkhom/synthesis.hpp"

#include <json.hpp>

namespace linkhom {

using Json = nlohmann::ordered_json;

/// Exact integers: a JSON number when the value fits in int64, a decimal string otherwise.
Json int_to_json(const Int& a);
Int int_from_json(const Json& j);

Json to_json(const H4NormalForm& nf);
H4NormalForm nf_from_json(const Json& j);

Json to_json(const MilnorVector& v);
Json to_json(const BoundReport& r);

Json to_json(const HWord& w);
HWord hword_from_json(const Json& j, int n);
Json to_json(const MoveSequence& seq);
MoveSequence moves_from_json(const Json& j, int n);

/// {"n": n, "edges": {"u-v": w, ...}} with 1-based vertices, zero weights omitted.
Json to_json(const WeightedGraph& g);
WeightedGraph graph_from_json(const Json& j);

}  // namespace linkhom

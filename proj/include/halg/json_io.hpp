#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "halg/fock.hpp"
#include "halg/graphs.hpp"
#include "halg/topology.hpp"

namespace halg {

using Json = nlohmann::json;

// A validated input instance: a block graph, a quasi-poset, or a set
// composition, distinguished by shape or an explicit "kind" field.
using Instance = std::variant<BlockGraph, QuasiPoset, SetComposition>;

// Parses and validates an instance document; throws std::invalid_argument
// with a diagnostic on malformed input.
Instance parse_instance(const std::string& text);

Json to_json(const SetComposition& c);
Json to_json(const BlockGraph& g);
Json to_json(const QuasiPoset& t);
Json to_json(const PackedWord& w);
Json to_json(const IntComposition& c);
Json to_json(const Polynomial& p);

template <class K>
Json to_json(const TensorKey<K, K>& k) {
    return Json::array({to_json(k.first), to_json(k.second)});
}

// LinComb serialization: canonical key order, coefficients as "p/q" text.
template <class K>
Json lincomb_to_json(const LinComb<K>& x) {
    Json out = Json::array();
    for (const auto& [k, c] : x.terms())
        out.push_back(Json{{"coeff", rat_to_string(c)}, {"key", to_json(k)}});
    return out;
}

}  // namespace halg

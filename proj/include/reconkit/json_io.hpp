#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "reconkit/deck.hpp"
#include "reconkit/integer.hpp"
#include "reconkit/nrecon.hpp"
#include "reconkit/polydeck.hpp"

namespace reconkit {

using Json = nlohmann::json;

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
Json to_json(const Integer& x);
Integer integer_from_json(const Json& j);

Json to_json(const Polynomial& p);
Json to_json(const NMatrix& n);
Json to_json(const Elp& p);
Json to_json(const PolyDeck& d);
Json to_json(const InvariantReport& r);

/// Readers throw ParseError on malformed documents.
NMatrix nmatrix_from_json(const Json& j);
PolyDeck polydeck_from_json(const Json& j);
/// { "cards": [graph6, ...] }
std::vector<Graph> vertex_deck_from_json(const Json& j);

Json parse_json(const std::string& text);

}  // namespace reconkit

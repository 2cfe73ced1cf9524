#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "expoly/decompose.hpp"
#include "expoly/gridlab.hpp"

namespace expoly {

using Json = nlohmann::ordered_json;

/// `{"re": "p/q", "im": "p/q"}`; integers are written without a denominator.
Json to_json(const Scalar& s);
/// `{"d": int, "terms": [{"lambda": [scalar...], "poly": [{"exps": [int...], "coef": scalar}]}]}`
Json to_json(const ExpPoly& f);
/// `{"n": int, "d": int, "terms": [{"E": [int...], "u": ExpPoly, "v": ExpPoly}]}`, E 1-based,
/// u and v over the n*d block coordinates.
Json to_json(const DecompWitness& w);
Json to_json(const RankCertificate& c);
Json to_json(const Order2Refutation& r);
Json to_json(const OrderBounds& b);
Json to_json(const VerifyReport& r);
Json to_json(const GridBox& box);

/// Parsers; all throw MalformedInput (or DimensionMismatch) on schema violations.
Scalar scalar_from_json(const Json& j);
ExpPoly exppoly_from_json(const Json& j);
DecompWitness witness_from_json(const Json& j);

/// Header line `d,lo_1..lo_d,hi_1..hi_d`, then one row `coords..., re, im` per
/// point in enumeration order.
std::string to_csv(const GridFunction& g);
/// Accepts rows in any order as long as every point of the box occurs exactly
/// once. An optional leading line of column names is skipped.
GridFunction grid_from_csv(std::string_view text);

}  // namespace expoly

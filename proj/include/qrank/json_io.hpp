#pragma once

// JSON encodings. Rationals are "p/q" strings, polynomials {"coeffs": [...]}
// low to high, number-field scalars arrays of rational strings (a bare
// rational string is accepted as a scalar), fields "Q" or {"min_poly": ...}.

#include <json.hpp>

#include "qrank/classify.hpp"
#include "qrank/groups.hpp"
#include "qrank/hereditary.hpp"

namespace qrank::json_io {

using Json = nlohmann::ordered_json;

Rational parse_rational_json(const Json& j);
QPoly parse_qpoly(const Json& j);
FieldPtr parse_field(const Json& j);
NfElement parse_element(const FieldPtr& field, const Json& j);
KPoly parse_kpoly(const FieldPtr& field, const Json& j);
CompanionPresentation parse_presentation(const Json& j);
long parse_integer(const Json& j, const char* what);

Json to_json(const Rational& r);
Json to_json(const QPoly& p);
Json field_to_json(const FieldPtr& field);
Json to_json(const FieldPtr& field, const NfElement& a);
Json to_json(const FieldPtr& field, const KPoly& p);
Json to_json(const CompanionPresentation& g);
Json to_json(const ValidationReport& v);
Json to_json(const CapelliAnalysis& a);
Json to_json(const HereditaryFactorization& h);
Json to_json(const RankReport& r);

/// Member `key` of object j, or ParseError.
const Json& require(const Json& j, const char* key);

}  // namespace qrank::json_io

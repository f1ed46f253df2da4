#include "qrank/json_io.hpp"

#include <limits>

namespace qrank::json_io {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw Error(ErrorKind::ParseError, msg); }

const Json& require_array(const Json& j, const char* what) {
  if (!j.is_array()) fail(std::string(what) + " must be an array");
  return j;
}

}  // namespace

const Json& require(const Json& j, const char* key) {
  if (!j.is_object()) fail(std::string("expected an object with key \"") + key + "\"");
  const auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing key \"") + key + "\"");
  return *it;
}

long parse_integer(const Json& j, const char* what) {
  if (j.is_number_integer()) return j.get<long>();
  if (j.is_number_unsigned()) {
    const auto v = j.get<unsigned long>();
    if (v > static_cast<unsigned long>(std::numeric_limits<long>::max())) fail(std::string(what) + " out of range");
    return static_cast<long>(v);
  }
  if (j.is_string()) {
    const Rational r = parse_rational(j.get<std::string>());
    if (r.get_den() != 1 || !r.get_num().fits_slong_p()) fail(std::string(what) + " must be a machine integer");
    return r.get_num().get_si();
  }
  fail(std::string(what) + " must be an integer");
}

Rational parse_rational_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  fail("rational must be a \"p/q\" string");
}

QPoly parse_qpoly(const Json& j) {
  const Json& c = require_array(require(j, "coeffs"), "coeffs");
  std::vector<Rational> v;
  for (const auto& x : c) v.push_back(parse_rational_json(x));
  return QPoly(std::move(v));
}

FieldPtr parse_field(const Json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "Q") return NumberField::rationals();
    fail("ring must be \"Q\" or {\"min_poly\": ...}");
  }
  const QPoly m = parse_qpoly(require(j, "min_poly"));
  if (m == QPoly::x()) return NumberField::rationals();
  try {
    return NumberField::make(m);
  } catch (const Error& e) {
    fail(std::string("invalid number field: ") + e.what());
  }
}

NfElement parse_element(const FieldPtr& field, const Json& j) {
  if (j.is_string() || j.is_number_integer()) return NfElement(field, QPoly::constant(parse_rational_json(j)));
  const Json& c = require_array(j, "number-field scalar");
  if (static_cast<int>(c.size()) > field->degree()) fail("scalar has more coordinates than the field degree");
  std::vector<Rational> v;
  for (const auto& x : c) v.push_back(parse_rational_json(x));
  return NfElement(field, v);
}

KPoly parse_kpoly(const FieldPtr& field, const Json& j) {
  const Json& c = require_array(require(j, "coeffs"), "coeffs");
  std::vector<NfElement> v;
  for (const auto& x : c) v.push_back(parse_element(field, x));
  return KPoly(std::move(v));
}

CompanionPresentation parse_presentation(const Json& j) {
  const FieldPtr ring = parse_field(require(j, "ring"));
  Ambient ambient = Ambient::Multiplicative;
  if (j.contains("ambient")) {
    const Json& a = j["ambient"];
    if (a == "multiplicative") ambient = Ambient::Multiplicative;
    else if (a == "cm_elliptic") ambient = Ambient::CMElliptic;
    else fail("ambient must be \"multiplicative\" or \"cm_elliptic\"");
  }
  std::optional<CompanionPresentation> from_poly, from_row;
  try {
    if (j.contains("char_poly"))
      from_poly = CompanionPresentation::from_char_poly(ring, parse_kpoly(ring, j["char_poly"]), ambient);
    if (j.contains("last_row")) {
      const Json& row = require_array(j["last_row"], "last_row");
      const long size = parse_integer(require(j, "size"), "size");
      if (size < 1 || static_cast<std::size_t>(size) != row.size()) fail("size must equal the length of last_row");
      std::vector<NfElement> v;
      for (const auto& x : row) v.push_back(parse_element(ring, x));
      from_row = CompanionPresentation::from_last_row(ring, v, ambient);
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ParseError) throw;
    fail(std::string("invalid presentation: ") + e.what());
  }
  if (from_poly && from_row && !(*from_poly == *from_row)) fail("char_poly and last_row disagree");
  if (from_poly) return *from_poly;
  if (from_row) return *from_row;
  fail("presentation needs \"char_poly\" or \"last_row\" with \"size\"");
}

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const QPoly& p) {
  Json c = Json::array();
  for (const auto& x : p.coeffs()) c.push_back(to_json(x));
  return Json{{"coeffs", c}};
}

Json field_to_json(const FieldPtr& field) {
  if (field->min_poly() == QPoly::x()) return "Q";
  return Json{{"min_poly", to_json(field->min_poly())}};
}

Json to_json(const FieldPtr& field, const NfElement& a) {
  if (field->degree() == 1) return to_json(a.value().coeff(0));
  Json c = Json::array();
  std::vector<Rational> v = a.value().coeffs();
  v.resize(field->degree(), Rational(0));
  for (const auto& x : v) c.push_back(to_json(x));
  return c;
}

Json to_json(const FieldPtr& field, const KPoly& p) {
  Json c = Json::array();
  for (const auto& x : p.coeffs()) c.push_back(to_json(field, x));
  return Json{{"coeffs", c}};
}

Json to_json(const CompanionPresentation& g) {
  Json row = Json::array();
  for (const auto& x : g.companion().last_row) row.push_back(to_json(g.ring, x));
  return Json{{"ring", field_to_json(g.ring)},
              {"char_poly", to_json(g.ring, g.char_poly)},
              {"last_row", row},
              {"size", g.sigma_degree()},
              {"ambient", to_string(g.ambient)}};
}

Json to_json(const ValidationReport& v) {
  return Json{{"irreducible_over_R", v.irreducible_over_R},
              {"root_of_unity_eigenvalue", v.root_of_unity_eigenvalue},
              {"minimal_necessary", v.minimal_necessary},
              {"one_based_necessary", v.one_based_necessary},
              {"passed", v.passed()}};
}

Json to_json(const CapelliAnalysis& a) {
  Json o = Json::object();
  o["obstruction"] = a.obstruction ? Json(to_string(*a.obstruction)) : Json(nullptr);
  o["root_field_degree"] = a.root_field_degree;
  o["prime_bound"] = a.prime_bound;
  o["primes_tested"] = a.primes_tested;
  o["minus_four_tested"] = a.minus_four_tested;
  o["height_upper"] = a.height_upper;
  o["height_floor"] = a.height_floor;
  return o;
}

Json to_json(const HereditaryFactorization& h) {
  Json factors = Json::array();
  for (const auto& f : h.factors) factors.push_back(to_json(h.field, f));
  Json certs = Json::array();
  for (const auto& c : h.certificates)
    certs.push_back(Json{{"base", to_json(h.field, c.base)},
                         {"lift_exponent", c.lift_exponent},
                         {"analysis", to_json(c.analysis)}});
  Json splits = Json::array();
  for (const auto& s : h.splits) {
    Json children = Json::array();
    for (const auto& c : s.children) children.push_back(to_json(h.field, c));
    splits.push_back(Json{{"parent", to_json(h.field, s.parent)},
                          {"depth_exponent", s.depth_exponent},
                          {"obstruction", to_string(s.obstruction)},
                          {"children", children}});
  }
  return Json{{"ring", field_to_json(h.field)},
              {"input", to_json(h.field, h.input)},
              {"exponent", h.exponent},
              {"factor_count", h.factors.size()},
              {"factors", factors},
              {"certificates", certs},
              {"splits", splits}};
}

Json to_json(const RankReport& r) {
  Json o = Json::object();
  o["rank"] = r.kind == RankReport::Kind::Finite ? Json(r.value) : Json(to_string(r.kind));
  o["kind"] = to_string(r.kind);
  o["method"] = to_string(r.method);
  if (r.bound) o["bound"] = *r.bound;
  if (r.witness) o["witness"] = to_json(*r.witness);
  return o;
}

}  // namespace qrank::json_io

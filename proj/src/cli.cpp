#include "qrank/cli.hpp"

#include <algorithm>
#include <sstream>

namespace qrank::cli {

namespace {

using namespace json_io;

Status status_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::InvalidArgument:
    case ErrorKind::NotMonic:
      return Status::ParseError;
    case ErrorKind::BudgetExceeded:
      return Status::BudgetExceeded;
    default:
      return Status::ValidationFailed;
  }
}

unsigned parse_exponent(const Json& j) {
  const long n = parse_integer(j, "n");
  if (n < 1 || n > 1'000'000) throw Error(ErrorKind::ParseError, "n must be in [1, 1000000]");
  return static_cast<unsigned>(n);
}

Json validation_result(const ValidationReport& v) { return Json{{"validation", to_json(v)}}; }

Status cmd_rank(const Json& p, const EngineConfig& config, Json& result) {
  const CompanionPresentation g = parse_presentation(p);
  const ValidationReport v = validate(g);
  result = validation_result(v);
  if (!v.passed()) return Status::ValidationFailed;
  const RankReport r = qacfa_rank(g, config);
  Json rank = to_json(r);
  for (auto it = rank.begin(); it != rank.end(); ++it) result[it.key()] = it.value();
  bool replayed = true;
  for (const auto& c : r.witness->certificates) replayed = replayed && replay_certificate(g.ring, c);
  result["certificates_replayed"] = replayed;
  return Status::Ok;
}

Status cmd_reduct_rank(const Json& p, const EngineConfig& config, Json& result) {
  const CompanionPresentation g = parse_presentation(p);
  const unsigned n = parse_exponent(require(p, "n"));
  const ValidationReport v = validate(g);
  result = validation_result(v);
  if (!v.passed()) return Status::ValidationFailed;
  result["n"] = n;
  result["rank"] = rank_in_reduct(g, n, config);
  result["spectrum"] = subgroup_degree_spectrum(g, n, config);
  return Status::Ok;
}

Status cmd_hereditary(const Json& p, const EngineConfig& config, Json& result) {
  const FieldPtr ring = parse_field(require(p, "ring"));
  const KPoly poly = parse_kpoly(ring, require(p, "poly"));
  if (poly.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "zero polynomial");
  const HereditaryFactorization h = hereditary_factorization(ring, poly, config);
  result = to_json(h);
  bool replayed = true;
  for (const auto& c : h.certificates) replayed = replayed && replay_certificate(ring, c);
  result["certificates_replayed"] = replayed;
  return Status::Ok;
}

Status cmd_validate(const Json& p, const EngineConfig&, Json& result) {
  const CompanionPresentation g = parse_presentation(p);
  const ValidationReport v = validate(g);
  result = validation_result(v);
  return v.passed() ? Status::Ok : Status::ValidationFailed;
}

Status cmd_prolong(const Json& p, const EngineConfig& config, Json& result) {
  const CompanionPresentation g = parse_presentation(p);
  const unsigned n = parse_exponent(require(p, "n"));
  const long size = static_cast<long>(g.sigma_degree()) * n;
  if (size > config.max_degree)
    throw Error(ErrorKind::BudgetExceeded, "prolongation size " + std::to_string(size) + " > QRANK_MAX_DEGREE");
  const CompanionPresentation h = prolong(g, n);
  result = Json{{"n", n}, {"presentation", to_json(h)}, {"entry_law", entry_law_holds(g.companion(), h.companion(), n)}};
  return Status::Ok;
}

Status cmd_degree_bound(const Json& p, const EngineConfig&, Json& result) {
  Rational ratio;
  if (p.contains("ratio")) {
    ratio = parse_rational_json(p["ratio"]);
  } else if (p.contains("deg_pi") || p.contains("deg_rho")) {
    ratio = degree_ratio({Integer(parse_integer(require(p, "deg_pi"), "deg_pi")),
                          Integer(parse_integer(require(p, "deg_rho"), "deg_rho"))});
  } else {
    const CompanionPresentation g = parse_presentation(require(p, "presentation"));
    const auto c0 = g.char_poly.coeff(0).as_rational();
    if (g.ring->degree() != 1 || g.ambient != Ambient::Multiplicative || !c0 || c0->get_den() != 1)
      throw Error(ErrorKind::ParseError, "degree ratio is only derived for integer presentations over Q in G_m");
    ratio = abs(*c0);
  }
  result = Json{{"ratio", to_json(ratio)}};
  const auto bound = rank_bound_from_ratio(ratio);
  result["rationality_exponent"] = bound ? Json(*bound) : Json(nullptr);
  result["rank_bound"] = bound ? Json(*bound) : Json(nullptr);
  return Status::Ok;
}

Status cmd_fixed_field(const Json& p, const EngineConfig&, Json& result) {
  FixedFieldQuery q;
  q.q0 = parse_rational_json(require(p, "q0"));
  q.m = parse_integer(require(p, "m"), "m");
  const long c = p.contains("characteristic") ? parse_integer(p["characteristic"], "characteristic") : 0;
  if (c < 0) throw Error(ErrorKind::ParseError, "characteristic must be 0 or a prime");
  q.characteristic = static_cast<unsigned long>(c);
  result = to_json(fixed_field_rank(q));
  return Status::Ok;
}

Status cmd_oracle(const Json& p, const EngineConfig& config, Json& result) {
  const FieldPtr ring = parse_field(require(p, "ring"));
  const KPoly poly = parse_kpoly(ring, require(p, "poly"));
  const Json& nj = require(p, "n");
  if (!nj.is_array()) throw Error(ErrorKind::ParseError, "n must be an array");
  std::vector<unsigned> ns;
  for (const auto& x : nj) ns.push_back(parse_exponent(x));
  result = Json{{"n", ns}, {"counts", oracle_factor_counts(ring, poly, ns, config)}};
  return Status::Ok;
}

using Handler = Status (*)(const Json&, const EngineConfig&, Json&);

Handler handler_for(const std::string& command) {
  if (command == "rank") return cmd_rank;
  if (command == "reduct-rank") return cmd_reduct_rank;
  if (command == "hereditary") return cmd_hereditary;
  if (command == "validate") return cmd_validate;
  if (command == "prolong") return cmd_prolong;
  if (command == "degree-bound") return cmd_degree_bound;
  if (command == "fixed-field") return cmd_fixed_field;
  if (command == "oracle") return cmd_oracle;
  return nullptr;
}

Json header(const std::string& command, Status status, const EngineConfig& config) {
  return Json{{"status", to_string(status)},
              {"command", command},
              {"engine", Json{{"name", kEngineName}, {"version", kEngineVersion}}},
              {"config", Json{{"max_degree", config.max_degree}, {"max_prime", config.max_prime}}}};
}

Outcome run_one(const std::string& command, const Json& task, const EngineConfig& config) {
  Json payload = task;
  Status status = Status::Ok;
  Json result;
  std::optional<Json> error;
  try {
    if (task.is_object() && task.contains("command") && task.contains("payload")) {
      if (task["command"] != command)
        throw Error(ErrorKind::ParseError, "task command does not match the requested command");
      payload = task["payload"];
    }
    const Handler h = handler_for(command);
    if (!h) throw Error(ErrorKind::ParseError, "unknown command \"" + command + "\"");
    status = h(payload, config, result);
  } catch (const Error& e) {
    status = status_for(e.kind());
    error = Json{{"kind", std::string(qrank::to_string(e.kind()))}, {"message", e.what()}};
  } catch (const nlohmann::json::exception& e) {
    status = Status::ParseError;
    error = Json{{"kind", "ParseError"}, {"message", e.what()}};
  } catch (const std::exception& e) {
    status = Status::InternalError;
    error = Json{{"kind", "Internal"}, {"message", e.what()}};
  }
  Json report = header(command, status, config);
  report["input"] = payload;
  report["result"] = result.is_null() ? Json::object() : result;
  if (error) report["error"] = *error;
  report["status"] = to_string(status);
  return {std::move(report), exit_code(status)};
}

void render_poly(std::ostream& os, const Json& coeffs) {
  auto scalar = [](const Json& c) -> std::string {
    if (c.is_string()) return c.get<std::string>();
    std::string out;
    for (std::size_t i = 0; i < c.size(); ++i) {
      const std::string v = c[i].get<std::string>();
      if (v == "0") continue;
      if (!out.empty()) out += " + ";
      out += i == 0 ? v : v + "*t" + (i > 1 ? "^" + std::to_string(i) : "");
    }
    return out.empty() ? "0" : "(" + out + ")";
  };
  bool first = true;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    std::string c = scalar(coeffs[i]);
    if (c == "0") continue;
    bool negative = c[0] == '-';
    if (negative) c = c.substr(1);
    if (first) os << (negative ? "-" : "");
    else os << (negative ? " - " : " + ");
    first = false;
    const bool unit = c == "1";
    if (i == 0 || !unit) os << c;
    if (i > 0) os << (unit ? "" : "*") << "x" << (i > 1 ? "^" + std::to_string(i) : "");
  }
  if (first) os << "0";
}

bool is_poly(const Json& j) { return j.is_object() && j.size() == 1 && j.contains("coeffs"); }

void render_value(std::ostream& os, const Json& j, int indent);

void render_member(std::ostream& os, const std::string& key, const Json& v, int indent) {
  os << std::string(indent, ' ') << key << ":";
  if (is_poly(v)) {
    os << " ";
    render_poly(os, v["coeffs"]);
    os << "\n";
  } else if (v.is_structured() && !v.empty() &&
             !(v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_primitive(); }))) {
    os << "\n";
    render_value(os, v, indent + 2);
  } else {
    os << " " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  }
}

void render_value(std::ostream& os, const Json& j, int indent) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) render_member(os, it.key(), it.value(), indent);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) render_member(os, "[" + std::to_string(i) + "]", j[i], indent);
  } else {
    os << std::string(indent, ' ') << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

}  // namespace

const char* to_string(Status s) {
  switch (s) {
    case Status::Ok: return "ok";
    case Status::ValidationFailed: return "validation_failed";
    case Status::BudgetExceeded: return "budget_exceeded";
    case Status::ParseError: return "parse_error";
    case Status::InternalError: return "internal_error";
  }
  return "internal_error";
}

int exit_code(Status s) {
  switch (s) {
    case Status::Ok: return 0;
    case Status::ValidationFailed: return 2;
    case Status::BudgetExceeded: return 3;
    case Status::ParseError: return 4;
    case Status::InternalError: return 1;
  }
  return 1;
}

const std::vector<std::string>& commands() {
  static const std::vector<std::string> c{"rank",     "reduct-rank",  "hereditary",  "validate",
                                          "prolong",  "degree-bound", "fixed-field", "oracle"};
  return c;
}

Outcome run(const std::string& command, const Json& input, const EngineConfig& config) {
  if (!input.is_array()) return run_one(command, input, config);
  const long count = static_cast<long>(input.size());
  std::vector<Outcome> outcomes(input.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) outcomes[i] = run_one(command, input[i], config);
  Json reports = Json::array();
  int code = 0;
  for (auto& o : outcomes) {
    code = std::max(code, o.exit_code);
    reports.push_back(std::move(o.report));
  }
  Status overall = Status::Ok;
  for (Status s : {Status::ValidationFailed, Status::BudgetExceeded, Status::ParseError})
    if (exit_code(s) == code) overall = s;
  if (code == 1) overall = Status::InternalError;
  Json report = header(command, overall, config);
  report["reports"] = std::move(reports);
  return {std::move(report), code};
}

Outcome run_text(const std::string& command, const std::string& text, const EngineConfig& config) {
  Json input;
  try {
    input = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    return failure(command, Status::ParseError, e.what());
  }
  return run(command, input, config);
}

Outcome failure(const std::string& command, Status status, const std::string& message) {
  Json report = header(command, status, EngineConfig{});
  report.erase("config");
  report["error"] = Json{{"kind", status == Status::ParseError ? "ParseError" : to_string(status)}, {"message", message}};
  return {std::move(report), exit_code(status)};
}

std::string render_text(const Json& report) {
  std::ostringstream os;
  render_value(os, report, 0);
  return os.str();
}

}  // namespace qrank::cli

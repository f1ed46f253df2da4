#include "qrank/groups.hpp"

#include <algorithm>
#include <stdexcept>

namespace qrank {

namespace {

NfElement in_field(const FieldPtr& ring, const NfElement& c) {
  return c.field() ? c : NfElement(ring, c.value());
}

void require_valid(const CompanionPresentation& g) {
  const ValidationReport v = validate(g);
  if (v.root_of_unity_eigenvalue) throw Error(ErrorKind::RootOfUnity, "a root of unity is an eigenvalue of M");
  if (!v.irreducible_over_R)
    throw Error(ErrorKind::ValidationFailed, "characteristic polynomial is reducible over the ring");
}

void require_n(unsigned n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "n must be >= 1");
}

void require_budget(const CompanionPresentation& g, unsigned n, const EngineConfig& config) {
  const long deg = static_cast<long>(g.sigma_degree()) * n;
  if (deg > config.max_degree)
    throw Error(ErrorKind::BudgetExceeded, "P(x^" + std::to_string(n) + ") has degree " + std::to_string(deg) +
                                               " > QRANK_MAX_DEGREE=" + std::to_string(config.max_degree));
}

}  // namespace

CompanionPresentation CompanionPresentation::from_char_poly(FieldPtr ring, const KPoly& p, Ambient ambient) {
  if (!ring) throw Error(ErrorKind::InvalidArgument, "missing ring");
  if (p.degree() < 1) throw Error(ErrorKind::InvalidArgument, "characteristic polynomial must have degree >= 1");
  if (!p.is_monic()) throw Error(ErrorKind::NotMonic, "characteristic polynomial must be monic");
  std::vector<NfElement> v;
  for (const auto& c : p.coeffs()) v.push_back(in_field(ring, c));
  return CompanionPresentation{std::move(ring), KPoly(std::move(v)), ambient};
}

CompanionPresentation CompanionPresentation::from_last_row(FieldPtr ring, const std::vector<NfElement>& last_row,
                                                           Ambient ambient) {
  if (last_row.empty()) throw Error(ErrorKind::InvalidArgument, "last_row must be non-empty");
  return from_char_poly(std::move(ring), charpoly_of(CompanionMatrix<NfElement>{last_row}), ambient);
}

ValidationReport validate(const CompanionPresentation& g) {
  if (g.char_poly.coeff(0).is_zero()) throw Error(ErrorKind::ZeroConstantTerm, "M is not invertible: P(0) = 0");
  ValidationReport r;
  r.irreducible_over_R = factor_over_K(g.ring, g.char_poly).count() == 1;
  r.root_of_unity_eigenvalue = has_root_of_unity_root(g.ring, g.char_poly);
  r.minimal_necessary = r.irreducible_over_R;
  r.one_based_necessary = !r.root_of_unity_eigenvalue;
  return r;
}

bool entry_law_holds(const CompanionMatrix<NfElement>& base, const CompanionMatrix<NfElement>& prolonged, unsigned n) {
  const std::size_t m = base.size();
  if (n == 0 || prolonged.size() != m * n) return false;
  const std::size_t mn = m * n;
  for (std::size_t col = 1; col <= mn; ++col) {
    const NfElement want = (col - 1) % n == 0 ? base.entry(m, (col - 1) / n + 1) : NfElement(0);
    if (prolonged.entry(mn, col) != want) return false;
  }
  return true;
}

CompanionPresentation prolong(const CompanionPresentation& g, unsigned n) {
  require_n(n);
  CompanionPresentation out{g.ring, substitute_power(g.char_poly, n), g.ambient};
  if (!entry_law_holds(g.companion(), out.companion(), n))
    throw std::logic_error("prolonged companion matrix violates the entry law");
  return out;
}

unsigned rank_in_reduct(const CompanionPresentation& g, unsigned n, const EngineConfig& config) {
  require_n(n);
  require_valid(g);
  require_budget(g, n, config);
  return factor_over_K(g.ring, substitute_power(g.char_poly, n)).count();
}

RankReport qacfa_rank(const CompanionPresentation& g, const EngineConfig& config) {
  require_valid(g);
  RankReport r;
  r.kind = RankReport::Kind::Finite;
  r.method = RankReport::Method::HereditaryFactorCount;
  r.witness = hereditary_factorization(g.ring, g.char_poly, config);
  r.value = r.witness->factors.size();
  return r;
}

bool eigenvalue_compatible(const KPoly& q, const CompanionPresentation& g, unsigned n) {
  if (q.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "candidate characteristic polynomial is zero");
  require_n(n);
  if (q.degree() < 1) return true;
  return divides(squarefree_part(q), substitute_power(g.char_poly, n));
}

std::vector<int> subgroup_degree_spectrum(const CompanionPresentation& g, unsigned n, const EngineConfig& config) {
  require_n(n);
  require_valid(g);
  require_budget(g, n, config);
  std::vector<int> out;
  for (const auto& [f, e] : factor_over_K(g.ring, substitute_power(g.char_poly, n)).factors)
    for (unsigned k = 0; k < e; ++k) out.push_back(f.degree());
  std::sort(out.begin(), out.end());
  return out;
}

const char* to_string(Ambient a) { return a == Ambient::Multiplicative ? "multiplicative" : "cm_elliptic"; }

const char* to_string(RankReport::Kind k) {
  switch (k) {
    case RankReport::Kind::Finite: return "finite";
    case RankReport::Kind::Infinite: return "infinite";
    case RankReport::Kind::Undefined: return "undefined";
  }
  return "?";
}

const char* to_string(RankReport::Method m) {
  switch (m) {
    case RankReport::Method::HereditaryFactorCount: return "hereditary_factor_count";
    case RankReport::Method::FixedFieldRule: return "fixed_field_rule";
    case RankReport::Method::DegreeRatioBoundOnly: return "degree_ratio_bound_only";
  }
  return "?";
}

}  // namespace qrank

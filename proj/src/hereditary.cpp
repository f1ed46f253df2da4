#include "qrank/hereditary.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace qrank {

std::string to_string(const Obstruction& o) {
  return o.kind == Obstruction::Kind::PthPower ? "PthPower(" + std::to_string(o.prime) + ")" : "MinusFour";
}

namespace {

// Lower bound for h(beta) when beta has degree exactly d and is neither zero
// nor a root of unity: log 2 over Q, the golden ratio for quadratics, and
// Voutier's explicit Dobrowolski-type bounds beyond.
double height_floor_exact_degree(int d) {
  if (d == 1) return std::log(2.0);
  if (d == 2) return 0.5 * std::log((1.0 + std::sqrt(5.0)) / 2.0);
  const double ld = std::log(static_cast<double>(d));
  const double ratio = std::log(ld) / ld;
  const double dobrowolski = ratio * ratio * ratio / (4.0 * d);
  const double l3d = std::log(3.0 * d);
  const double voutier = 2.0 / (d * l3d * l3d * l3d);
  return std::max(dobrowolski, voutier);
}

KPoly monic_over(const FieldPtr& field, const KPoly& p) {
  KPoly m = monic(p);
  std::vector<NfElement> v = m.coeffs();
  for (auto& c : v)
    if (!c.field()) c = NfElement(field, c.value());
  return KPoly(std::move(v));
}

void require_budget(int degree, const EngineConfig& config, const char* what) {
  if (degree > config.max_degree)
    throw Error(ErrorKind::BudgetExceeded, std::string(what) + " needs degree " + std::to_string(degree) +
                                               " > QRANK_MAX_DEGREE=" + std::to_string(config.max_degree));
}

void check_capelli_preconditions(const FieldPtr& field, const KPoly& q) {
  if (q.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "zero polynomial");
  if (q.degree() < 1) throw Error(ErrorKind::NotIrreducible, "constant polynomial");
  if (q.coeffs()[0].is_zero()) throw Error(ErrorKind::ZeroConstantTerm, "polynomial vanishes at 0");
  if (has_root_of_unity_root(field, q)) throw Error(ErrorKind::RootOfUnity, "polynomial has a root-of-unity root");
}

}  // namespace

double height_floor(int d) {
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "height_floor needs d >= 1");
  double best = std::numeric_limits<double>::infinity();
  for (int k = 1; k <= d; ++k) best = std::min(best, height_floor_exact_degree(k));
  // round down
  return std::nextafter(best * (1.0 - 1e-12), 0.0);
}

bool has_root_of_unity_root(const FieldPtr& field, const KPoly& p_in) {
  if (p_in.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "root-of-unity test of zero polynomial");
  if (p_in.degree() < 1) return false;
  const KPoly p = monic_over(field, p_in);
  // a root of order n generates Q(zeta_n) of degree phi(n) <= deg(p) [K:Q], and
  // phi(n) >= sqrt(n/2)
  const long dim = static_cast<long>(p.degree()) * field->degree();
  const long n_max = 2 * dim * dim;
  const KPoly x = KPoly::x();
  const KPoly one = KPoly::constant(NfElement(1));
  KPoly xn = KPoly::constant(NfElement(1));
  for (long n = 1; n <= n_max; ++n) {
    xn = (xn * x) % p;
    if (gcd(p, xn - one).degree() >= 1) return true;
  }
  return false;
}

CapelliAnalysis capelli_analysis(const FieldPtr& field, const KPoly& q_in, const EngineConfig& config) {
  check_capelli_preconditions(field, q_in);
  const KPoly q = monic_over(field, q_in);
  const Flattening flat = flatten(field, q);
  const FieldPtr& root_field = flat.field;
  const NfElement& alpha = flat.root;

  CapelliAnalysis out;
  out.root_field_degree = root_field->degree();
  if (out.root_field_degree == 1) {
    // alpha = beta^p over Q needs p | every prime exponent of |alpha|.
    const Rational r = abs(*alpha.as_rational());
    long g = 0;
    for (const auto& [prime, e] : exponent_vector(r)) g = std::gcd(g, std::abs(e));
    out.prime_bound = static_cast<unsigned long>(g);
    out.height_upper = weil_height(alpha);
    out.height_floor = std::log(2.0);
  } else {
    out.height_upper = weil_height(alpha);
    out.height_floor = height_floor(out.root_field_degree);
    const double ratio = std::ceil(out.height_upper / out.height_floor);
    if (!(ratio <= static_cast<double>(config.max_prime)))
      throw Error(ErrorKind::BudgetExceeded, "prime search bound " + std::to_string(ratio) +
                                                 " exceeds QRANK_MAX_PRIME=" + std::to_string(config.max_prime));
    out.prime_bound = static_cast<unsigned long>(ratio);
  }
  if (out.prime_bound > config.max_prime)
    throw Error(ErrorKind::BudgetExceeded, "prime search bound " + std::to_string(out.prime_bound) +
                                               " exceeds QRANK_MAX_PRIME=" + std::to_string(config.max_prime));

  for (unsigned long p : primes_up_to(out.prime_bound)) {
    out.primes_tested.push_back(p);
    if (is_pth_power(root_field, alpha, p)) {
      out.obstruction = Obstruction{Obstruction::Kind::PthPower, p};
      return out;
    }
  }
  out.minus_four_tested = true;
  if (in_minus4_fourth_powers(root_field, alpha)) out.obstruction = Obstruction{Obstruction::Kind::MinusFour, 0};
  return out;
}

std::optional<Obstruction> capelli_obstruction(const FieldPtr& field, const KPoly& q, const EngineConfig& config) {
  return capelli_analysis(field, q, config).obstruction;
}

bool replay_certificate(const FieldPtr& field, const HereditaryCertificate& cert) {
  const Flattening flat = flatten(field, monic_over(field, cert.base));
  const auto& a = cert.analysis;
  if (flat.field->degree() != a.root_field_degree) return false;
  for (std::size_t i = 0; i < a.primes_tested.size(); ++i) {
    const bool is_last = i + 1 == a.primes_tested.size();
    const bool expected = a.obstruction && a.obstruction->kind == Obstruction::Kind::PthPower && is_last;
    if (is_pth_power(flat.field, flat.root, a.primes_tested[i]) != expected) return false;
  }
  if (a.minus_four_tested) {
    const bool expected = a.obstruction && a.obstruction->kind == Obstruction::Kind::MinusFour;
    if (in_minus4_fourth_powers(flat.field, flat.root) != expected) return false;
  }
  return true;
}

HereditaryFactorization hereditary_factorization(const FieldPtr& field, const KPoly& p_in, const EngineConfig& config) {
  check_capelli_preconditions(field, p_in);
  const KPoly p = monic_over(field, p_in);
  if (factor_over_K(field, p).count() != 1)
    throw Error(ErrorKind::NotIrreducible, "input polynomial is reducible over its field");

  HereditaryFactorization out;
  out.field = field;
  out.input = p;

  struct Pending {
    KPoly poly;
    unsigned long depth;
  };
  struct Terminal {
    KPoly poly;
    unsigned long depth;
    CapelliAnalysis analysis;
  };
  std::vector<Pending> pending{{p, 1}};
  std::vector<Terminal> terminal;
  while (!pending.empty()) {
    Pending item = std::move(pending.front());
    pending.erase(pending.begin());
    CapelliAnalysis analysis = capelli_analysis(field, item.poly, config);
    if (!analysis.obstruction) {
      terminal.push_back({std::move(item.poly), item.depth, std::move(analysis)});
      continue;
    }
    const unsigned long n = analysis.obstruction->exponent();
    require_budget(static_cast<int>(static_cast<unsigned long>(p.degree()) * item.depth * n), config,
                   "hereditary factorization");
    const auto split = factor_over_K(field, substitute_power(item.poly, static_cast<unsigned>(n)));
    SplitStep step{item.poly, item.depth, *analysis.obstruction, {}};
    for (const auto& [f, e] : split.factors)
      for (unsigned k = 0; k < e; ++k) step.children.push_back(f);
    if (step.children.size() < 2)
      throw std::logic_error("obstruction " + to_string(*analysis.obstruction) + " did not split the polynomial");
    for (const auto& child : step.children) pending.push_back({child, item.depth * n});
    out.splits.push_back(std::move(step));
  }

  unsigned long big_n = 1;
  for (const auto& t : terminal) big_n = std::lcm(big_n, t.depth);
  require_budget(static_cast<int>(static_cast<unsigned long>(p.degree()) * big_n), config, "hereditary factorization");
  out.exponent = big_n;

  std::vector<HereditaryCertificate> certs;
  for (auto& t : terminal) {
    const unsigned long lift = big_n / t.depth;
    certs.push_back({t.poly, lift, std::move(t.analysis)});
  }
  std::sort(certs.begin(), certs.end(), [](const HereditaryCertificate& a, const HereditaryCertificate& b) {
    const KPoly fa = substitute_power(a.base, static_cast<unsigned>(a.lift_exponent));
    const KPoly fb = substitute_power(b.base, static_cast<unsigned>(b.lift_exponent));
    return canonical_less(fa, fb);
  });
  KPoly product = KPoly::constant(NfElement(field, QPoly::constant(Rational(1))));
  for (auto& c : certs) {
    KPoly lifted = substitute_power(c.base, static_cast<unsigned>(c.lift_exponent));
    product = product * lifted;
    out.factors.push_back(std::move(lifted));
  }
  out.certificates = std::move(certs);
  if (product != substitute_power(p, static_cast<unsigned>(big_n)))
    throw std::logic_error("hereditary factors do not multiply back to P(x^N)");
  return out;
}

namespace {

void check_oracle_budget(const KPoly& p, const std::vector<unsigned>& n_list, const EngineConfig& config) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "oracle of zero polynomial");
  for (unsigned n : n_list) {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "oracle exponents must be >= 1");
    require_budget(p.degree() * static_cast<int>(n), config, "oracle");
  }
}

unsigned count_factors(const FieldPtr& field, const KPoly& p, unsigned n) {
  return factor_over_K(field, substitute_power(p, n)).count();
}

}  // namespace

std::vector<unsigned> oracle_factor_counts_serial(const FieldPtr& field, const KPoly& p,
                                                  const std::vector<unsigned>& n_list, const EngineConfig& config) {
  check_oracle_budget(p, n_list, config);
  std::vector<unsigned> out;
  out.reserve(n_list.size());
  for (unsigned n : n_list) out.push_back(count_factors(field, p, n));
  return out;
}

std::vector<unsigned> oracle_factor_counts(const FieldPtr& field, const KPoly& p, const std::vector<unsigned>& n_list,
                                           const EngineConfig& config) {
  check_oracle_budget(p, n_list, config);
  const long count = static_cast<long>(n_list.size());
  std::vector<unsigned> out(n_list.size(), 0);
  std::vector<std::exception_ptr> errors(n_list.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    try {
      out[i] = count_factors(field, p, n_list[i]);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace qrank

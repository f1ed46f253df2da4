#include "qrank/classify.hpp"

#include <cstdlib>
#include <numeric>

namespace qrank {

namespace {

void require_positive(const Rational& x, const char* name) {
  if (sgn(x) <= 0) throw Error(ErrorKind::NonPositive, std::string(name) + " must be positive");
}

void require_nonzero_index(const Rational& q) {
  if (sgn(q) == 0) throw Error(ErrorKind::ZeroIndex, "fixed-field index must be nonzero");
}

}  // namespace

Rational degree_ratio(const CorrespondenceDegrees& d) {
  if (d.deg_pi < 1 || d.deg_rho < 1) throw Error(ErrorKind::NonPositive, "projection degrees must be >= 1");
  Rational r(d.deg_rho, d.deg_pi);
  r.canonicalize();
  return r;
}

Rational combine(const Rational& r, const Rational& s) {
  require_positive(r, "degree ratio");
  require_positive(s, "degree ratio");
  return r * s;
}

bool subgroup_constraint(const Rational& x, unsigned long m, const Rational& y, unsigned long n) {
  require_positive(x, "x");
  require_positive(y, "y");
  if (m == 0 || n == 0) throw Error(ErrorKind::NonPositive, "exponents must be >= 1");
  return pow(x, m) == pow(y, n);
}

unsigned long rationality_exponent(const Rational& x0) {
  require_positive(x0, "degree ratio");
  if (x0 == 1) throw Error(ErrorKind::RatioOne, "degree ratio 1 has no rationality exponent");
  long g = 0;
  for (const auto& [p, e] : exponent_vector(x0)) g = std::gcd(g, std::labs(e));
  return static_cast<unsigned long>(g);
}

std::optional<unsigned long> rank_bound_from_ratio(const Rational& x0) {
  require_positive(x0, "degree ratio");
  if (x0 == 1) return std::nullopt;
  return rationality_exponent(x0);
}

RankReport fixed_field_rank(const FixedFieldQuery& q) {
  require_nonzero_index(q.q0);
  if (q.characteristic != 0 && !is_probable_prime(Integer(q.characteristic)))
    throw Error(ErrorKind::InvalidArgument, "characteristic must be 0 or a prime");
  RankReport r;
  r.method = RankReport::Method::FixedFieldRule;
  if (q.m == 0) {
    r.kind = RankReport::Kind::Undefined;
    return r;
  }
  if (q.characteristic == 0)
    throw Error(ErrorKind::FrobeniusInCharZero, "Frobenius power needs positive characteristic");
  r.kind = RankReport::Kind::Finite;
  r.value = static_cast<unsigned long>(std::labs(q.m));
  return r;
}

bool fixed_field_subfield(const Rational& q, const Rational& q_prime) {
  require_nonzero_index(q);
  require_nonzero_index(q_prime);
  const Rational ratio = q_prime / q;
  return ratio.get_den() == 1;
}

unsigned long intersection_degree(const Rational& q, unsigned long m) {
  require_nonzero_index(q);
  if (m == 0) throw Error(ErrorKind::NonPositive, "m must be >= 1");
  return m;
}

}  // namespace qrank

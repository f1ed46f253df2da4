#pragma once

// Shared builders, seeded generators and independent oracles for the tests.

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <random>
#include <vector>

#include "qrank/classify.hpp"
#include "qrank/groups.hpp"
#include "qrank/hereditary.hpp"
#include "qrank/numfield.hpp"

namespace testing {

using namespace qrank;

inline QPoly qp(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return QPoly(std::move(v));
}

inline QPoly qp(const std::vector<long>& c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return QPoly(std::move(v));
}

inline NfElement el(const FieldPtr& f, std::initializer_list<long> coords) {
  std::vector<Rational> v;
  for (long x : coords) v.emplace_back(x);
  return NfElement(f, v);
}

inline KPoly kp(const FieldPtr& f, std::initializer_list<long> c) { return embed(f, qp(c)); }

inline KPoly kp(const FieldPtr& f, std::initializer_list<NfElement> c) {
  std::vector<NfElement> v;
  for (const auto& x : c) v.push_back(x.field() ? x : NfElement(f, x.value()));
  return KPoly(std::move(v));
}

inline FieldPtr QQ() { return NumberField::rationals(); }
inline FieldPtr gaussian() { return NumberField::make(qp({1, 0, 1})); }
inline FieldPtr sqrt2() { return NumberField::make(qp({-2, 0, 1})); }
inline FieldPtr sqrt3() { return NumberField::make(qp({-3, 0, 1})); }
inline FieldPtr sqrt_m3() { return NumberField::make(qp({3, 0, 1})); }

inline CompanionPresentation pres(const FieldPtr& f, std::initializer_list<long> c) {
  return CompanionPresentation::from_char_poly(f, kp(f, c));
}

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline Rational random_rational(Rng& rng, long num_range, long den_max) {
  Rational r(uniform(rng, -num_range, num_range), uniform(rng, 1, den_max));
  r.canonicalize();
  return r;
}

inline QPoly random_monic(Rng& rng, int degree, long range) {
  std::vector<Rational> v;
  for (int i = 0; i < degree; ++i) v.emplace_back(uniform(rng, -range, range));
  v.emplace_back(1);
  return QPoly(std::move(v));
}

inline QPoly random_poly(Rng& rng, int degree, long range) {
  std::vector<Rational> v;
  for (int i = 0; i <= degree; ++i) v.push_back(random_rational(rng, range, 3));
  if (sgn(v.back()) == 0) v.back() = 1;
  return QPoly(std::move(v));
}

inline NfElement random_element(Rng& rng, const FieldPtr& f, long range) {
  std::vector<Rational> v;
  for (int i = 0; i < f->degree(); ++i) v.emplace_back(uniform(rng, -range, range));
  return NfElement(f, v);
}

inline KPoly random_monic_k(Rng& rng, const FieldPtr& f, int degree, long range) {
  std::vector<NfElement> v;
  for (int i = 0; i < degree; ++i) v.push_back(random_element(rng, f, range));
  v.emplace_back(f, QPoly::constant(Rational(1)));
  return KPoly(std::move(v));
}

// ---- independent oracles ----

/// All divisors of |n| > 0 by trial division.
inline std::vector<Integer> divisors(const Integer& n_in) {
  Integer n = abs(n_in);
  std::vector<Integer> out;
  for (Integer d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  return out;
}

/// Rational roots of a nonzero polynomial by the rational root theorem.
inline std::vector<Rational> rational_roots(const QPoly& p) {
  std::vector<Integer> z = primitive_integer_part(p);
  std::size_t low = 0;
  std::vector<Rational> out;
  while (z[low] == 0) ++low;
  if (low > 0) out.emplace_back(0);
  for (const auto& a : divisors(z[low]))
    for (const auto& b : divisors(z.back()))
      for (int s : {1, -1}) {
        Rational r(a * s, b);
        r.canonicalize();
        if (sgn(p(r)) == 0 && std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
      }
  return out;
}

/// Irreducibility over Q of a polynomial of degree <= 3, by the rational root test.
inline bool small_degree_irreducible(const QPoly& p) {
  if (p.degree() < 1 || p.degree() > 3) throw std::logic_error("oracle only handles degree 1..3");
  return p.degree() == 1 || rational_roots(p).empty();
}

/// Eisenstein criterion at some prime dividing the constant term.
inline bool eisenstein(const QPoly& p) {
  const std::vector<Integer> z = primitive_integer_part(p);
  if (z[0] == 0) return false;
  Integer c = abs(z[0]);
  for (Integer q = 2; q <= c; ++q) {
    if (c % q != 0) continue;
    while (c % q == 0) c /= q;
    bool ok = z.back() % q != 0 && z[0] % (q * q) != 0;
    for (std::size_t i = 0; ok && i + 1 < z.size(); ++i) ok = z[i] % q == 0;
    if (ok) return true;
  }
  return false;
}

/// Cyclotomic polynomial by repeated exact division.
inline QPoly cyclotomic(unsigned n) {
  QPoly p = substitute_power(qp({-1, 1}), n);
  for (unsigned d = 1; d < n; ++d)
    if (n % d == 0) p = exact_div(p, cyclotomic(d));
  return p;
}

/// Determinant over Q by Gaussian elimination.
inline Rational determinant(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t r = c;
    while (r < n && sgn(a[r][c]) == 0) ++r;
    if (r == n) return 0;
    if (r != c) {
      std::swap(a[r], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      const Rational f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return det;
}

/// Resultant as the Sylvester determinant.
inline Rational sylvester_resultant(const QPoly& f, const QPoly& g) {
  const int m = f.degree(), n = g.degree();
  const int size = m + n;
  std::vector<std::vector<Rational>> s(size, std::vector<Rational>(size, Rational(0)));
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) s[r][r + i] = f.coeff(m - i);
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) s[n + r][r + i] = g.coeff(n - i);
  return determinant(s);
}

inline std::optional<Rational> rational_sqrt(const Rational& x) {
  if (sgn(x) < 0) return std::nullopt;
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), x.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), x.get_den_mpz_t());
  if (n * n != x.get_num() || d * d != x.get_den()) return std::nullopt;
  return Rational(n, d);
}

/// c is a square in Q(sqrt D) = Q[t]/(t^2 - D): solves (u + v t)^2 = a + b t,
/// i.e. u^2 + D v^2 = a and 2 u v = b, directly.
inline bool quadratic_field_square(const FieldPtr& f, const NfElement& c) {
  const Rational D = -f->min_poly().coeff(0);
  const auto co = c.coords();
  const Rational a = co[0], b = co[1];
  if (sgn(b) == 0) return rational_sqrt(a).has_value() || rational_sqrt(a / D).has_value();
  // u^2 - D v^2 = +-s with s^2 = a^2 - D b^2
  const auto s = rational_sqrt(a * a - D * b * b);
  if (!s) return false;
  for (const Rational& u2 : {Rational((a + *s) / 2), Rational((a - *s) / 2)}) {
    const auto u = rational_sqrt(u2);
    if (!u || sgn(*u) == 0) continue;
    const Rational v = b / (2 * *u);
    if (*u * *u + D * v * v == a) return true;
  }
  return false;
}

/// Monic irreducible over Q with a certificate independent of factor_over_Q:
/// linear, quadratic or cubic without rational roots, or Eisenstein.
inline QPoly random_certified_irreducible(Rng& rng, int max_degree, long range) {
  for (;;) {
    const int d = static_cast<int>(uniform(rng, 1, max_degree));
    QPoly p = random_monic(rng, d, range);
    if (sgn(p.coeff(0)) == 0) continue;
    if (d <= 3 ? small_degree_irreducible(p) : eisenstein(p)) return p;
  }
}

/// Monic irreducible over a quadratic field K = Q(sqrt D): linear, or quadratic
/// whose discriminant is not a square in K.
inline KPoly random_certified_irreducible_k(Rng& rng, const FieldPtr& f, long range) {
  for (;;) {
    KPoly p = random_monic_k(rng, f, static_cast<int>(uniform(rng, 1, 2)), range);
    if (p.coeffs()[0].is_zero()) continue;
    if (p.degree() == 1) return p;
    const NfElement& b = p.coeffs()[1];
    const NfElement& c = p.coeffs()[0];
    if (!quadratic_field_square(f, b * b - NfElement(4) * c)) return p;
  }
}

template <class F>
bool same_factor_multiset(std::vector<std::pair<Polynomial<F>, unsigned>> got, std::vector<Polynomial<F>> want) {
  std::vector<Polynomial<F>> flat;
  for (auto& [f, e] : got)
    for (unsigned k = 0; k < e; ++k) flat.push_back(f);
  if (flat.size() != want.size()) return false;
  for (auto& w : want) w = monic(w);
  for (const auto& f : flat) {
    auto it = std::find(want.begin(), want.end(), f);
    if (it == want.end()) return false;
    want.erase(it);
  }
  return true;
}

}  // namespace testing

#pragma once

// Dense univariate polynomials over an exact field.
//
// The scalar type F must be constructible from int, support the field
// operations + - * / and unary minus, compare with ==, and provide a free
// function is_zero(const F&). Rational and NfElement both qualify.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <tuple>
#include <utility>
#include <vector>

#include "qrank/arith.hpp"
#include "qrank/error.hpp"

namespace qrank {

namespace detail {
template <class F>
bool scalar_is_zero(const F& x) {
  return is_zero(x);
}
}  // namespace detail

template <class F>
class Polynomial {
 public:
  using Scalar = F;

  Polynomial() = default;
  explicit Polynomial(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<F> coeffs) : c_(coeffs) { trim(); }

  static Polynomial constant(F c) { return Polynomial(std::vector<F>{std::move(c)}); }
  static Polynomial monomial(F c, std::size_t deg) {
    std::vector<F> v(deg + 1, F(0));
    v[deg] = std::move(c);
    return Polynomial(std::move(v));
  }
  static Polynomial x() { return monomial(F(1), 1); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<F>& coeffs() const { return c_; }
  F coeff(std::size_t i) const { return i < c_.size() ? c_[i] : F(0); }
  const F& leading() const {
    if (c_.empty()) throw Error(ErrorKind::ZeroPolynomial, "leading coefficient of zero polynomial");
    return c_.back();
  }
  bool is_monic() const { return !c_.empty() && c_.back() == F(1); }

  F operator()(const F& at) const {
    F acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a) {
    std::vector<F> v;
    v.reserve(a.c_.size());
    for (const auto& c : a.c_) v.push_back(-c);
    return Polynomial(std::move(v));
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<F> v(a.c_.size() + b.c_.size() - 1, F(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (detail::scalar_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(v));
  }
  friend Polynomial operator*(const F& s, const Polynomial& a) {
    std::vector<F> v;
    v.reserve(a.c_.size());
    for (const auto& c : a.c_) v.push_back(s * c);
    return Polynomial(std::move(v));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    os << '[';
    for (std::size_t i = 0; i < p.c_.size(); ++i) os << (i ? ", " : "") << p.c_[i];
    return os << ']';
  }

 private:
  void trim() {
    while (!c_.empty() && detail::scalar_is_zero(c_.back())) c_.pop_back();
  }

  std::vector<F> c_;
};

/// (quotient, remainder) with p = q*quot + rem and deg rem < deg q.
template <class F>
std::pair<Polynomial<F>, Polynomial<F>> divrem(const Polynomial<F>& p, const Polynomial<F>& q) {
  if (q.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  if (p.degree() < q.degree()) return {Polynomial<F>{}, p};
  std::vector<F> rem = p.coeffs();
  std::vector<F> quot(p.degree() - q.degree() + 1, F(0));
  const F inv_lead = F(1) / q.leading();
  const auto& qc = q.coeffs();
  const int dq = q.degree();
  for (int i = p.degree(); i >= dq; --i) {
    if (detail::scalar_is_zero(rem[i])) continue;
    F factor = rem[i] * inv_lead;
    for (int j = 0; j <= dq; ++j) rem[i - dq + j] = rem[i - dq + j] - factor * qc[j];
    quot[i - dq] = std::move(factor);
  }
  rem.resize(dq);
  return {Polynomial<F>(std::move(quot)), Polynomial<F>(std::move(rem))};
}

template <class F>
Polynomial<F> operator%(const Polynomial<F>& p, const Polynomial<F>& q) {
  return divrem(p, q).second;
}

/// Exact quotient; throws if q does not divide p.
template <class F>
Polynomial<F> exact_div(const Polynomial<F>& p, const Polynomial<F>& q) {
  auto [quot, rem] = divrem(p, q);
  if (!rem.is_zero()) throw Error(ErrorKind::InvalidArgument, "polynomial division is not exact");
  return quot;
}

template <class F>
bool divides(const Polynomial<F>& d, const Polynomial<F>& p) {
  return divrem(p, d).second.is_zero();
}

template <class F>
Polynomial<F> monic(const Polynomial<F>& p) {
  if (p.is_zero()) return p;
  return (F(1) / p.leading()) * p;
}

/// Monic gcd.
template <class F>
Polynomial<F> gcd(Polynomial<F> a, Polynomial<F> b) {
  if (a.is_zero() && b.is_zero()) throw Error(ErrorKind::BothZero, "gcd of two zero polynomials");
  while (!b.is_zero()) {
    Polynomial<F> r = a % b;
    a = std::move(b);
    b = monic(r);
  }
  return monic(a);
}

/// (g, s, t) with s*a + t*b = g, g monic.
template <class F>
std::tuple<Polynomial<F>, Polynomial<F>, Polynomial<F>> xgcd(const Polynomial<F>& a, const Polynomial<F>& b) {
  if (a.is_zero() && b.is_zero()) throw Error(ErrorKind::BothZero, "xgcd of two zero polynomials");
  Polynomial<F> r0 = a, r1 = b;
  Polynomial<F> s0 = Polynomial<F>::constant(F(1)), s1;
  Polynomial<F> t0, t1 = Polynomial<F>::constant(F(1));
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Polynomial<F> s2 = s0 - q * s1;
    Polynomial<F> t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const F inv = F(1) / r0.leading();
  return {inv * r0, inv * s0, inv * t0};
}

template <class F>
Polynomial<F> derivative(const Polynomial<F>& p) {
  if (p.degree() < 1) return {};
  std::vector<F> v;
  v.reserve(p.degree());
  for (int i = 1; i <= p.degree(); ++i) v.push_back(F(i) * p.coeffs()[i]);
  return Polynomial<F>(std::move(v));
}

/// p(x^n).
template <class F>
Polynomial<F> substitute_power(const Polynomial<F>& p, unsigned n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "substitute_power requires n >= 1");
  if (p.is_zero() || n == 1) return p;
  std::vector<F> v(static_cast<std::size_t>(p.degree()) * n + 1, F(0));
  for (int i = 0; i <= p.degree(); ++i) v[static_cast<std::size_t>(i) * n] = p.coeffs()[i];
  return Polynomial<F>(std::move(v));
}

/// p(x + c).
template <class F>
Polynomial<F> taylor_shift(const Polynomial<F>& p, const F& c) {
  const Polynomial<F> lin({c, F(1)});
  Polynomial<F> acc;
  for (int i = p.degree(); i >= 0; --i) acc = acc * lin + Polynomial<F>::constant(p.coeffs()[i]);
  return acc;
}

template <class F>
Polynomial<F> pow(Polynomial<F> base, unsigned long e) {
  Polynomial<F> acc = Polynomial<F>::constant(F(1));
  while (e) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

/// base^e mod m.
template <class F>
Polynomial<F> powmod(Polynomial<F> base, unsigned long e, const Polynomial<F>& m) {
  Polynomial<F> acc = Polynomial<F>::constant(F(1)) % m;
  base = base % m;
  while (e) {
    if (e & 1) acc = (acc * base) % m;
    e >>= 1;
    if (e) base = (base * base) % m;
  }
  return acc;
}

/// Monic p / gcd(p, p'); characteristic zero.
template <class F>
Polynomial<F> squarefree_part(const Polynomial<F>& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "squarefree_part of zero polynomial");
  if (p.degree() == 0) return Polynomial<F>::constant(F(1));
  return monic(exact_div(p, gcd(p, derivative(p))));
}

template <class F>
bool is_squarefree(const Polynomial<F>& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "is_squarefree of zero polynomial");
  return p.degree() < 1 || gcd(p, derivative(p)).degree() == 0;
}

/// Yun's algorithm: monic squarefree, pairwise coprime a_i with
/// monic(p) = prod a_i^i. Only nonconstant parts are returned.
template <class F>
std::vector<std::pair<Polynomial<F>, unsigned>> squarefree_decomposition(const Polynomial<F>& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "squarefree decomposition of zero polynomial");
  std::vector<std::pair<Polynomial<F>, unsigned>> out;
  if (p.degree() < 1) return out;
  Polynomial<F> f = monic(p);
  Polynomial<F> fp = derivative(f);
  Polynomial<F> a = gcd(f, fp);
  Polynomial<F> b = exact_div(f, a);
  Polynomial<F> c = exact_div(fp, a);
  Polynomial<F> d = c - derivative(b);
  for (unsigned i = 1; b.degree() >= 1; ++i) {
    Polynomial<F> g = gcd(b, d);
    if (g.degree() >= 1) out.emplace_back(g, i);
    b = exact_div(b, g);
    c = exact_div(d, g);
    d = c - derivative(b);
  }
  return out;
}

/// Resultant over a field via the Euclidean remainder sequence.
template <class F>
F resultant(Polynomial<F> a, Polynomial<F> b) {
  if (a.is_zero() || b.is_zero()) return F(0);
  F acc(1);
  while (true) {
    const int da = a.degree(), db = b.degree();
    if (db == 0) {
      F lb = b.leading();
      F r(1);
      for (int i = 0; i < da; ++i) r = r * lb;
      return acc * r;
    }
    if (da < db) {
      if ((da % 2 == 1) && (db % 2 == 1)) acc = -acc;
      std::swap(a, b);
      continue;
    }
    Polynomial<F> r = a % b;
    if (r.is_zero()) return F(0);
    // res(a, b) = (-1)^{da db} lc(b)^{da - dr} res(b, r)
    if ((da % 2 == 1) && (db % 2 == 1)) acc = -acc;
    F lb = b.leading();
    for (int i = 0; i < da - r.degree(); ++i) acc = acc * lb;
    a = std::move(b);
    b = std::move(r);
  }
}

/// Companion matrix in the convention P(x) = x^m - sum_j c_j x^{j-1}, where
/// last_row = (c_1, ..., c_m). Superdiagonal entries are 1, everything else
/// outside the last row is 0.
template <class F>
struct CompanionMatrix {
  std::vector<F> last_row;

  std::size_t size() const { return last_row.size(); }

  /// Entry (i, j), 1-based.
  F entry(std::size_t i, std::size_t j) const {
    if (i == size()) return last_row[j - 1];
    return j == i + 1 ? F(1) : F(0);
  }

  friend bool operator==(const CompanionMatrix& a, const CompanionMatrix& b) {
    return a.last_row == b.last_row;
  }
};

template <class F>
CompanionMatrix<F> companion_of(const Polynomial<F>& p) {
  if (p.degree() < 1) throw Error(ErrorKind::InvalidArgument, "companion matrix needs degree >= 1");
  if (!p.is_monic()) throw Error(ErrorKind::NotMonic, "companion matrix needs a monic polynomial");
  CompanionMatrix<F> out;
  out.last_row.reserve(p.degree());
  for (int j = 0; j < p.degree(); ++j) out.last_row.push_back(-p.coeffs()[j]);
  return out;
}

template <class F>
Polynomial<F> charpoly_of(const CompanionMatrix<F>& c) {
  if (c.size() == 0) throw Error(ErrorKind::InvalidArgument, "empty companion matrix");
  std::vector<F> v;
  v.reserve(c.size() + 1);
  for (const auto& e : c.last_row) v.push_back(-e);
  v.push_back(F(1));
  return Polynomial<F>(std::move(v));
}

}  // namespace qrank

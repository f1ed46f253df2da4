#include "qrank/numfield.hpp"

#include <algorithm>

namespace qrank {

FieldPtr NumberField::make(const QPoly& min_poly) {
  if (min_poly.degree() < 1) throw Error(ErrorKind::InvalidArgument, "number field minimal polynomial must have degree >= 1");
  if (!min_poly.is_monic()) throw Error(ErrorKind::NotMonic, "number field minimal polynomial must be monic");
  if (!is_irreducible_over_Q(min_poly))
    throw Error(ErrorKind::NotIrreducible, "number field minimal polynomial is reducible over Q");
  return make_trusted(min_poly);
}

FieldPtr NumberField::rationals() {
  static const FieldPtr q = make_trusted(QPoly::x());
  return q;
}

FieldPtr NumberField::make_trusted(QPoly min_poly) {
  return FieldPtr(new NumberField(std::move(min_poly)));
}

NfElement::NfElement(FieldPtr field, const QPoly& value) : field_(std::move(field)) {
  value_ = field_ ? value % field_->min_poly() : value;
  if (!field_ && value_.degree() > 0)
    throw Error(ErrorKind::InvalidArgument, "non-constant element without a field");
}

NfElement NfElement::generator(const FieldPtr& field) { return NfElement(field, QPoly::x()); }

std::vector<Rational> NfElement::coords() const {
  std::vector<Rational> out = value_.coeffs();
  const std::size_t d = field_ ? static_cast<std::size_t>(field_->degree()) : 1;
  out.resize(std::max(d, out.size()), Rational(0));
  return out;
}

std::optional<Rational> NfElement::as_rational() const {
  if (value_.degree() > 0) return std::nullopt;
  return value_.coeff(0);
}

const FieldPtr& NfElement::common_field(const NfElement& a, const NfElement& b) {
  if (!a.field_) return b.field_;
  if (!b.field_ || a.field_ == b.field_) return a.field_;
  if (!(*a.field_ == *b.field_)) throw Error(ErrorKind::InvalidArgument, "mixing elements of different number fields");
  return a.field_;
}

NfElement operator+(const NfElement& a, const NfElement& b) {
  return NfElement(NfElement::common_field(a, b), a.value_ + b.value_, NfElement::Reduced{});
}

NfElement operator-(const NfElement& a, const NfElement& b) {
  return NfElement(NfElement::common_field(a, b), a.value_ - b.value_, NfElement::Reduced{});
}

NfElement operator*(const NfElement& a, const NfElement& b) {
  const FieldPtr& f = NfElement::common_field(a, b);
  if (a.value_.degree() <= 0 || b.value_.degree() <= 0 || !f)
    return NfElement(f, a.value_ * b.value_, NfElement::Reduced{});
  return NfElement(f, (a.value_ * b.value_) % f->min_poly(), NfElement::Reduced{});
}

NfElement NfElement::inverse() const {
  if (value_.is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero field element");
  if (value_.degree() == 0) return NfElement(field_, QPoly::constant(Rational(1) / value_.coeff(0)), Reduced{});
  auto [g, s, t] = xgcd(value_, field_->min_poly());
  if (g.degree() != 0) throw Error(ErrorKind::DivisionByZero, "element is not invertible");
  return NfElement(field_, s % field_->min_poly(), Reduced{});
}

Rational norm(const NfElement& a) {
  if (!a.field()) return a.value().coeff(0);
  return resultant(a.field()->min_poly(), a.value());
}

namespace {

// Newton interpolation through (i, values[i]), i = 0..n.
QPoly interpolate_at_naturals(std::vector<Rational> values) {
  const std::size_t n = values.size();
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      values[i] = (values[i] - values[i - 1]) / Rational(static_cast<long>(j));
      if (i == j) break;
    }
  QPoly acc;
  for (std::size_t i = n; i-- > 0;) {
    acc = acc * QPoly({Rational(-static_cast<long>(i)), Rational(1)}) + QPoly::constant(values[i]);
  }
  return acc;
}

}  // namespace

QPoly norm_poly(const FieldPtr& field, const KPoly& g) {
  if (g.is_zero()) return {};
  const int d = field->degree();
  if (d == 1) {
    std::vector<Rational> v;
    for (const auto& c : g.coeffs()) v.push_back(norm(NfElement(field, c.value())));
    return QPoly(std::move(v));
  }
  const int deg = g.degree() * d;
  std::vector<Rational> values;
  values.reserve(deg + 1);
  for (int i = 0; i <= deg; ++i) values.push_back(norm(NfElement(field, g(NfElement(i)).value())));
  return interpolate_at_naturals(std::move(values));
}

QPoly charpoly(const NfElement& a) {
  const FieldPtr field = a.field() ? a.field() : NumberField::rationals();
  return norm_poly(field, KPoly({-a, NfElement(1)}));
}

KPoly embed(const FieldPtr& field, const QPoly& p) {
  std::vector<NfElement> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) v.emplace_back(field, QPoly::constant(c));
  return KPoly(std::move(v));
}

std::optional<QPoly> as_rational_poly(const KPoly& p) {
  std::vector<Rational> v;
  for (const auto& c : p.coeffs()) {
    auto r = c.as_rational();
    if (!r) return std::nullopt;
    v.push_back(*r);
  }
  return QPoly(std::move(v));
}

bool canonical_less(const NfElement& a, const NfElement& b) {
  const auto ca = a.coords(), cb = b.coords();
  const std::size_t n = std::max(ca.size(), cb.size());
  for (std::size_t i = n; i-- > 0;) {
    const Rational x = i < ca.size() ? ca[i] : Rational(0);
    const Rational y = i < cb.size() ? cb[i] : Rational(0);
    const int c = cmp(x, y);
    if (c != 0) return c < 0;
  }
  return false;
}

bool canonical_less(const KPoly& a, const KPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    if (canonical_less(a.coeffs()[i], b.coeffs()[i])) return true;
    if (canonical_less(b.coeffs()[i], a.coeffs()[i])) return false;
  }
  return false;
}

KPoly FieldFactorization::expand() const {
  KPoly acc = KPoly::constant(content);
  for (const auto& [f, e] : factors) acc = acc * pow(f, e);
  return acc;
}

unsigned FieldFactorization::count() const {
  unsigned n = 0;
  for (const auto& fe : factors) n += fe.second;
  return n;
}

FieldFactorization factor_over_K(const FieldPtr& field, const KPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "factor_over_K of zero polynomial");
  FieldFactorization out;
  out.content = p.leading();
  if (!out.content.field()) out.content = NfElement(field, out.content.value());

  if (field->degree() == 1) {
    const auto qp = as_rational_poly(p);
    if (!qp) throw Error(ErrorKind::InvalidArgument, "coefficients outside the degree-1 field");
    for (auto& [f, e] : factor_over_Q(*qp).factors) out.factors.emplace_back(embed(field, f), e);
    return out;
  }

  const NfElement theta = NfElement::generator(field);
  for (const auto& [part, mult] : squarefree_decomposition(p)) {
    if (part.degree() == 1) {
      out.factors.emplace_back(part, mult);
      continue;
    }
    long s = 0;
    KPoly shifted;
    QPoly nrm;
    for (;; ++s) {
      shifted = taylor_shift(part, NfElement(Rational(-s)) * theta);
      nrm = norm_poly(field, shifted);
      if (is_squarefree(nrm)) break;
    }
    const NfElement back = NfElement(Rational(s)) * theta;
    for (const auto& [h, e] : factor_over_Q(nrm).factors) {
      KPoly g = gcd(shifted, embed(field, h));
      out.factors.emplace_back(taylor_shift(g, back), mult);
    }
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
    if (canonical_less(a.first, b.first)) return true;
    if (canonical_less(b.first, a.first)) return false;
    return a.second < b.second;
  });
  return out;
}

}  // namespace qrank

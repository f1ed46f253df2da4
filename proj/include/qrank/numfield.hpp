#pragma once

// Number fields Q[t]/(m(t)) and polynomials over them.

#include <memory>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "qrank/arith.hpp"
#include "qrank/factor.hpp"
#include "qrank/poly.hpp"

namespace qrank {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

class NumberField {
 public:
  /// Verifies that min_poly is monic and irreducible over Q.
  static FieldPtr make(const QPoly& min_poly);
  /// Q itself, presented as Q[t]/(t).
  static FieldPtr rationals();
  /// Caller guarantees min_poly is monic irreducible.
  static FieldPtr make_trusted(QPoly min_poly);

  int degree() const { return min_poly_.degree(); }
  const QPoly& min_poly() const { return min_poly_; }

  friend bool operator==(const NumberField& a, const NumberField& b) { return a.min_poly_ == b.min_poly_; }

 private:
  explicit NumberField(QPoly min_poly) : min_poly_(std::move(min_poly)) {}
  QPoly min_poly_;
};

/// Element of a number field in the power basis. An element without a field
/// is a bare rational constant; it combines with elements of any field.
class NfElement {
 public:
  NfElement() = default;
  NfElement(int v) : value_(QPoly::constant(Rational(v))) {}  // NOLINT(google-explicit-constructor)
  NfElement(const Rational& r) : value_(QPoly::constant(r)) {}  // NOLINT(google-explicit-constructor)
  NfElement(FieldPtr field, const QPoly& value);
  NfElement(FieldPtr field, const std::vector<Rational>& coords) : NfElement(std::move(field), QPoly(coords)) {}

  static NfElement generator(const FieldPtr& field);

  const FieldPtr& field() const { return field_; }
  /// Representative of degree < [K:Q].
  const QPoly& value() const { return value_; }
  /// Power-basis coordinates, padded to the field degree.
  std::vector<Rational> coords() const;
  std::optional<Rational> as_rational() const;
  bool is_zero() const { return value_.is_zero(); }

  NfElement inverse() const;

  friend NfElement operator+(const NfElement& a, const NfElement& b);
  friend NfElement operator-(const NfElement& a, const NfElement& b);
  friend NfElement operator*(const NfElement& a, const NfElement& b);
  friend NfElement operator/(const NfElement& a, const NfElement& b) { return a * b.inverse(); }
  friend NfElement operator-(const NfElement& a) { return NfElement(a.field_, -a.value_, Reduced{}); }
  friend bool operator==(const NfElement& a, const NfElement& b) { return a.value_ == b.value_; }
  friend bool operator!=(const NfElement& a, const NfElement& b) { return !(a == b); }
  friend std::ostream& operator<<(std::ostream& os, const NfElement& a) { return os << a.value_; }

 private:
  struct Reduced {};
  NfElement(FieldPtr field, QPoly value, Reduced) : field_(std::move(field)), value_(std::move(value)) {}
  static const FieldPtr& common_field(const NfElement& a, const NfElement& b);

  FieldPtr field_;
  QPoly value_;
};

inline bool is_zero(const NfElement& a) { return a.is_zero(); }

using KPoly = Polynomial<NfElement>;

/// N_{K/Q}(a). A field-less element is treated as an element of Q.
Rational norm(const NfElement& a);

/// Characteristic polynomial of multiplication by a over Q (degree [K:Q]).
QPoly charpoly(const NfElement& a);

/// prod over embeddings of g^sigma, a polynomial over Q of degree deg(g)*[K:Q].
QPoly norm_poly(const FieldPtr& field, const KPoly& g);

KPoly embed(const FieldPtr& field, const QPoly& p);
/// Some polynomial with all coefficients rational, or nullopt.
std::optional<QPoly> as_rational_poly(const KPoly& p);

bool canonical_less(const NfElement& a, const NfElement& b);
bool canonical_less(const KPoly& a, const KPoly& b);

struct FieldFactorization {
  NfElement content;
  /// Monic irreducible factors over K with multiplicities, canonically sorted.
  std::vector<std::pair<KPoly, unsigned>> factors;

  KPoly expand() const;
  unsigned count() const;
};

/// Trager's norm method over K; reduces to factor_over_Q when [K:Q] = 1.
FieldFactorization factor_over_K(const FieldPtr& field, const KPoly& p);

/// A single extension L = Q[u]/(g) of Q with L = K(alpha), alpha a root of Q.
struct Flattening {
  FieldPtr field;
  /// Image of K's generator in L.
  NfElement generator_image;
  /// Image of the root alpha.
  NfElement root;
  /// u = alpha + shift * theta.
  long shift = 0;

  NfElement embed(const NfElement& k_element) const;
};

Flattening flatten(const FieldPtr& field, const KPoly& irreducible);

/// True iff x^n - c has a root in L. Rational norm and residue filters prune
/// the negative cases; everything else is decided by factoring x^n - c over L.
bool has_nth_root(const FieldPtr& field, const NfElement& c, unsigned long n);

bool is_pth_power(const FieldPtr& field, const NfElement& a, unsigned long p);

/// a in -4 L^4.
bool in_minus4_fourth_powers(const FieldPtr& field, const NfElement& a);

/// Certified upper bound on the absolute logarithmic Weil height.
double weil_height(const NfElement& a);

}  // namespace qrank

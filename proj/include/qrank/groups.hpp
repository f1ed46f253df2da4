#pragma once

// Definable groups G = {g : (sigma g, ..., sigma^m g) = M * (g, ..., sigma^{m-1} g)}
// given by a companion matrix M over a quasiendomorphism ring R (a number
// field). All computations depend only on R and the characteristic
// polynomial P of M.

#include <optional>
#include <vector>

#include "qrank/config.hpp"
#include "qrank/hereditary.hpp"
#include "qrank/numfield.hpp"

namespace qrank {

enum class Ambient { Multiplicative, CMElliptic };

struct CompanionPresentation {
  FieldPtr ring;
  KPoly char_poly;
  Ambient ambient = Ambient::Multiplicative;

  /// Requires P monic of degree >= 1; coefficients are moved into ring.
  static CompanionPresentation from_char_poly(FieldPtr ring, const KPoly& p, Ambient ambient = Ambient::Multiplicative);
  static CompanionPresentation from_last_row(FieldPtr ring, const std::vector<NfElement>& last_row,
                                             Ambient ambient = Ambient::Multiplicative);

  int sigma_degree() const { return char_poly.degree(); }
  CompanionMatrix<NfElement> companion() const { return companion_of(char_poly); }

  friend bool operator==(const CompanionPresentation& a, const CompanionPresentation& b) {
    return *a.ring == *b.ring && a.char_poly == b.char_poly && a.ambient == b.ambient;
  }
};

struct ValidationReport {
  bool irreducible_over_R = false;
  bool root_of_unity_eigenvalue = false;
  /// Necessary conditions only.
  bool minimal_necessary = false;
  bool one_based_necessary = false;

  bool passed() const { return minimal_necessary && one_based_necessary; }
};

/// Throws ZeroConstantTerm when M is singular.
ValidationReport validate(const CompanionPresentation& g);

/// Presentation of G viewed in the reduct with tau^n = sigma: P(x^n), size m n.
/// Checks the last-row entry law of the prolonged companion matrix.
CompanionPresentation prolong(const CompanionPresentation& g, unsigned n);

/// Last row of `prolonged` carries M_{mj} at column (j-1)n+1 and 0 elsewhere.
bool entry_law_holds(const CompanionMatrix<NfElement>& base, const CompanionMatrix<NfElement>& prolonged, unsigned n);

struct RankReport {
  enum class Kind { Finite, Infinite, Undefined };
  enum class Method { HereditaryFactorCount, FixedFieldRule, DegreeRatioBoundOnly };

  Kind kind = Kind::Finite;
  unsigned long value = 0;  // meaningful for Finite
  Method method = Method::HereditaryFactorCount;
  std::optional<HereditaryFactorization> witness;
  std::optional<unsigned long> bound;  // for DegreeRatioBoundOnly
};

/// Number of irreducible factors, with multiplicity, of P(x^n) over R.
unsigned rank_in_reduct(const CompanionPresentation& g, unsigned n, const EngineConfig& config = {});

RankReport qacfa_rank(const CompanionPresentation& g, const EngineConfig& config = {});

/// Every root of q is a root of P(x^n).
bool eigenvalue_compatible(const KPoly& q, const CompanionPresentation& g, unsigned n);

/// Sorted degrees of the irreducible factors of P(x^n) over R.
std::vector<int> subgroup_degree_spectrum(const CompanionPresentation& g, unsigned n, const EngineConfig& config = {});

const char* to_string(Ambient a);
const char* to_string(RankReport::Kind k);
const char* to_string(RankReport::Method m);

}  // namespace qrank

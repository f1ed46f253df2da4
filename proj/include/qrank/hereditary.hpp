#pragma once

// Hereditary irreducibility: P is hereditarily irreducible over K when P(x^n)
// is irreducible over K for every n >= 1.
//
// For P irreducible over K with a root alpha, P(x^n) is irreducible over K
// exactly when x^n - alpha is irreducible over L = K(alpha). Capelli's
// criterion reduces that to: alpha is not a p-th power in L for any prime p,
// and alpha is not in -4 L^4. Only finitely many p need checking, since
// alpha = beta^p forces h(beta) = h(alpha) / p while h(beta) is bounded below.

#include <optional>
#include <string>
#include <vector>

#include "qrank/config.hpp"
#include "qrank/numfield.hpp"

namespace qrank {

struct Obstruction {
  enum class Kind { PthPower, MinusFour };
  Kind kind = Kind::PthPower;
  unsigned long prime = 0;  // set for PthPower

  /// n such that Q(x^n) splits.
  unsigned long exponent() const { return kind == Kind::PthPower ? prime : 4; }

  friend bool operator==(const Obstruction& a, const Obstruction& b) {
    return a.kind == b.kind && a.prime == b.prime;
  }
};

std::string to_string(const Obstruction& o);

/// Full record of one Capelli analysis.
struct CapelliAnalysis {
  std::optional<Obstruction> obstruction;
  /// Every prime <= prime_bound was tested (up to the obstruction, if any).
  unsigned long prime_bound = 0;
  std::vector<unsigned long> primes_tested;
  bool minus_four_tested = false;
  /// [L:Q] of the flattened root field.
  int root_field_degree = 0;
  /// Height data behind prime_bound; for [L:Q] = 1 the bound is the gcd of
  /// the root's prime exponents instead.
  double height_upper = 0;
  double height_floor = 0;
};

/// Lower bound on h(beta) for every nonzero beta of degree <= d that is not
/// a root of unity.
double height_floor(int d);

bool has_root_of_unity_root(const FieldPtr& field, const KPoly& p);

/// Preconditions (checked): q irreducible over K, q(0) != 0, no root of q is
/// a root of unity.
CapelliAnalysis capelli_analysis(const FieldPtr& field, const KPoly& q, const EngineConfig& config = {});

std::optional<Obstruction> capelli_obstruction(const FieldPtr& field, const KPoly& q,
                                               const EngineConfig& config = {});

struct HereditaryCertificate {
  /// The certified hereditarily irreducible polynomial Q over K.
  KPoly base;
  /// The reported factor is Q(x^lift_exponent).
  unsigned long lift_exponent = 1;
  CapelliAnalysis analysis;
};

/// One split in the worklist: Q(x^n) over K with n the obstruction exponent.
struct SplitStep {
  KPoly parent;
  unsigned long depth_exponent = 1;  // parent divides P(x^depth_exponent)
  Obstruction obstruction;
  std::vector<KPoly> children;
};

struct HereditaryFactorization {
  FieldPtr field;
  KPoly input;
  unsigned long exponent = 1;  // N
  std::vector<KPoly> factors;
  std::vector<HereditaryCertificate> certificates;  // parallel to factors
  std::vector<SplitStep> splits;
};

/// Preconditions as for capelli_analysis on p. Throws BudgetExceeded when a
/// polynomial of degree above config.max_degree would be needed.
HereditaryFactorization hereditary_factorization(const FieldPtr& field, const KPoly& p,
                                                 const EngineConfig& config = {});

/// Re-runs the recorded prime and -4L^4 tests; true when every verdict is
/// reproduced.
bool replay_certificate(const FieldPtr& field, const HereditaryCertificate& cert);

/// Counts of irreducible factors (with multiplicity) of P(x^n) over K, one per
/// n, computed only through factor_over_K. Parallel over n.
std::vector<unsigned> oracle_factor_counts(const FieldPtr& field, const KPoly& p, const std::vector<unsigned>& n_list,
                                           const EngineConfig& config = {});

/// Serial reference implementation of oracle_factor_counts.
std::vector<unsigned> oracle_factor_counts_serial(const FieldPtr& field, const KPoly& p,
                                                  const std::vector<unsigned>& n_list,
                                                  const EngineConfig& config = {});

}  // namespace qrank

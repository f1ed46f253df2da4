#pragma once

// Factorization over the rationals: squarefree split, factorization modulo a
// good prime, Hensel lifting and exhaustive recombination (Zassenhaus).

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qrank/arith.hpp"
#include "qrank/poly.hpp"

namespace qrank {

using QPoly = Polynomial<Rational>;

struct RationalFactorization {
  Rational content;
  /// Monic irreducible factors with multiplicities, canonically sorted.
  std::vector<std::pair<QPoly, unsigned>> factors;

  QPoly expand() const;
  /// Number of irreducible factors counted with multiplicity.
  unsigned count() const;
};

RationalFactorization factor_over_Q(const QPoly& p);

bool is_irreducible_over_Q(const QPoly& p);

/// Canonical order on polynomials: degree first, then coefficients from the
/// top down.
bool canonical_less(const QPoly& a, const QPoly& b);

/// Degrees of the irreducible factors of f mod p (sorted), or nullopt when p
/// divides a denominator or the leading coefficient, or f is not squarefree
/// mod p.
std::optional<std::vector<int>> modular_degree_pattern(const QPoly& f, std::uint64_t p);

/// Primitive integer polynomial with positive leading coefficient that is a
/// rational multiple of p.
std::vector<Integer> primitive_integer_part(const QPoly& p);

}  // namespace qrank

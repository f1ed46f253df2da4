#pragma once

// Degree ratios of algebraic group correspondences and rank rules for fixed
// fields of sigma_q composed with Frobenius powers.

#include <optional>

#include "qrank/arith.hpp"
#include "qrank/groups.hpp"

namespace qrank {

struct CorrespondenceDegrees {
  Integer deg_pi = 1;
  Integer deg_rho = 1;
};

/// deg(rho) / deg(pi).
Rational degree_ratio(const CorrespondenceDegrees& d);

/// Degree ratio of a product or composite.
Rational combine(const Rational& r, const Rational& s);

/// x^m == y^n.
bool subgroup_constraint(const Rational& x, unsigned long m, const Rational& y, unsigned long n);

/// Largest S with an S-th root of x0 in Q. Throws RatioOne for x0 = 1.
unsigned long rationality_exponent(const Rational& x0);

/// Upper bound on the rank from a degree ratio; absent for x0 = 1.
std::optional<unsigned long> rank_bound_from_ratio(const Rational& x0);

struct FixedFieldQuery {
  Rational q0;
  long m = 0;
  unsigned long characteristic = 0;  // 0 or prime
};

RankReport fixed_field_rank(const FixedFieldQuery& q);

/// F_q inside F_{q'}: q'/q is an integer.
bool fixed_field_subfield(const Rational& q, const Rational& q_prime);

/// [F_q^alg intersected with F_{mq} : F_q].
unsigned long intersection_degree(const Rational& q, unsigned long m);

}  // namespace qrank

#pragma once

// Exact integer and rational arithmetic on top of GMP.

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qrank/error.hpp"

namespace qrank {

using Integer = mpz_class;
using Rational = mpq_class;

/// prime -> exponent (>= 1)
using FactorMap = std::map<Integer, unsigned long>;
/// prime -> signed exponent; denominator primes carry negative exponents
using ExponentVector = std::map<Integer, long>;

inline bool is_zero(const Integer& x) { return sgn(x) == 0; }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

/// Canonical "p/q" or "p".
std::string to_string(const Rational& x);
/// Accepts optional sign, digits, optional "/digits"; reduces to canonical form.
Rational parse_rational(const std::string& text);

Rational pow(const Rational& base, unsigned long e);

bool is_probable_prime(const Integer& n);

/// Trial division to 10^6, then Brent-Pollard rho on the cofactor.
FactorMap factor_integer(const Integer& n);

ExponentVector exponent_vector(const Rational& x);

/// r with r^n == x when it exists; the positive root for even n.
std::optional<Rational> rational_nth_root(const Rational& x, unsigned long n);

/// Primes in increasing order up to and including `limit`.
std::vector<unsigned long> primes_up_to(unsigned long limit);

}  // namespace qrank

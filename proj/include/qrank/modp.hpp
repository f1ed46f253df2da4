#pragma once

// Polynomials over F_p for word-size odd primes p < 2^31.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace qrank::modp {

/// Coefficients low to high, no trailing zeros; empty means zero.
using Poly = std::vector<std::uint64_t>;

void trim(Poly& a);
int degree(const Poly& a);

std::uint64_t inv(std::uint64_t a, std::uint64_t p);

Poly add(const Poly& a, const Poly& b, std::uint64_t p);
Poly sub(const Poly& a, const Poly& b, std::uint64_t p);
Poly mul(const Poly& a, const Poly& b, std::uint64_t p);
Poly scale(const Poly& a, std::uint64_t s, std::uint64_t p);
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b, std::uint64_t p);
Poly rem(const Poly& a, const Poly& b, std::uint64_t p);
Poly monic(const Poly& a, std::uint64_t p);
Poly gcd(Poly a, Poly b, std::uint64_t p);
/// (g, s, t) with s*a + t*b = g monic.
struct Xgcd {
  Poly g, s, t;
};
Xgcd xgcd(const Poly& a, const Poly& b, std::uint64_t p);
Poly derivative(const Poly& a, std::uint64_t p);
Poly powmod(Poly base, std::uint64_t e, const Poly& m, std::uint64_t p);

/// Monic irreducible factors of a monic squarefree polynomial (p odd).
/// Equal-degree splitting draws from `rng`, so results are deterministic
/// for a fixed seed; the returned list is sorted by degree, then by
/// coefficients from the leading one down.
std::vector<Poly> factor_squarefree(const Poly& f, std::uint64_t p, std::mt19937_64& rng);

}  // namespace qrank::modp

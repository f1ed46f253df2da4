#include "qrank/arith.hpp"

#include <algorithm>
#include <cctype>

namespace qrank {

namespace {

constexpr unsigned long kTrialLimit = 1'000'000;

Integer pollard_brent(const Integer& n, unsigned long c) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  Integer y = 2, x, q = 1, g = 1, ys;
  const Integer cc = c;
  unsigned long r = 1;
  const unsigned long m = 128;
  auto step = [&](Integer& v) {
    v = v * v + cc;
    v %= n;
  };
  do {
    x = y;
    for (unsigned long i = 0; i < r; ++i) step(y);
    unsigned long k = 0;
    do {
      ys = y;
      const unsigned long lim = std::min(m, r - k);
      for (unsigned long i = 0; i < lim; ++i) {
        step(y);
        Integer diff = x - y;
        q = (q * abs(diff)) % n;
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += m;
    } while (k < r && g == 1);
    r *= 2;
  } while (g == 1);
  if (g == n) {
    do {
      step(ys);
      Integer diff = x - ys;
      Integer a = abs(diff);
      mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  return g;
}

void split_composite(const Integer& n, FactorMap& out, unsigned long multiplicity) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    out[n] += multiplicity;
    return;
  }
  for (unsigned long c = 1;; ++c) {
    Integer d = pollard_brent(n, c);
    if (d != 1 && d != n) {
      Integer rest = n / d;
      split_composite(d, out, multiplicity);
      split_composite(rest, out, multiplicity);
      return;
    }
  }
}

}  // namespace

std::string to_string(const Rational& x) { return x.get_str(10); }

Rational parse_rational(const std::string& text) {
  auto digits_ok = [](std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char ch) { return std::isdigit(ch); });
  };
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  const auto slash = body.find('/');
  const bool ok = slash == std::string_view::npos
                      ? digits_ok(body)
                      : digits_ok(body.substr(0, slash)) && digits_ok(body.substr(slash + 1));
  if (!ok) throw Error(ErrorKind::ParseError, "malformed rational '" + text + "'");
  std::string cleaned = text.front() == '+' ? text.substr(1) : text;
  Rational r;
  if (r.set_str(cleaned, 10) != 0) throw Error(ErrorKind::ParseError, "malformed rational '" + text + "'");
  if (sgn(r.get_den()) == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

Rational pow(const Rational& base, unsigned long e) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), e);
  out.canonicalize();
  return out;
}

bool is_probable_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

std::vector<unsigned long> primes_up_to(unsigned long limit) {
  std::vector<unsigned long> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(limit + 1, false);
  for (unsigned long i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (unsigned long j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

FactorMap factor_integer(const Integer& n) {
  if (n <= 0) throw Error(ErrorKind::NonPositive, "factor_integer requires n >= 1, got " + n.get_str());
  FactorMap out;
  Integer rest = n;
  for (unsigned long d = 2; d <= kTrialLimit; d += (d == 2 ? 1 : 2)) {
    if (Integer(d) * d > rest) break;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), d)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), d);
      ++out[Integer(d)];
    }
  }
  if (rest > 1) split_composite(rest, out, 1);
  return out;
}

ExponentVector exponent_vector(const Rational& x) {
  if (sgn(x) <= 0) throw Error(ErrorKind::NonPositive, "exponent_vector requires x > 0, got " + to_string(x));
  ExponentVector out;
  for (const auto& [p, e] : factor_integer(x.get_num())) out[p] += static_cast<long>(e);
  for (const auto& [p, e] : factor_integer(x.get_den())) out[p] -= static_cast<long>(e);
  return out;
}

std::optional<Rational> rational_nth_root(const Rational& x, unsigned long n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "rational_nth_root requires n >= 1");
  if (sgn(x) < 0 && n % 2 == 0)
    throw Error(ErrorKind::EvenRootOfNegative, "even root of negative " + to_string(x));
  Integer num = x.get_num();
  const bool negative = sgn(num) < 0;
  if (negative) num = -num;
  Integer rn, rd;
  if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), n) == 0) return std::nullopt;
  if (mpz_root(rd.get_mpz_t(), x.get_den_mpz_t(), n) == 0) return std::nullopt;
  Rational r(negative ? Integer(-rn) : rn, rd);
  r.canonicalize();
  return r;
}

}  // namespace qrank

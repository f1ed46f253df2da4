#include <algorithm>
#include <numeric>
#include <random>

#include "qrank/factor.hpp"
#include "qrank/modp.hpp"

namespace qrank {

namespace {

using ZPoly = std::vector<Integer>;

// Number of good primes examined before committing to the one with the
// fewest modular factors.
constexpr int kPrimeTrials = 8;

void ztrim(ZPoly& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

int zdeg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

Integer zcontent(const ZPoly& a) {
  Integer g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  ztrim(out);
  return out;
}

void zreduce(ZPoly& a, const Integer& m) {
  for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  ztrim(a);
}

ZPoly zmulmod(const ZPoly& a, const ZPoly& b, const Integer& m) {
  ZPoly out = zmul(a, b);
  zreduce(out, m);
  return out;
}

ZPoly zadd(const ZPoly& a, const ZPoly& b) {
  ZPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  ztrim(out);
  return out;
}

ZPoly zsub(const ZPoly& a, const ZPoly& b) {
  ZPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  ztrim(out);
  return out;
}

// Division by a monic polynomial modulo m.
std::pair<ZPoly, ZPoly> zdivrem_monic(const ZPoly& a, const ZPoly& b, const Integer& m) {
  if (a.size() < b.size()) {
    ZPoly r = a;
    zreduce(r, m);
    return {ZPoly{}, r};
  }
  ZPoly r = a;
  ZPoly q(a.size() - b.size() + 1, 0);
  const std::size_t db = b.size() - 1;
  for (std::size_t i = a.size(); i-- > db;) {
    mpz_fdiv_r(r[i].get_mpz_t(), r[i].get_mpz_t(), m.get_mpz_t());
    if (sgn(r[i]) == 0) continue;
    const Integer f = r[i];
    q[i - db] = f;
    for (std::size_t j = 0; j <= db; ++j) mpz_submul(r[i - db + j].get_mpz_t(), f.get_mpz_t(), b[j].get_mpz_t());
  }
  r.resize(db);
  zreduce(r, m);
  zreduce(q, m);
  return {q, r};
}

// Exact division over Z; nullopt when b does not divide a.
std::optional<ZPoly> zexact_div(const ZPoly& a, const ZPoly& b) {
  if (a.size() < b.size()) return std::nullopt;
  ZPoly r = a;
  ZPoly q(a.size() - b.size() + 1, 0);
  const std::size_t db = b.size() - 1;
  const Integer& lb = b.back();
  for (std::size_t i = a.size(); i-- > db;) {
    if (sgn(r[i]) == 0) continue;
    if (!mpz_divisible_p(r[i].get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
    Integer f;
    mpz_divexact(f.get_mpz_t(), r[i].get_mpz_t(), lb.get_mpz_t());
    for (std::size_t j = 0; j <= db; ++j) mpz_submul(r[i - db + j].get_mpz_t(), f.get_mpz_t(), b[j].get_mpz_t());
    q[i - db] = f;
  }
  for (std::size_t i = 0; i < db; ++i)
    if (sgn(r[i]) != 0) return std::nullopt;
  ztrim(q);
  return q;
}

modp::Poly to_modp(const ZPoly& a, std::uint64_t p) {
  modp::Poly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = mpz_fdiv_ui(a[i].get_mpz_t(), p);
  modp::trim(out);
  return out;
}

ZPoly from_modp(const modp::Poly& a) {
  ZPoly out;
  out.reserve(a.size());
  for (auto c : a) out.emplace_back(static_cast<unsigned long>(c));
  return out;
}

// Symmetric residues in (-m/2, m/2].
ZPoly symmetric(ZPoly a, const Integer& m) {
  const Integer half = m / 2;
  for (auto& c : a) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c > half) c -= m;
  }
  ztrim(a);
  return a;
}

ZPoly primitive(ZPoly a) {
  const Integer g = zcontent(a);
  if (g > 1)
    for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  if (!a.empty() && sgn(a.back()) < 0)
    for (auto& c : a) c = -c;
  return a;
}

// One quadratic Hensel step: f = g h mod m, s g + t h = 1 mod m, h monic.
// Produces the same relations modulo m^2.
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const Integer& m) {
  const Integer m2 = m * m;
  ZPoly e = zsub(f, zmul(g, h));
  zreduce(e, m2);
  auto [q, r] = zdivrem_monic(zmulmod(s, e, m2), h, m2);
  ZPoly g_new = zadd(g, zadd(zmul(t, e), zmul(q, g)));
  zreduce(g_new, m2);
  ZPoly h_new = zadd(h, r);
  zreduce(h_new, m2);
  ZPoly b = zsub(zadd(zmul(s, g_new), zmul(t, h_new)), ZPoly{1});
  zreduce(b, m2);
  auto [c, d] = zdivrem_monic(zmulmod(s, b, m2), h_new, m2);
  ZPoly s_new = zsub(s, d);
  zreduce(s_new, m2);
  ZPoly t_new = zsub(t, zadd(zmul(t, b), zmul(c, g_new)));
  zreduce(t_new, m2);
  g = std::move(g_new);
  h = std::move(h_new);
  s = std::move(s_new);
  t = std::move(t_new);
}

// Lifts f = lc(f) * prod(factors) mod p to monic factors mod p^(2^k) = modulus.
void multifactor_lift(const ZPoly& f, const std::vector<modp::Poly>& factors, std::uint64_t p, const Integer& modulus,
                      std::vector<ZPoly>& out) {
  if (factors.size() == 1) {
    Integer lc_inv;
    mpz_invert(lc_inv.get_mpz_t(), f.back().get_mpz_t(), modulus.get_mpz_t());
    ZPoly g = f;
    for (auto& c : g) c *= lc_inv;
    zreduce(g, modulus);
    out.push_back(std::move(g));
    return;
  }
  const std::size_t half = factors.size() / 2;
  const std::vector<modp::Poly> left(factors.begin(), factors.begin() + half);
  const std::vector<modp::Poly> right(factors.begin() + half, factors.end());
  modp::Poly gm{mpz_fdiv_ui(f.back().get_mpz_t(), p)};
  for (const auto& fac : left) gm = modp::mul(gm, fac, p);
  modp::Poly hm{1};
  for (const auto& fac : right) hm = modp::mul(hm, fac, p);
  const modp::Xgcd bez = modp::xgcd(gm, hm, p);
  ZPoly g = from_modp(gm), h = from_modp(hm), s = from_modp(bez.s), t = from_modp(bez.t);
  ZPoly fm = f;
  for (Integer m = p; m < modulus; m *= m) {
    zreduce(fm = f, m * m);
    hensel_step(fm, g, h, s, t, m);
  }
  multifactor_lift(g, left, p, modulus, out);
  multifactor_lift(h, right, p, modulus, out);
}

struct PrimeChoice {
  std::uint64_t p = 0;
  std::vector<modp::Poly> factors;
};

std::vector<int> degrees_of(const std::vector<modp::Poly>& fs) {
  std::vector<int> d;
  for (const auto& f : fs) d.push_back(modp::degree(f));
  std::sort(d.begin(), d.end());
  return d;
}

std::vector<bool> subset_sums(const std::vector<int>& degs, int n) {
  std::vector<bool> ok(n + 1, false);
  ok[0] = true;
  for (int d : degs)
    for (int s = n; s >= d; --s)
      if (ok[s - d]) ok[s] = true;
  return ok;
}

// Irreducible factors of a primitive squarefree f with lc > 0, f(0) != 0.
std::vector<ZPoly> factor_squarefree_primitive(const ZPoly& f) {
  const int n = zdeg(f);
  if (n <= 1) return {f};

  std::mt19937_64 rng(0x5eedULL + static_cast<unsigned>(n));
  std::vector<bool> allowed(n + 1, true);
  PrimeChoice best;
  int good = 0;
  static const std::vector<unsigned long> kPrimes = primes_up_to(200000);
  for (auto pr : kPrimes) {
    const std::uint64_t p = pr;
    if (p < 3) continue;
    if (mpz_divisible_ui_p(f.back().get_mpz_t(), p)) continue;
    const modp::Poly fp = to_modp(f, p);
    if (modp::degree(modp::gcd(fp, modp::derivative(fp, p), p)) != 0) continue;
    auto facs = modp::factor_squarefree(fp, p, rng);
    const auto sums = subset_sums(degrees_of(facs), n);
    for (int s = 0; s <= n; ++s) allowed[s] = allowed[s] && sums[s];
    if (best.p == 0 || facs.size() < best.factors.size()) best = {p, std::move(facs)};
    bool proper = false;
    for (int s = 1; s < n; ++s) proper = proper || allowed[s];
    if (!proper) return {f};
    if (++good >= kPrimeTrials) break;
  }

  // Any factor g of f with deg g = k has |g|_inf <= 2^k |f|_2; lc(f) * g must
  // be recoverable from its symmetric residue.
  Integer norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  Integer bound;
  mpz_sqrt(bound.get_mpz_t(), norm2.get_mpz_t());
  bound += 1;
  bound <<= n;
  bound *= abs(f.back());
  Integer modulus = best.p;
  while (modulus <= 2 * bound) modulus *= modulus;

  std::vector<ZPoly> lifted;
  multifactor_lift(f, best.factors, best.p, modulus, lifted);

  std::vector<ZPoly> result;
  std::vector<std::size_t> active(lifted.size());
  std::iota(active.begin(), active.end(), 0);
  ZPoly rest = f;
  std::size_t s = 1;
  while (2 * s <= active.size()) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      int deg = 0;
      for (auto i : idx) deg += zdeg(lifted[active[i]]);
      if (deg < zdeg(rest) && allowed[deg]) {
        const Integer& lc = rest.back();
        Integer c0 = lc;
        for (auto i : idx) c0 = (c0 * lifted[active[i]][0]) % modulus;
        mpz_fdiv_r(c0.get_mpz_t(), c0.get_mpz_t(), modulus.get_mpz_t());
        if (c0 > modulus / 2) c0 -= modulus;
        const Integer target = lc * rest[0];
        if (sgn(c0) != 0 && mpz_divisible_p(target.get_mpz_t(), c0.get_mpz_t())) {
          ZPoly g{lc};
          for (auto i : idx) g = zmulmod(g, lifted[active[i]], modulus);
          g = primitive(symmetric(g, modulus));
          if (auto q = zexact_div(rest, g)) {
            result.push_back(g);
            rest = primitive(*q);
            std::vector<std::size_t> next;
            for (std::size_t k = 0; k < active.size(); ++k)
              if (std::find(idx.begin(), idx.end(), k) == idx.end()) next.push_back(active[k]);
            active = std::move(next);
            found = true;
            break;
          }
        }
      }
      // next combination of s indices out of active.size()
      std::size_t k = s;
      while (k > 0 && idx[k - 1] == active.size() - s + (k - 1)) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (zdeg(rest) >= 1) result.push_back(rest);
  return result;
}

QPoly monic_rational(const ZPoly& a) {
  std::vector<Rational> v;
  v.reserve(a.size());
  for (const auto& c : a) {
    Rational r(c, a.back());
    r.canonicalize();
    v.push_back(r);
  }
  return QPoly(std::move(v));
}

}  // namespace

std::vector<Integer> primitive_integer_part(const QPoly& p) {
  Integer l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  ZPoly out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(c.get_num() * (l / c.get_den()));
  return primitive(std::move(out));
}

bool canonical_less(const QPoly& a, const QPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    const int c = cmp(a.coeffs()[i], b.coeffs()[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

QPoly RationalFactorization::expand() const {
  QPoly acc = QPoly::constant(content);
  for (const auto& [f, e] : factors) acc = acc * pow(f, e);
  return acc;
}

unsigned RationalFactorization::count() const {
  unsigned n = 0;
  for (const auto& fe : factors) n += fe.second;
  return n;
}

RationalFactorization factor_over_Q(const QPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "factor_over_Q of zero polynomial");
  RationalFactorization out;
  out.content = p.leading();
  for (const auto& [part, mult] : squarefree_decomposition(p)) {
    ZPoly f = primitive_integer_part(part);
    if (sgn(f[0]) == 0) {
      out.factors.emplace_back(QPoly::x(), mult);
      f.erase(f.begin());
    }
    if (zdeg(f) < 1) continue;
    for (const auto& g : factor_squarefree_primitive(f)) out.factors.emplace_back(monic_rational(g), mult);
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return canonical_less(a.first, b.first);
    return a.second < b.second;
  });
  return out;
}

bool is_irreducible_over_Q(const QPoly& p) {
  if (p.degree() < 1) return false;
  const auto f = factor_over_Q(p);
  return f.factors.size() == 1 && f.factors[0].second == 1;
}

std::optional<std::vector<int>> modular_degree_pattern(const QPoly& f, std::uint64_t p) {
  if (f.degree() < 1 || p < 3) return std::nullopt;
  for (const auto& c : f.coeffs())
    if (mpz_divisible_ui_p(c.get_den_mpz_t(), p)) return std::nullopt;
  const ZPoly z = primitive_integer_part(f);
  if (mpz_divisible_ui_p(z.back().get_mpz_t(), p)) return std::nullopt;
  const modp::Poly fp = to_modp(z, p);
  if (modp::degree(modp::gcd(fp, modp::derivative(fp, p), p)) != 0) return std::nullopt;
  std::mt19937_64 rng(p);
  return degrees_of(modp::factor_squarefree(fp, p, rng));
}

}  // namespace qrank

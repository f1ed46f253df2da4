#include <cmath>
#include <limits>

#include "qrank/modp.hpp"
#include "qrank/numfield.hpp"

namespace qrank {

namespace {

// Solves A v = b over Q for square nonsingular A.
std::vector<Rational> solve(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && sgn(a[piv][col]) == 0) ++piv;
    if (piv == n) throw Error(ErrorKind::InvalidArgument, "singular linear system");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    const Rational inv = Rational(1) / a[col][col];
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(a[r][col]) == 0) continue;
      const Rational f = a[r][col] * inv;
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<Rational> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = b[i] / a[i][i];
  return v;
}

// Coordinates of an element of K[x]/(Q) in the basis theta^j x^i, index i*d + j.
std::vector<Rational> tower_coords(const KPoly& a, int d, int e) {
  std::vector<Rational> out(static_cast<std::size_t>(d) * e, Rational(0));
  for (int i = 0; i <= a.degree(); ++i) {
    const auto c = a.coeffs()[i].coords();
    for (int j = 0; j < d && j < static_cast<int>(c.size()); ++j) out[static_cast<std::size_t>(i) * d + j] = c[j];
  }
  return out;
}

}  // namespace

NfElement Flattening::embed(const NfElement& k_element) const {
  const QPoly& v = k_element.value();
  NfElement acc(field, QPoly{});
  for (int i = v.degree(); i >= 0; --i) acc = acc * generator_image + NfElement(v.coeffs()[i]);
  return acc;
}

Flattening flatten(const FieldPtr& field, const KPoly& q_in) {
  if (q_in.degree() < 1) throw Error(ErrorKind::NotIrreducible, "flatten needs a polynomial of degree >= 1");
  const KPoly q = monic(q_in);
  const int d = field->degree();
  const int e = q.degree();
  const NfElement theta = NfElement::generator(field);

  if (e == 1) {
    Flattening out;
    out.field = field;
    out.generator_image = theta;
    out.root = -q.coeffs()[0];
    if (!out.root.field()) out.root = NfElement(field, out.root.value());
    return out;
  }
  if (!is_squarefree(q)) throw Error(ErrorKind::NotIrreducible, "polynomial has repeated factors");

  long shift = 0;
  QPoly g;
  for (long k = 0;; ++k) {
    shift = (k % 2 == 0) ? k / 2 : -(k + 1) / 2;
    g = norm_poly(field, taylor_shift(q, NfElement(Rational(-shift)) * theta));
    if (is_squarefree(g)) break;
    if (k > 2L * d * e * d * e + 16) throw Error(ErrorKind::NotIrreducible, "no primitive element found");
  }
  if (!is_irreducible_over_Q(g)) throw Error(ErrorKind::NotIrreducible, "polynomial is reducible over the base field");

  Flattening out;
  out.field = NumberField::make_trusted(g);
  out.shift = shift;

  const int n = d * e;
  // columns: gamma^k in K[x]/(Q), gamma = x + shift*theta
  const KPoly gamma({NfElement(Rational(shift)) * theta, NfElement(1)});
  std::vector<std::vector<Rational>> mat(n, std::vector<Rational>(n));
  KPoly power = KPoly::constant(NfElement(field, QPoly::constant(Rational(1))));
  for (int k = 0; k < n; ++k) {
    const auto col = tower_coords(power, d, e);
    for (int r = 0; r < n; ++r) mat[r][k] = col[r];
    power = (power * gamma) % q;
  }
  const auto theta_coords = solve(mat, tower_coords(KPoly::constant(theta), d, e));
  out.generator_image = NfElement(out.field, QPoly(theta_coords));
  out.root = NfElement::generator(out.field) - NfElement(Rational(shift)) * out.generator_image;
  return out;
}

namespace {

// Residue filter: returns true when some degree-one prime of L shows that c
// is not an n-th power. Sound: a simple root r of g mod l lifts to an l-adic
// embedding of L, and an l-adic unit n-th power reduces to an n-th power in F_l.
bool residue_excludes_root(const FieldPtr& field, const NfElement& c, unsigned long n) {
  constexpr int kWantedWitnesses = 24;
  constexpr int kMaxCandidates = 400;
  const QPoly& g = field->min_poly();
  const auto cc = c.coords();
  int witnesses = 0, candidates = 0;
  for (unsigned long k = 2; candidates < kMaxCandidates && witnesses < kWantedWitnesses; k += 2) {
    const unsigned long ell = k * n + 1;
    if (ell >= (1UL << 31)) break;
    if (!is_probable_prime(Integer(ell))) continue;
    ++candidates;
    bool bad = false;
    for (const auto& x : g.coeffs()) bad = bad || mpz_divisible_ui_p(x.get_den_mpz_t(), ell);
    for (const auto& x : cc) bad = bad || mpz_divisible_ui_p(x.get_den_mpz_t(), ell);
    if (bad) continue;
    auto reduce = [ell](const Rational& x) {
      const std::uint64_t num = mpz_fdiv_ui(x.get_num_mpz_t(), ell);
      const std::uint64_t den = mpz_fdiv_ui(x.get_den_mpz_t(), ell);
      return num * modp::inv(den, ell) % ell;
    };
    modp::Poly gp;
    for (const auto& x : g.coeffs()) gp.push_back(reduce(x));
    modp::trim(gp);
    modp::Poly cp;
    for (const auto& x : cc) cp.push_back(reduce(x));
    modp::trim(cp);
    const modp::Poly dg = modp::derivative(gp, ell);
    // product of linear factors of g mod ell
    const modp::Poly xl = modp::powmod(modp::Poly{0, 1}, ell, gp, ell);
    const modp::Poly lin = modp::gcd(gp, modp::sub(xl, modp::Poly{0, 1}, ell), ell);
    if (modp::degree(lin) < 1) continue;
    std::mt19937_64 rng(ell);
    for (const auto& f : modp::factor_squarefree(lin, ell, rng)) {
      const std::uint64_t r = (ell - f[0]) % ell;
      auto eval = [&](const modp::Poly& p) {
        std::uint64_t acc = 0;
        for (std::size_t i = p.size(); i-- > 0;) acc = (acc * r + p[i]) % ell;
        return acc;
      };
      if (eval(dg) == 0) continue;
      const std::uint64_t cr = eval(cp);
      if (cr == 0) continue;
      ++witnesses;
      std::uint64_t acc = 1, base = cr;
      for (unsigned long e = (ell - 1) / n; e; e >>= 1) {
        if (e & 1) acc = acc * base % ell;
        base = base * base % ell;
      }
      if (acc != 1) return true;
    }
  }
  return false;
}

}  // namespace

bool has_nth_root(const FieldPtr& field, const NfElement& c_in, unsigned long n) {
  if (c_in.is_zero()) throw Error(ErrorKind::ZeroElement, "root test of zero");
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "root index must be >= 1");
  if (n == 1) return true;
  const NfElement c = c_in.field() ? c_in : NfElement(field, c_in.value());
  if (field->degree() == 1) {
    const Rational r = norm(c);
    if (sgn(r) < 0 && n % 2 == 0) return false;
    return rational_nth_root(r, n).has_value();
  }
  const Rational nm = norm(c);
  if (sgn(nm) < 0 && n % 2 == 0) return false;
  if (!rational_nth_root(nm, n)) return false;
  if (residue_excludes_root(field, c, n)) return false;

  std::vector<NfElement> coeffs(n + 1, NfElement(field, QPoly{}));
  coeffs[0] = -c;
  coeffs[n] = NfElement(field, QPoly::constant(Rational(1)));
  const auto fac = factor_over_K(field, KPoly(std::move(coeffs)));
  for (const auto& [f, e] : fac.factors)
    if (f.degree() == 1) return true;
  return false;
}

bool is_pth_power(const FieldPtr& field, const NfElement& a, unsigned long p) {
  if (!is_probable_prime(Integer(p))) throw Error(ErrorKind::InvalidArgument, "is_pth_power needs a prime exponent");
  return has_nth_root(field, a, p);
}

bool in_minus4_fourth_powers(const FieldPtr& field, const NfElement& a) {
  if (a.is_zero()) throw Error(ErrorKind::ZeroElement, "root test of zero");
  return has_nth_root(field, a * NfElement(Rational(-1, 4)), 4);
}

namespace {

// log of a positive integer, accurate to a few ulps.
double log_integer(const Integer& v) {
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

double round_up(double x) {
  const double margin = std::abs(x) * 1e-12 + 1e-15;
  return std::nextafter(x + margin, std::numeric_limits<double>::infinity());
}

}  // namespace

double weil_height(const NfElement& a) {
  if (a.is_zero()) throw Error(ErrorKind::ZeroElement, "height of zero");
  if (auto r = a.as_rational()) {
    const Integer num = abs(r->get_num());
    const Integer& den = r->get_den();
    return round_up(log_integer(num > den ? num : den));
  }
  const QPoly chi = charpoly(a);
  std::vector<Integer> f = primitive_integer_part(chi);
  const int n = static_cast<int>(f.size()) - 1;
  // M(f) <= |f_k|_2^(1/2^k) for the k-th Graeffe iterate f_k.
  constexpr int kGraeffeSteps = 7;
  double best = std::numeric_limits<double>::infinity();
  for (int k = 0;; ++k) {
    Integer sq = 0;
    for (const auto& c : f) sq += c * c;
    best = std::min(best, 0.5 * log_integer(sq) / std::ldexp(1.0, k));
    if (k == kGraeffeSteps) break;
    // f_{k+1}(x^2) = (-1)^n f_k(x) f_k(-x)
    std::vector<Integer> neg = f;
    for (std::size_t i = 1; i < neg.size(); i += 2) neg[i] = -neg[i];
    std::vector<Integer> prod(2 * f.size() - 1, 0);
    for (std::size_t i = 0; i < f.size(); ++i)
      for (std::size_t j = 0; j < neg.size(); ++j)
        mpz_addmul(prod[i + j].get_mpz_t(), f[i].get_mpz_t(), neg[j].get_mpz_t());
    std::vector<Integer> next;
    for (std::size_t i = 0; i < prod.size(); i += 2) next.push_back(n % 2 ? Integer(-prod[i]) : prod[i]);
    f = std::move(next);
  }
  return round_up(best / n);
}

}  // namespace qrank

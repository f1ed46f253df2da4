#include "qrank/modp.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace qrank::modp {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, nt = 1;
  std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a % p);
  while (nr != 0) {
    const std::int64_t q = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - q * nt);
    std::tie(r, nr) = std::make_pair(nr, r - q * nr);
  }
  if (r != 1) throw std::domain_error("modp::inv: not invertible");
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

Poly add(const Poly& a, const Poly& b, std::uint64_t p) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::uint64_t v = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
    out[i] = v >= p ? v - p : v;
  }
  trim(out);
  return out;
}

Poly sub(const Poly& a, const Poly& b, std::uint64_t p) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::uint64_t x = i < a.size() ? a[i] : 0;
    const std::uint64_t y = i < b.size() ? b[i] : 0;
    out[i] = x >= y ? x - y : x + p - y;
  }
  trim(out);
  return out;
}

Poly mul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  }
  trim(out);
  return out;
}

Poly scale(const Poly& a, std::uint64_t s, std::uint64_t p) {
  Poly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * s % p;
  trim(out);
  return out;
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b, std::uint64_t p) {
  if (b.empty()) throw std::domain_error("modp::divrem: division by zero");
  if (a.size() < b.size()) return {Poly{}, a};
  Poly r = a;
  Poly q(a.size() - b.size() + 1, 0);
  const std::uint64_t li = inv(b.back(), p);
  const std::size_t db = b.size() - 1;
  for (std::size_t i = a.size(); i-- > db;) {
    if (r[i] == 0) continue;
    const std::uint64_t f = r[i] * li % p;
    q[i - db] = f;
    for (std::size_t j = 0; j <= db; ++j) {
      const std::uint64_t sub_v = f * b[j] % p;
      std::uint64_t& slot = r[i - db + j];
      slot = slot >= sub_v ? slot - sub_v : slot + p - sub_v;
    }
  }
  r.resize(db);
  trim(r);
  trim(q);
  return {q, r};
}

Poly rem(const Poly& a, const Poly& b, std::uint64_t p) { return divrem(a, b, p).second; }

Poly monic(const Poly& a, std::uint64_t p) {
  if (a.empty()) return a;
  return scale(a, inv(a.back(), p), p);
}

Poly gcd(Poly a, Poly b, std::uint64_t p) {
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

Xgcd xgcd(const Poly& a, const Poly& b, std::uint64_t p) {
  Poly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divrem(r0, r1, p);
    Poly s2 = sub(s0, mul(q, s1, p), p);
    Poly t2 = sub(t0, mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const std::uint64_t li = inv(r0.back(), p);
  return {scale(r0, li, p), scale(s0, li, p), scale(t0, li, p)};
}

Poly derivative(const Poly& a, std::uint64_t p) {
  if (a.size() <= 1) return {};
  Poly out(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) out[i - 1] = a[i] * (i % p) % p;
  trim(out);
  return out;
}

Poly powmod(Poly base, std::uint64_t e, const Poly& m, std::uint64_t p) {
  Poly acc = rem(Poly{1}, m, p);
  base = rem(base, m, p);
  while (e) {
    if (e & 1) acc = rem(mul(acc, base, p), m, p);
    e >>= 1;
    if (e) base = rem(mul(base, base, p), m, p);
  }
  return acc;
}

namespace {

void equal_degree_split(const Poly& g, int d, std::uint64_t p, std::mt19937_64& rng, std::vector<Poly>& out) {
  const int n = degree(g);
  if (n == d) {
    out.push_back(g);
    return;
  }
  std::uniform_int_distribution<std::uint64_t> coeff(0, p - 1);
  while (true) {
    Poly a(n);
    for (auto& c : a) c = coeff(rng);
    trim(a);
    if (degree(a) < 1) continue;
    // a^((p^d - 1)/2) = (a * a^p * ... * a^(p^(d-1)))^((p-1)/2)
    Poly frob = a, norm = a;
    for (int i = 1; i < d; ++i) {
      frob = powmod(frob, p, g, p);
      norm = rem(mul(norm, frob, p), g, p);
    }
    Poly b = powmod(norm, (p - 1) / 2, g, p);
    b = sub(b, Poly{1}, p);
    Poly h = gcd(g, b, p);
    if (degree(h) > 0 && degree(h) < n) {
      equal_degree_split(h, d, p, rng, out);
      equal_degree_split(divrem(g, h, p).first, d, p, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<Poly> factor_squarefree(const Poly& f_in, std::uint64_t p, std::mt19937_64& rng) {
  std::vector<Poly> out;
  Poly f = monic(f_in, p);
  if (degree(f) < 1) return out;
  const Poly x{0, 1};
  Poly h = rem(x, f, p);
  for (int i = 1; 2 * i <= degree(f); ++i) {
    h = powmod(h, p, f, p);
    Poly g = gcd(f, sub(h, x, p), p);
    if (degree(g) > 0) {
      equal_degree_split(g, i, p, rng, out);
      f = divrem(f, g, p).first;
      h = rem(h, f, p);
    }
  }
  if (degree(f) > 0) out.push_back(f);
  std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return out;
}

}  // namespace qrank::modp

// Acceptance gate: one PASS/FAIL line per criterion; exit status is the number
// of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "support.hpp"

using namespace testing;

namespace {

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  int reasons = 0;

  void fail(const std::string& why) {
    pass = false;
    if (++reasons <= 4) detail << " [" << why << "]";
  }
  void require(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
};

using Clock = std::chrono::steady_clock;

std::string str(const KPoly& p) {
  std::ostringstream os;
  os << p;
  return os.str();
}

bool is_integer_poly_in_range(const QPoly& p, long range) {
  for (const auto& c : p.coeffs())
    if (c.get_den() != 1 || abs(c.get_num()) > range) return false;
  return true;
}

// Monic irreducible P over Q, deg <= 3, integer coefficients in [-10, 10], P(0) != 0, no
// root-of-unity roots. A share are built as charpolys of beta^2, beta^3 or -4 beta^4 so that
// obstructions actually occur.
QPoly criterion6_poly(Rng& rng) {
  for (;;) {
    const long mode = uniform(rng, 0, 9);
    QPoly p;
    if (mode < 6) {
      p = random_monic(rng, uniform(rng, 1, 3), 10);
    } else {
      QPoly b = random_monic(rng, uniform(rng, 1, 3), 3);
      if (!is_irreducible_over_Q(b)) continue;
      const FieldPtr f = NumberField::make(b);
      const NfElement y = NfElement::generator(f);
      NfElement v = mode < 8 ? y * y : (mode == 8 ? y * y * y : NfElement(-4) * y * y * y * y);
      p = charpoly(v);
    }
    if (!is_integer_poly_in_range(p, 10) || sgn(p.coeff(0)) == 0 || !is_irreducible_over_Q(p)) continue;
    if (has_root_of_unity_root(QQ(), embed(QQ(), p))) continue;
    return p;
  }
}

Verdict criterion1() {
  Verdict v;
  const auto t0 = Clock::now();
  const auto r = qacfa_rank(pres(QQ(), {-9, 1}));
  const auto counts = oracle_factor_counts(QQ(), kp(QQ(), {-9, 1}), {2, 4, 6, 8, 10});
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  v.detail << "rank(x-9)=" << r.value << " N=" << r.witness->exponent << " factors={";
  for (const auto& f : r.witness->factors) v.detail << " " << str(f);
  v.detail << " } oracle(x^2j-9, j=1..5)=[";
  for (unsigned c : counts) v.detail << " " << c;
  v.detail << " ] " << secs << " s";
  v.require(r.value == 2, "rank != 2");
  v.require(r.witness->exponent == 2, "N != 2");
  v.require(same_factor_multiset(std::vector<std::pair<KPoly, unsigned>>{{r.witness->factors.at(0), 1},
                                                                         {r.witness->factors.at(1), 1}},
                                 std::vector<KPoly>{kp(QQ(), {-3, 1}), kp(QQ(), {3, 1})}),
            "factors differ from {x-3, x+3}");
  for (unsigned c : counts) v.require(c == 2, "oracle count != 2");
  v.require(secs < 1.0, "slower than 1 s");
  return v;
}

Verdict criterion2() {
  Verdict v;
  const auto t0 = Clock::now();
  const auto r = qacfa_rank(pres(QQ(), {-4, 1}));
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  v.detail << "rank(x-4)=" << r.value << " factors={";
  for (const auto& f : r.witness->factors) v.detail << " " << str(f);
  v.detail << " } " << secs << " s";
  v.require(r.value == 2, "rank != 2");
  v.require(r.witness->factors.size() == 2 &&
                same_factor_multiset(std::vector<std::pair<KPoly, unsigned>>{{r.witness->factors[0], 1},
                                                                             {r.witness->factors[1], 1}},
                                     std::vector<KPoly>{kp(QQ(), {-2, 1}), kp(QQ(), {2, 1})}),
            "factors differ from {x-2, x+2}");
  v.require(secs < 1.0, "slower than 1 s");
  return v;
}

Verdict criterion3() {
  Verdict v;
  const auto t0 = Clock::now();
  const auto g = pres(QQ(), {1, -4, 1});
  const auto val = validate(g);
  const Rational ratio = abs(*g.char_poly.coeff(0).as_rational());
  const auto bound = rank_bound_from_ratio(ratio);
  const auto r = qacfa_rank(g);
  std::vector<unsigned> ns;
  for (unsigned n = 1; n <= 12; ++n) ns.push_back(n);
  const auto counts = oracle_factor_counts(QQ(), g.char_poly, ns);
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  v.detail << "validate=" << (val.passed() ? "pass" : "fail") << " ratio=" << to_string(ratio)
           << " bound=" << (bound ? std::to_string(*bound) : "none") << " rank=" << r.value
           << " oracle(n<=12)=[";
  for (unsigned c : counts) v.detail << " " << c;
  v.detail << " ] " << secs << " s";
  v.require(val.passed(), "validation did not pass");
  v.require(ratio == 1 && !bound, "degree-ratio bound should be inapplicable");
  v.require(r.value == 1, "rank != 1");
  for (unsigned c : counts) v.require(c == 1, "oracle found a reducible P(x^n)");
  v.require(secs < 10.0, "slower than 10 s");
  return v;
}

Verdict criterion4() {
  Verdict v;
  int checked = 0;
  for (const Rational& q0 : {Rational(1), Rational(1, 2), Rational(3, 7)})
    for (unsigned long p : {2UL, 5UL, 97UL}) {
      for (long m = -100; m <= 100; ++m) {
        const RankReport r = fixed_field_rank({q0, m, p});
        ++checked;
        if (m == 0) {
          v.require(r.kind == RankReport::Kind::Undefined, "m = 0 not Undefined");
        } else {
          v.require(r.kind == RankReport::Kind::Finite && r.value == static_cast<unsigned long>(std::labs(m)),
                    "rank != |m| at m=" + std::to_string(m));
        }
      }
    }
  v.detail << checked << " queries";
  return v;
}

Verdict criterion5() {
  Verdict v;
  const auto t0 = Clock::now();
  int count = 0;
  for (long d = -50; d <= 50; ++d) {
    if (std::labs(d) < 2) continue;
    ++count;
    const auto r = qacfa_rank(pres(QQ(), {-d, 1}));
    const unsigned long s = rationality_exponent(Rational(std::labs(d)));
    const std::string at = "d=" + std::to_string(d) + " rank=" + std::to_string(r.value) + " S=" + std::to_string(s);
    v.require(r.value <= s, "bound violated at " + at);
    if (d == 9 || d == 4 || d == 16) {
      v.detail << " d=" << d << ":rank " << r.value << "/S " << s;
      v.require(r.value == s, "expected equality at " + at);
    }
    if (s == 1) v.require(r.value == 1, "bound 1 but " + at);
  }
  {
    const auto r = qacfa_rank(pres(QQ(), {-64, 1}));
    const unsigned long s = rationality_exponent(Rational(64));
    const std::string at = "d=64 rank=" + std::to_string(r.value) + " S=" + std::to_string(s);
    v.detail << " d=64:rank " << r.value << "/S " << s;
    v.require(r.value <= s, "bound violated at " + at);
    v.require(r.value == s, "expected equality at " + at);
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  v.detail << "; " << count << " values of d, " << secs << " s";
  v.require(secs < 60.0, "slower than 60 s");
  return v;
}

Verdict criterion6() {
  Verdict v;
  const auto t0 = Clock::now();
  Rng rng(20260601);
  EngineConfig cap60;
  cap60.max_degree = 60;
  int obstructed = 0, stability_checks = 0, verdicts = 0;
  for (int i = 0; i < 200; ++i) {
    const QPoly p = criterion6_poly(rng);
    const KPoly k = embed(QQ(), p);
    const auto h = hereditary_factorization(QQ(), k);
    std::vector<unsigned> ns;
    for (unsigned m = 1; m <= 3; ++m)
      if (static_cast<long>(p.degree()) * h.exponent * m <= cap60.max_degree) ns.push_back(h.exponent * m);
    for (unsigned c : oracle_factor_counts(QQ(), k, ns, cap60)) {
      ++stability_checks;
      v.require(c == h.factors.size(), "stability failed for " + str(k));
    }

    std::vector<unsigned> all;
    for (unsigned n = 1; n <= 24; ++n) all.push_back(n);
    const auto counts = oracle_factor_counts(QQ(), k, all);
    const auto ob = capelli_obstruction(QQ(), k);
    if (ob) ++obstructed;
    if (!ob) {
      for (unsigned c : counts) v.require(c == 1, "no obstruction yet P(x^n) reducible for " + str(k));
    } else if (ob->exponent() <= 24) {
      v.require(counts[ob->exponent() - 1] > 1, "obstruction " + to_string(*ob) + " did not split " + str(k));
    }
    // Capelli prediction for each n
    const Flattening fl = flatten(QQ(), k);
    const bool m4 = in_minus4_fourth_powers(fl.field, fl.root);
    for (unsigned n = 1; n <= 24; ++n) {
      bool irreducible = !(n % 4 == 0 && m4);
      for (unsigned long q : primes_up_to(n))
        if (n % q == 0 && is_pth_power(fl.field, fl.root, q)) irreducible = false;
      ++verdicts;
      v.require(irreducible == (counts[n - 1] == 1),
                "verdict mismatch at n=" + std::to_string(n) + " for " + str(k));
    }
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  v.detail << "200 polynomials, " << obstructed << " obstructed, " << stability_checks << " stability checks, "
           << verdicts << " per-n verdicts, " << secs << " s";
  v.require(secs < 600.0, "slower than 10 min");
  return v;
}

Verdict criterion7() {
  Verdict v;
  std::vector<QPoly> cyclo;
  for (unsigned n = 1; n <= 200; ++n) cyclo.push_back(cyclotomic(n));
  for (unsigned n = 1; n <= 30; ++n)
    v.require(has_root_of_unity_root(QQ(), embed(QQ(), cyclo[n - 1])), "missed Phi_" + std::to_string(n));
  Rng rng(7);
  int negatives = 0;
  while (negatives < 200) {
    const QPoly p = random_monic(rng, uniform(rng, 1, 4), 4);
    if (sgn(p.coeff(0)) == 0 || !is_irreducible_over_Q(p)) continue;
    // an irreducible monic polynomial with a root of unity as a root is some Phi_n
    if (std::find(cyclo.begin(), cyclo.end(), p) != cyclo.end()) continue;
    ++negatives;
    v.require(!has_root_of_unity_root(QQ(), embed(QQ(), p)), "false positive on " + str(embed(QQ(), p)));
  }
  v.detail << "Phi_1..Phi_30 detected, " << negatives << " non-cyclotomic irreducibles rejected";
  return v;
}

Verdict criterion8() {
  Verdict v;
  const auto t0 = Clock::now();
  Rng rng(8);
  int products = 0;
  for (int i = 0; i < 500; ++i) {
    std::vector<QPoly> parts;
    QPoly prod = qp({1});
    for (long j = uniform(rng, 1, 4); j > 0; --j) {
      parts.push_back(random_certified_irreducible(rng, 5, 9));
      prod = prod * parts.back();
    }
    ++products;
    v.require(same_factor_multiset(factor_over_Q(prod).factors, parts), "mismatch over Q");
  }
  for (const FieldPtr& f : {gaussian(), sqrt2(), sqrt_m3()}) {
    for (int i = 0; i < 500; ++i) {
      std::vector<KPoly> parts;
      KPoly prod = kp(f, {1});
      for (long j = uniform(rng, 1, 3); j > 0; --j) {
        parts.push_back(random_certified_irreducible_k(rng, f, 5));
        prod = prod * parts.back();
      }
      ++products;
      v.require(same_factor_multiset(factor_over_K(f, prod).factors, parts), "mismatch over a quadratic field");
    }
  }
  v.detail << products << " products over Q, Q(i), Q(sqrt2), Q(sqrt-3), "
           << std::chrono::duration<double>(Clock::now() - t0).count() << " s";
  return v;
}

Verdict criterion9() {
  Verdict v;
  Rng rng(9);
  const std::vector<FieldPtr> fields{QQ(), gaussian(), sqrt2()};
  for (int i = 0; i < 100; ++i) {
    const FieldPtr f = fields[i % fields.size()];
    const int m = uniform(rng, 1, 6);
    const unsigned n = uniform(rng, 1, 24 / m);
    const auto g = CompanionPresentation::from_char_poly(f, random_monic_k(rng, f, m, 9));
    CompanionPresentation h;
    try {
      h = prolong(g, n);
    } catch (const std::exception& e) {
      v.fail(e.what());
      continue;
    }
    v.require(entry_law_holds(g.companion(), h.companion(), n), "entry law");
    const auto base = g.companion().last_row;
    const auto row = h.companion().last_row;
    v.require(row.size() == static_cast<std::size_t>(m) * n, "size != m n");
    for (std::size_t col = 1; col <= row.size(); ++col) {
      const NfElement want = (col - 1) % n == 0 ? base[(col - 1) / n] : NfElement(0);
      v.require(row[col - 1] == want, "entry mismatch");
    }
    v.require(charpoly_of(h.companion()) == substitute_power(g.char_poly, n), "charpoly round trip");
    v.require(charpoly_of(companion_of(g.char_poly)) == g.char_poly, "companion round trip");
  }
  v.detail << "100 prolongations with m n <= 24";
  return v;
}

Verdict criterion10() {
  Verdict v;
  Rng rng(10);
  int factors = 0, non_factors = 0;
  while (non_factors < 100) {
    const FieldPtr f = non_factors % 2 ? QQ() : gaussian();
    const KPoly p = f->degree() == 1 ? embed(f, random_certified_irreducible(rng, 3, 8))
                                     : random_certified_irreducible_k(rng, f, 4);
    if (p.coeffs()[0].is_zero()) continue;
    const auto g = CompanionPresentation::from_char_poly(f, p);
    const unsigned n = uniform(rng, 1, 6);
    const auto fac = factor_over_K(f, substitute_power(p, n));
    for (const auto& [q, e] : fac.factors) {
      ++factors;
      v.require(eigenvalue_compatible(q, g, n), "factor rejected");
    }
    for (;;) {
      const KPoly q = f->degree() == 1 ? embed(f, random_certified_irreducible(rng, 3, 8))
                                       : random_certified_irreducible_k(rng, f, 4);
      bool is_factor = false;
      for (const auto& [r, e] : fac.factors) is_factor = is_factor || r == monic(q);
      if (is_factor) continue;
      ++non_factors;
      v.require(!eigenvalue_compatible(q, g, n), "non-factor accepted: " + str(q));
      break;
    }
  }
  v.detail << factors << " factors accepted, " << non_factors << " non-factors rejected";
  return v;
}

}  // namespace

int main() {
  const std::vector<std::function<Verdict()>> criteria{criterion1, criterion2, criterion3, criterion4, criterion5,
                                                       criterion6, criterion7, criterion8, criterion9, criterion10};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i]();
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    if (!v.pass) ++failed;
    std::printf("criterion %2zu: %s  %s\n", i + 1, v.pass ? "PASS" : "FAIL", v.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed;
}

#include "oracles.hpp"

#include <gmp.h>
#include <mpfr.h>

#include <algorithm>
#include <functional>

namespace oracle {

namespace {

Rational from_mpfr(const mpfr_t v) {
  mpq_t q;
  mpq_init(q);
  mpfr_get_q(q, v);
  Rational r{mpq_class(q)};
  mpq_clear(q);
  return r;
}

Enclosure bracket(const Rational& x, unsigned bits, int (*fn)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t)) {
  mpfr_t arg, down, up;
  mpfr_inits2(bits + 64, arg, static_cast<mpfr_ptr>(nullptr));
  mpfr_inits2(bits, down, up, static_cast<mpfr_ptr>(nullptr));
  // The argument itself needs rounding; bracket it and take the hull.
  mpfr_set_q(arg, x.raw().get_mpq_t(), MPFR_RNDD);
  fn(down, arg, MPFR_RNDD);
  fn(up, arg, MPFR_RNDU);
  Rational lo = from_mpfr(down), hi = from_mpfr(up);
  mpfr_set_q(arg, x.raw().get_mpq_t(), MPFR_RNDU);
  fn(down, arg, MPFR_RNDD);
  fn(up, arg, MPFR_RNDU);
  lo = std::min(lo, from_mpfr(down));
  hi = std::max(hi, from_mpfr(up));
  mpfr_clears(arg, down, up, static_cast<mpfr_ptr>(nullptr));
  return Enclosure(lo, hi);
}

int sign_at(const RationalPolynomial& p, const Rational& x) { return p(x).sign(); }

RationalPolynomial poly_gcd(RationalPolynomial a, RationalPolynomial b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

RationalPolynomial squarefree(const RationalPolynomial& p) {
  if (p.degree() <= 0) return p;
  const RationalPolynomial g = poly_gcd(p, p.derivative());
  return g.degree() <= 0 ? p : p.divmod(g).first;
}

const Rational kWidth(1, 1000000000);

// Brackets [l, r] of width <= kWidth, each holding exactly one root of the
// squarefree polynomial q inside (a, b).
std::vector<std::pair<Rational, Rational>> isolate(const RationalPolynomial& q, const Rational& a, const Rational& b);

// Sample points splitting (a, b) into pieces on which q is monotone.
std::vector<Rational> monotone_pieces(const RationalPolynomial& q, const Rational& a, const Rational& b) {
  std::vector<Rational> pts{a};
  if (q.degree() >= 2) {
    for (const auto& [l, r] : isolate(squarefree(q.derivative()), a, b)) {
      pts.push_back(l);
      pts.push_back(r);
    }
  }
  pts.push_back(b);
  return pts;
}

std::vector<std::pair<Rational, Rational>> isolate(const RationalPolynomial& q, const Rational& a, const Rational& b) {
  std::vector<std::pair<Rational, Rational>> out;
  if (q.degree() <= 0) return out;
  const auto pts = monotone_pieces(q, a, b);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    Rational l = pts[i], r = pts[i + 1];
    if (!(l < r)) continue;
    const int sl = sign_at(q, l), sr = sign_at(q, r);
    if (sl == 0 && l != a) {
      out.push_back({l, l});
      continue;
    }
    if (sl == 0 || sr == 0 || sl == sr) continue;
    while (r - l > kWidth) {
      const Rational m = (l + r) / Rational(2);
      const int sm = sign_at(q, m);
      if (sm == 0) {
        l = r = m;
        break;
      }
      (sm == sl ? l : r) = m;
    }
    out.push_back({l, r});
  }
  return out;
}

}  // namespace

Enclosure sin_ref(const Rational& x, unsigned bits) { return bracket(x, bits, ::mpfr_sin); }
Enclosure cos_ref(const Rational& x, unsigned bits) { return bracket(x, bits, ::mpfr_cos); }

Enclosure pi_ref(unsigned bits) {
  mpfr_t down, up;
  mpfr_inits2(bits, down, up, static_cast<mpfr_ptr>(nullptr));
  mpfr_const_pi(down, MPFR_RNDD);
  mpfr_const_pi(up, MPFR_RNDU);
  Enclosure e(from_mpfr(down), from_mpfr(up));
  mpfr_clears(down, up, static_cast<mpfr_ptr>(nullptr));
  return e;
}

Enclosure pipoly_ref(const std::vector<Rational>& c, unsigned bits) {
  const Enclosure pi = pi_ref(bits);
  Enclosure acc(Rational(0));
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * pi + Enclosure(c[i]);
  return acc;
}

Enclosure machin_pi(unsigned digits) {
  const Rational tol = Rational(1) / Rational(mtp::Integer(10)).pow(digits + 2);
  // arctan(1/k) = sum (-1)^n / ((2n+1) k^(2n+1)); partial sums alternate around it.
  auto arctan_inv = [&](long k) {
    Rational sum, term = Rational(1, k);
    const Rational k2 = Rational(k * k);
    for (long n = 0;; ++n) {
      const Rational t = term / Rational(2 * n + 1);
      const Rational next = sum + (n % 2 ? -t : t);
      if (t < tol) return Enclosure(std::min(sum, next), std::max(sum, next));
      sum = next;
      term /= k2;
    }
  };
  const Enclosure a = arctan_inv(5), b = arctan_inv(239);
  return Enclosure(Rational(16)) * a - Enclosure(Rational(4)) * b;
}

TrigSum product_to_sum(unsigned q, unsigned r) {
  // Represent the running product as sum over (is_sin, signed multiplier).
  std::map<std::pair<bool, long>, Rational> cur{{{false, 0}, Rational(1)}};
  auto multiply = [&](bool by_sin) {
    std::map<std::pair<bool, long>, Rational> next;
    for (const auto& [key, c] : cur) {
      const auto [is_sin, m] = key;
      const Rational h = c / Rational(2);
      if (!is_sin && !by_sin) {  // cos a cos x
        next[{false, m - 1}] += h;
        next[{false, m + 1}] += h;
      } else if (is_sin && !by_sin) {  // sin a cos x
        next[{true, m + 1}] += h;
        next[{true, m - 1}] += h;
      } else if (!is_sin && by_sin) {  // cos a sin x
        next[{true, m + 1}] += h;
        next[{true, 1 - m}] += h;
      } else {  // sin a sin x
        next[{false, m - 1}] += h;
        next[{false, m + 1}] -= h;
      }
    }
    // Fold negative multipliers: cos(-m) = cos m, sin(-m) = -sin m.
    cur.clear();
    for (const auto& [key, c] : next) {
      auto [is_sin, m] = key;
      Rational v = c;
      if (m < 0) {
        m = -m;
        if (is_sin) v = -v;
      }
      if (is_sin && m == 0) continue;
      cur[{is_sin, m}] += v;
    }
  };
  for (unsigned i = 0; i < q; ++i) multiply(false);
  for (unsigned i = 0; i < r; ++i) multiply(true);
  TrigSum out;
  for (const auto& [key, c] : cur) {
    if (c.is_zero()) continue;
    if (!key.first && key.second == 0)
      out.constant += c;
    else
      out.terms[{key.first, static_cast<unsigned>(key.second)}] += c;
  }
  return out;
}

unsigned bisection_root_count(const RationalPolynomial& p, const Rational& a, const Rational& b) {
  const RationalPolynomial q = squarefree(p);
  if (q.degree() <= 0) return 0;
  const auto pts = monotone_pieces(q, a, b);
  // q is monotone between consecutive points: each sign flip is one root, and
  // an exact zero at an interior sample is one root (not counted again).
  unsigned count = 0;
  int prev = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i > 0 && pts[i] == pts[i - 1]) continue;
    const int s = sign_at(q, pts[i]);
    if (s == 0) {
      if (i > 0 && i + 1 < pts.size()) ++count;
      prev = 0;
      continue;
    }
    if (prev != 0 && prev != s) ++count;
    prev = s;
  }
  return count;
}

Rational random_rational(std::mt19937_64& rng, long lo, long hi, long max_den) {
  std::uniform_int_distribution<long> den(1, max_den);
  const long d = den(rng);
  std::uniform_int_distribution<long> num(lo * d, hi * d);
  return Rational(num(rng), d);
}

RationalPolynomial random_polynomial(std::mt19937_64& rng, unsigned max_degree, long coeff_bound) {
  std::uniform_int_distribution<unsigned> deg(1, max_degree);
  std::uniform_int_distribution<long> coeff(-coeff_bound, coeff_bound);
  const unsigned n = deg(rng);
  std::vector<Rational> c(n + 1);
  for (auto& v : c) v = Rational(coeff(rng));
  if (c.back().is_zero()) c.back() = Rational(1);
  return RationalPolynomial(std::move(c));
}

mtp::MtpFunction random_mtp(std::mt19937_64& rng, unsigned terms, unsigned max_x, unsigned max_trig) {
  std::uniform_int_distribution<unsigned> xp(0, max_x), tp(0, max_trig), count(1, terms);
  std::vector<mtp::MtpTerm> t;
  const unsigned n = count(rng);
  for (unsigned i = 0; i < n; ++i) {
    Rational c = random_rational(rng, -50, 50, 8);
    if (c.is_zero()) c = Rational(1);
    t.push_back({c, xp(rng), tp(rng), tp(rng)});
  }
  return mtp::normalize(std::move(t));
}

Enclosure direct_eval(const mtp::MtpFunction& f, const Rational& x) {
  const Enclosure s = sin_ref(x), c = cos_ref(x);
  Enclosure acc(Rational(0));
  for (const auto& t : f.terms())
    acc += Enclosure(t.coeff * x.pow(t.x_pow)) * c.pow(t.cos_pow) * s.pow(t.sin_pow);
  return acc;
}

}  // namespace oracle

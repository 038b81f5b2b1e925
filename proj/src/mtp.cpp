#include "mtp/mtp.hpp"

#include <algorithm>
#include <map>

namespace mtp {

namespace {

bool key_less(const MtpTerm& a, const MtpTerm& b) { return a.key() < b.key(); }

// Truncated power-series product.
std::vector<Rational> series_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < a.size(); ++j)
      if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
  }
  return r;
}

unsigned coeff_magnitude_digits(const MtpFunction& f) {
  std::size_t m = 1;
  for (const auto& t : f.terms()) {
    m = std::max(m, t.coeff.numerator().get_str().size());
  }
  return static_cast<unsigned>(m);
}

template <typename Arg>
Enclosure eval_with(const MtpFunction& f, const Arg& x, const Enclosure& s, const Enclosure& c, unsigned digits) {
  std::map<unsigned, Enclosure> spow, cpow;
  auto power = [](std::map<unsigned, Enclosure>& cache, const Enclosure& base, unsigned e) -> const Enclosure& {
    auto it = cache.find(e);
    if (it == cache.end()) it = cache.emplace(e, base.pow(e)).first;
    return it->second;
  };
  Enclosure acc(Rational(0));
  for (const auto& t : f.terms()) {
    Enclosure term(t.coeff);
    if constexpr (std::is_same_v<Arg, Rational>) {
      term = Enclosure(t.coeff * x.pow(t.x_pow));
    } else {
      term *= x.pow(t.x_pow);
    }
    if (t.cos_pow) term *= power(cpow, c, t.cos_pow);
    if (t.sin_pow) term *= power(spow, s, t.sin_pow);
    acc += term;
  }
  return acc.round(static_cast<unsigned>((digits + 6) * 3.33) + 8);
}

}  // namespace

MtpFunction MtpFunction::constant(const Rational& c) { return monomial(c, 0); }

MtpFunction MtpFunction::monomial(const Rational& c, unsigned x_pow, unsigned cos_pow, unsigned sin_pow) {
  return normalize({MtpTerm{c, x_pow, cos_pow, sin_pow}});
}

MtpFunction normalize(std::vector<MtpTerm> terms) {
  std::stable_sort(terms.begin(), terms.end(), key_less);
  MtpFunction f;
  for (auto& t : terms) {
    if (!f.terms_.empty() && f.terms_.back().key() == t.key())
      f.terms_.back().coeff += t.coeff;
    else
      f.terms_.push_back(std::move(t));
    if (f.terms_.back().coeff.is_zero()) f.terms_.pop_back();
  }
  return f;
}

MtpFunction& MtpFunction::operator+=(const MtpFunction& o) {
  std::vector<MtpTerm> all = terms_;
  all.insert(all.end(), o.terms_.begin(), o.terms_.end());
  return *this = normalize(std::move(all));
}

MtpFunction& MtpFunction::operator-=(const MtpFunction& o) { return *this += -o; }

MtpFunction operator*(const MtpFunction& a, const MtpFunction& b) {
  std::vector<MtpTerm> all;
  all.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_)
      all.push_back({s.coeff * t.coeff, s.x_pow + t.x_pow, s.cos_pow + t.cos_pow, s.sin_pow + t.sin_pow});
  return normalize(std::move(all));
}

MtpFunction MtpFunction::operator*(const Rational& s) const {
  if (s.is_zero()) return {};
  MtpFunction r = *this;
  for (auto& t : r.terms_) t.coeff *= s;
  return r;
}

MtpFunction MtpFunction::pow(unsigned e) const {
  MtpFunction r = constant(Rational(1));
  MtpFunction base = *this;
  while (e) {
    if (e & 1U) r = r * base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return r;
}

MtpFunction differentiate(const MtpFunction& f) {
  std::vector<MtpTerm> out;
  for (const auto& t : f.terms()) {
    // (x^p)' cos^q sin^r + x^p (cos^q)' sin^r + x^p cos^q (sin^r)'
    if (t.x_pow) out.push_back({t.coeff * Rational(static_cast<long>(t.x_pow)), t.x_pow - 1, t.cos_pow, t.sin_pow});
    if (t.cos_pow)
      out.push_back({-t.coeff * Rational(static_cast<long>(t.cos_pow)), t.x_pow, t.cos_pow - 1, t.sin_pow + 1});
    if (t.sin_pow)
      out.push_back({t.coeff * Rational(static_cast<long>(t.sin_pow)), t.x_pow, t.cos_pow + 1, t.sin_pow - 1});
  }
  return normalize(std::move(out));
}

Rational eval_at_zero(const MtpFunction& f) {
  Rational v;
  for (const auto& t : f.terms())
    if (t.x_pow == 0 && t.sin_pow == 0) v += t.coeff;
  return v;
}

PiPolynomial eval_at_half_pi(const MtpFunction& f) {
  PiPolynomial v;
  for (const auto& t : f.terms()) {
    if (t.cos_pow > 0) continue;
    v += PiPolynomial::monomial(t.coeff * Rational(1, 2).pow(t.x_pow), t.x_pow);
  }
  return v;
}

Enclosure eval_enclosure(const MtpFunction& f, const Rational& x, unsigned digits) {
  if (f.is_zero()) return Enclosure(Rational(0));
  const unsigned work = digits + 6 + coeff_magnitude_digits(f);
  return eval_with(f, x, sin_enclosure(x, work), cos_enclosure(x, work), digits);
}

Enclosure eval_enclosure(const MtpFunction& f, const Enclosure& x, unsigned digits) {
  if (f.is_zero()) return Enclosure(Rational(0));
  if (x.is_point()) return eval_enclosure(f, x.lo(), digits);
  const unsigned work = digits + 6 + coeff_magnitude_digits(f);
  return eval_with(f, x, sin_enclosure(x, work), cos_enclosure(x, work), digits);
}

std::vector<Rational> maclaurin(const MtpFunction& f, unsigned order) {
  const std::size_t n = order + 1;
  std::vector<Rational> sin_s(n), cos_s(n), one(n);
  one[0] = Rational(1);
  Rational fact(1);
  for (unsigned k = 0; k < n; ++k) {
    if (k > 0) fact *= Rational(static_cast<long>(k));
    const Rational v = Rational(1) / fact;
    if (k % 2 == 1) sin_s[k] = (k % 4 == 1) ? v : -v;
    else cos_s[k] = (k % 4 == 0) ? v : -v;
  }
  std::map<std::pair<unsigned, unsigned>, std::vector<Rational>> cache;
  auto trig_series = [&](unsigned q, unsigned r) -> const std::vector<Rational>& {
    auto key = std::make_pair(q, r);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<Rational> s = one;
    for (unsigned i = 0; i < q; ++i) s = series_mul(s, cos_s);
    for (unsigned i = 0; i < r; ++i) s = series_mul(s, sin_s);
    return cache.emplace(key, std::move(s)).first->second;
  };
  std::vector<Rational> out(n);
  for (const auto& t : f.terms()) {
    if (t.x_pow > order) continue;
    const auto& s = trig_series(t.cos_pow, t.sin_pow);
    for (unsigned k = 0; k + t.x_pow < n; ++k)
      if (!s[k].is_zero()) out[k + t.x_pow] += t.coeff * s[k];
  }
  return out;
}

MtpFunction reduce_pythagorean(const MtpFunction& f) {
  std::vector<MtpTerm> out;
  for (const auto& t : f.terms()) {
    const unsigned k = t.sin_pow / 2;
    const unsigned e = t.sin_pow % 2;
    // (1 - cos^2)^k = sum_j C(k, j) (-1)^j cos^(2j)
    Integer binom = 1;
    for (unsigned j = 0; j <= k; ++j) {
      Rational c = t.coeff * Rational(binom);
      if (j % 2 == 1) c = -c;
      out.push_back({c, t.x_pow, t.cos_pow + 2 * j, e});
      binom = binom * (k - j) / (j + 1);
    }
  }
  return normalize(std::move(out));
}

MtpTerm common_monomial(const MtpFunction& f) {
  MtpTerm m{Rational(1), 0, 0, 0};
  bool first = true;
  for (const auto& t : f.terms()) {
    if (first) {
      m.x_pow = t.x_pow;
      m.cos_pow = t.cos_pow;
      m.sin_pow = t.sin_pow;
      first = false;
    } else {
      m.x_pow = std::min(m.x_pow, t.x_pow);
      m.cos_pow = std::min(m.cos_pow, t.cos_pow);
      m.sin_pow = std::min(m.sin_pow, t.sin_pow);
    }
  }
  return m;
}

MtpFunction divide_monomial(const MtpFunction& f, const MtpTerm& m) {
  std::vector<MtpTerm> out;
  for (const auto& t : f.terms())
    out.push_back({t.coeff / m.coeff, t.x_pow - m.x_pow, t.cos_pow - m.cos_pow, t.sin_pow - m.sin_pow});
  return normalize(std::move(out));
}

MtpFunction primitive(const MtpFunction& f) {
  if (f.is_zero()) return f;
  Integer den_lcm = 1, num_gcd = 0;
  for (const auto& t : f.terms()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.denominator().get_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.numerator().get_mpz_t());
  }
  return f * Rational(den_lcm, num_gcd);
}

Rational positive_ratio(const MtpFunction& a, const MtpFunction& b) {
  if (a.size() != b.size() || a.is_zero()) return Rational(0);
  const Rational r = a.terms()[0].coeff / b.terms()[0].coeff;
  if (r.sign() <= 0) return Rational(0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto& s = a.terms()[i];
    const auto& t = b.terms()[i];
    if (s.key() != t.key() || s.coeff != r * t.coeff) return Rational(0);
  }
  return r;
}

std::string render(const MtpFunction& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& t : f.terms()) {
    const Rational mag = t.coeff.abs();
    if (out.empty())
      out += t.coeff.sign() < 0 ? "-" : "";
    else
      out += t.coeff.sign() < 0 ? " - " : " + ";
    std::vector<std::string> factors;
    if (mag != Rational(1) || (t.x_pow == 0 && t.cos_pow == 0 && t.sin_pow == 0)) factors.push_back(mag.str());
    auto add = [&](const std::string& base, unsigned e) {
      if (e == 1) factors.push_back(base);
      else if (e > 1) factors.push_back(base + "^" + std::to_string(e));
    };
    add("x", t.x_pow);
    add("cos(x)", t.cos_pow);
    add("sin(x)", t.sin_pow);
    for (std::size_t i = 0; i < factors.size(); ++i) out += (i ? "*" : "") + factors[i];
  }
  return out;
}

Enclosure ScaledPi::enclose(unsigned digits) const {
  if (is_rational()) return Enclosure(rational_part);
  return as_pi_polynomial().enclose(digits);
}

Rational ScaledPi::lower_bracket(unsigned places) const {
  if (is_rational()) return rational_part;
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, places);
  return Rational((enclose(places + 4).lo() * Rational(scale)).floor(), scale);
}

Rational ScaledPi::upper_bracket(unsigned places) const {
  if (is_rational()) return rational_part;
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, places);
  return Rational((enclose(places + 4).hi() * Rational(scale)).ceil(), scale);
}

std::string ScaledPi::str() const {
  if (is_rational()) return rational_part.str();
  std::string pi;
  const Rational& c = pi_part;
  if (c == Rational(1)) pi = "pi";
  else if (c == Rational(-1)) pi = "-pi";
  else if (c.numerator() == 1) pi = "pi/" + c.denominator().get_str();
  else if (c.is_integer()) pi = c.str() + "*pi";
  else pi = "(" + c.str() + ")*pi";
  if (rational_part.is_zero()) return pi;
  return rational_part.str() + " + " + pi;
}

int compare(const ScaledPi& a, const ScaledPi& b) {
  return pipoly_sign(a.as_pi_polynomial() - b.as_pi_polynomial());
}

std::string IntervalSpec::str() const {
  return std::string(left_open ? "(" : "[") + left.str() + ", " + right.str() + (right_open ? ")" : "]");
}

}  // namespace mtp

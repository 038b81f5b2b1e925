#include "mtp/enclosure.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "mtp/errors.hpp"

namespace mtp {

namespace {

// pi to 110 decimals; the enclosure truncates this and adds one ulp.
constexpr std::string_view kPiDigits =
    "31415926535897932384626433832795028841971693993751058209749445923078"
    "164062862089986280348253421170679821480865132823066470938";

Integer pow10(unsigned e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

Integer pow2(unsigned e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

// Dyadic grid fine enough that two outward roundings cost < 10^-digits / 4.
unsigned grid_bits(unsigned digits) {
  return static_cast<unsigned>(std::ceil(digits * 3.3219280948873623)) + 3;
}

// Sum of the alternating series sum_k (-1)^k x^(2k+s) / (2k+s)!, s = 1 for
// sin and 0 for cos. Once term magnitudes are nonincreasing, consecutive
// partial sums bracket the limit.
Enclosure alternating_series(const Rational& x, unsigned digits, unsigned s) {
  if (x.abs() > Rational(64)) throw std::domain_error("trig enclosure argument outside [-64, 64]");
  const Rational x2 = x * x;
  const Rational half_tol = pow10_neg(digits) / Rational(2);
  Rational term = s == 1 ? x : Rational(1);  // t_0
  Rational sum = term;
  for (unsigned k = 0;; ++k) {
    // t_{k+1} = -t_k * x^2 / ((2k+1+s)(2k+2+s))
    const long a = 2 * static_cast<long>(k) + 1 + s;
    Rational next = -term * x2 / Rational(a * (a + 1));
    // ratio t_{k+2}/t_{k+1} must be <= 1 in magnitude for bracketing
    const long b = a + 2;
    const bool decreasing = x2 <= Rational(b * (b + 1));
    if (decreasing && next.abs() < half_tol) {
      Rational other = sum + next;
      Enclosure e(std::min(sum, other), std::max(sum, other));
      return e.round(grid_bits(digits));
    }
    sum += next;
    term = std::move(next);
  }
}

}  // namespace

Enclosure::Enclosure(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (hi_ < lo_) throw std::invalid_argument("enclosure with lo > hi");
}

int Enclosure::sign() const {
  if (lo_.sign() > 0) return 1;
  if (hi_.sign() < 0) return -1;
  if (lo_.is_zero() && hi_.is_zero()) return 0;
  return kUndecided;
}

Enclosure Enclosure::round(unsigned bits) const {
  const Integer scale = pow2(bits);
  const Rational lo_scaled = lo_ * Rational(scale);
  const Rational hi_scaled = hi_ * Rational(scale);
  if (lo_scaled.is_integer() && hi_scaled.is_integer()) return *this;
  return Enclosure(Rational(lo_scaled.floor(), scale), Rational(hi_scaled.ceil(), scale));
}

Enclosure Enclosure::pow(unsigned e) const {
  Enclosure r(Rational(1));
  Enclosure base = *this;
  if (e % 2 == 0 && contains_zero() && !is_point()) {
    // even power of an interval straddling 0
    const Rational m = std::max(lo_.abs(), hi_.abs()).pow(e);
    return Enclosure(Rational(0), m);
  }
  while (e) {
    if (e & 1U) r *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return r;
}

Enclosure Enclosure::abs() const {
  if (lo_.sign() >= 0) return *this;
  if (hi_.sign() <= 0) return -*this;
  return Enclosure(Rational(0), std::max(-lo_, hi_));
}

Enclosure& Enclosure::operator+=(const Enclosure& o) {
  lo_ += o.lo_;
  hi_ += o.hi_;
  return *this;
}

Enclosure& Enclosure::operator-=(const Enclosure& o) {
  lo_ -= o.hi_;
  hi_ -= o.lo_;
  return *this;
}

Enclosure& Enclosure::operator*=(const Enclosure& o) {
  if (is_point() && o.is_point()) {
    lo_ *= o.lo_;
    hi_ = lo_;
    return *this;
  }
  Rational p[4] = {lo_ * o.lo_, lo_ * o.hi_, hi_ * o.lo_, hi_ * o.hi_};
  lo_ = *std::min_element(p, p + 4);
  hi_ = *std::max_element(p, p + 4);
  return *this;
}

Enclosure& Enclosure::operator/=(const Enclosure& o) {
  if (o.contains_zero()) throw std::domain_error("enclosure division by an interval containing 0");
  return *this *= Enclosure(Rational(1) / o.hi_, Rational(1) / o.lo_);
}

std::string Enclosure::decimal(unsigned places) const { return to_decimal(mid(), places); }

std::ostream& operator<<(std::ostream& os, const Enclosure& e) {
  return os << '[' << e.lo() << ", " << e.hi() << ']';
}

std::string to_decimal(const Rational& r, unsigned places) {
  const Integer scale = pow10(places);
  const Rational scaled = r.abs() * Rational(scale);
  Integer q = (scaled + Rational(1, 2)).floor();
  std::string digits = q.get_str();
  if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
  std::string out = r.sign() < 0 && q != 0 ? "-" : "";
  out += digits.substr(0, digits.size() - places);
  if (places) out += "." + digits.substr(digits.size() - places);
  return out;
}

Enclosure pi_enclosure(unsigned digits) {
  if (digits == 0) throw std::invalid_argument("pi_enclosure needs digits >= 1");
  if (digits > kPiStoredDigits)
    throw PrecisionUnavailable("pi requested to " + std::to_string(digits) + " digits; " +
                               std::to_string(kPiStoredDigits) + " stored");
  const unsigned places = digits + 1;
  const Integer truncated(std::string(kPiDigits.substr(0, places + 1)), 10);
  const Integer scale = pow10(places);
  return Enclosure(Rational(truncated, scale), Rational(truncated + 1, scale));
}

Enclosure sin_enclosure(const Rational& x, unsigned digits) {
  if (x.is_zero()) return Enclosure(Rational(0));
  return alternating_series(x, digits, 1);
}

Enclosure cos_enclosure(const Rational& x, unsigned digits) {
  if (x.is_zero()) return Enclosure(Rational(1));
  return alternating_series(x, digits, 0);
}

Enclosure sin_enclosure(const Enclosure& x, unsigned digits) {
  if (x.is_point()) return sin_enclosure(x.lo(), digits);
  if (x.lo().sign() < 0 || x.hi() > Rational(3)) throw std::domain_error("interval sin argument outside [0, 3]");
  // sin is concave on [0, pi] so the minimum sits at an endpoint
  const Enclosure a = sin_enclosure(x.lo(), digits);
  const Enclosure b = sin_enclosure(x.hi(), digits);
  const Enclosure half_pi = pi_enclosure(5) / Enclosure(Rational(2));
  Rational hi = std::max(a.hi(), b.hi());
  if (x.lo() <= half_pi.hi() && x.hi() >= half_pi.lo()) hi = Rational(1);
  return Enclosure(std::min(a.lo(), b.lo()), hi);
}

Enclosure cos_enclosure(const Enclosure& x, unsigned digits) {
  if (x.is_point()) return cos_enclosure(x.lo(), digits);
  if (x.lo().sign() < 0 || x.hi() > Rational(3)) throw std::domain_error("interval cos argument outside [0, 3]");
  return Enclosure(cos_enclosure(x.hi(), digits).lo(), cos_enclosure(x.lo(), digits).hi());
}

PiPolynomial::PiPolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

PiPolynomial PiPolynomial::monomial(const Rational& c, unsigned power) {
  std::vector<Rational> v(power + 1);
  v[power] = c;
  return PiPolynomial(std::move(v));
}

void PiPolynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Enclosure PiPolynomial::enclose(unsigned digits) const {
  if (c_.empty()) return Enclosure(Rational(0));
  const Enclosure pi = pi_enclosure(digits);
  Enclosure acc(c_.back());
  for (std::size_t i = c_.size() - 1; i-- > 0;) {
    acc *= pi;
    acc += Enclosure(c_[i]);
  }
  return acc;
}

PiPolynomial& PiPolynomial::operator+=(const PiPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

PiPolynomial& PiPolynomial::operator-=(const PiPolynomial& o) { return *this += -o; }

PiPolynomial operator*(const PiPolynomial& a, const PiPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return PiPolynomial(std::move(r));
}

PiPolynomial PiPolynomial::operator*(const Rational& s) const {
  std::vector<Rational> r = c_;
  for (auto& c : r) c *= s;
  return PiPolynomial(std::move(r));
}

std::string PiPolynomial::str() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Rational& c = c_[i];
    if (c.is_zero()) continue;
    const Rational mag = c.abs();
    if (out.empty())
      out += c.sign() < 0 ? "-" : "";
    else
      out += c.sign() < 0 ? " - " : " + ";
    const bool unit = mag == Rational(1);
    if (i == 0 || !unit) out += mag.str();
    if (i > 0) {
      if (!unit) out += "*";
      out += "pi";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

Enclosure pipoly_enclosure(const PiPolynomial& p, unsigned digits) {
  if (p.is_zero()) return Enclosure(Rational(0));
  unsigned d = std::max(1U, std::min(digits, kPiStoredDigits));
  for (;;) {
    Enclosure e = p.enclose(d);
    if (e.sign() != Enclosure::kUndecided) return e;
    if (d >= kPiStoredDigits)
      throw PrecisionInsufficient("pi-polynomial " + p.str() + " not separated from 0 with " +
                                  std::to_string(kPiStoredDigits) + " digits of pi");
    d = std::min(2 * d, kPiStoredDigits);
  }
}

int pipoly_sign(const PiPolynomial& p, unsigned digits) { return pipoly_enclosure(p, digits).sign(); }

}  // namespace mtp

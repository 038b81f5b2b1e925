#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mtp/rational.hpp"

namespace mtp {

/// Closed rational interval [lo, hi] known to contain some real value.
/// Endpoints are exact, so arithmetic needs no directed rounding; round()
/// coarsens endpoints outward when they grow too long.
class Enclosure {
 public:
  Enclosure() = default;
  explicit Enclosure(Rational point) : lo_(point), hi_(std::move(point)) {}
  Enclosure(Rational lo, Rational hi);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  Rational mid() const { return (lo_ + hi_) / Rational(2); }
  bool is_point() const { return lo_ == hi_; }

  bool contains(const Rational& v) const { return lo_ <= v && v <= hi_; }
  bool contains(const Enclosure& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
  bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
  bool overlaps(const Enclosure& o) const { return lo_ <= o.hi_ && o.lo_ <= hi_; }

  /// +1 or -1 when the enclosure excludes zero, 0 if it is exactly {0};
  /// otherwise the sign is undecided and 2 is returned.
  int sign() const;
  static constexpr int kUndecided = 2;

  /// Outward rounding of both endpoints to multiples of 2^-bits.
  Enclosure round(unsigned bits) const;

  Enclosure pow(unsigned e) const;
  Enclosure abs() const;

  Enclosure& operator+=(const Enclosure& o);
  Enclosure& operator-=(const Enclosure& o);
  Enclosure& operator*=(const Enclosure& o);
  Enclosure& operator/=(const Enclosure& o);  // throws if o contains 0

  friend Enclosure operator+(Enclosure a, const Enclosure& b) { return a += b; }
  friend Enclosure operator-(Enclosure a, const Enclosure& b) { return a -= b; }
  friend Enclosure operator*(Enclosure a, const Enclosure& b) { return a *= b; }
  friend Enclosure operator/(Enclosure a, const Enclosure& b) { return a /= b; }
  Enclosure operator-() const { return Enclosure(-hi_, -lo_); }

  friend bool operator==(const Enclosure&, const Enclosure&) = default;

  /// Decimal rendering of the midpoint with the given number of places.
  std::string decimal(unsigned places) const;

 private:
  Rational lo_, hi_;
};

std::ostream& operator<<(std::ostream& os, const Enclosure& e);

/// Round a rational to `places` decimals (half away from zero), as text.
std::string to_decimal(const Rational& r, unsigned places);

/// Number of decimal digits of pi held in the stored constant.
inline constexpr unsigned kPiStoredDigits = 100;

/// lo < pi < hi with hi - lo < 10^-digits. Throws PrecisionUnavailable past
/// the stored constant.
Enclosure pi_enclosure(unsigned digits);

/// Alternating-series enclosures of sin and cos at a rational point,
/// width < 10^-digits. Requires |x| <= 64.
Enclosure sin_enclosure(const Rational& x, unsigned digits);
Enclosure cos_enclosure(const Rational& x, unsigned digits);

/// Enclosures over an argument interval inside [0, 3].
Enclosure sin_enclosure(const Enclosure& x, unsigned digits);
Enclosure cos_enclosure(const Enclosure& x, unsigned digits);

/// Exact polynomial in pi: sum of c[i] * pi^i.
class PiPolynomial {
 public:
  PiPolynomial() = default;
  explicit PiPolynomial(std::vector<Rational> coeffs);
  static PiPolynomial constant(const Rational& c) { return PiPolynomial({c}); }
  static PiPolynomial monomial(const Rational& c, unsigned power);

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rational coeff(unsigned i) const { return i < c_.size() ? c_[i] : Rational(0); }

  /// Interval value using a pi enclosure at the given digits.
  Enclosure enclose(unsigned digits) const;

  PiPolynomial& operator+=(const PiPolynomial& o);
  PiPolynomial& operator-=(const PiPolynomial& o);
  friend PiPolynomial operator+(PiPolynomial a, const PiPolynomial& b) { return a += b; }
  friend PiPolynomial operator-(PiPolynomial a, const PiPolynomial& b) { return a -= b; }
  friend PiPolynomial operator*(const PiPolynomial& a, const PiPolynomial& b);
  PiPolynomial operator*(const Rational& s) const;
  PiPolynomial operator-() const { return *this * Rational(-1); }

  friend bool operator==(const PiPolynomial&, const PiPolynomial&) = default;

  /// e.g. "4*pi^7 - 7680", highest power first.
  std::string str() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Sign of a pi-polynomial. Starts at `digits` and doubles the pi precision
/// until the enclosure excludes zero; PrecisionInsufficient past the stored
/// constant.
int pipoly_sign(const PiPolynomial& p, unsigned digits = 30);

/// Enclosure of p whose sign is decided (same escalation as pipoly_sign).
Enclosure pipoly_enclosure(const PiPolynomial& p, unsigned digits = 30);

}  // namespace mtp

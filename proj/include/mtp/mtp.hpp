#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "mtp/enclosure.hpp"
#include "mtp/polynomial.hpp"
#include "mtp/rational.hpp"

namespace mtp {

/// coeff * x^x_pow * cos^cos_pow(x) * sin^sin_pow(x)
struct MtpTerm {
  Rational coeff;
  unsigned x_pow = 0;
  unsigned cos_pow = 0;
  unsigned sin_pow = 0;

  std::tuple<unsigned, unsigned, unsigned> key() const { return {x_pow, cos_pow, sin_pow}; }
  friend bool operator==(const MtpTerm&, const MtpTerm&) = default;
};

/// Canonical sum of MTP terms: merged, nonzero, sorted by (x, cos, sin)
/// exponents. The empty sum is the zero function.
class MtpFunction {
 public:
  MtpFunction() = default;

  static MtpFunction constant(const Rational& c);
  static MtpFunction monomial(const Rational& c, unsigned x_pow, unsigned cos_pow = 0, unsigned sin_pow = 0);

  const std::vector<MtpTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  MtpFunction& operator+=(const MtpFunction& o);
  MtpFunction& operator-=(const MtpFunction& o);
  friend MtpFunction operator+(MtpFunction a, const MtpFunction& b) { return a += b; }
  friend MtpFunction operator-(MtpFunction a, const MtpFunction& b) { return a -= b; }
  friend MtpFunction operator*(const MtpFunction& a, const MtpFunction& b);
  MtpFunction operator*(const Rational& s) const;
  MtpFunction operator-() const { return *this * Rational(-1); }
  MtpFunction pow(unsigned e) const;

  friend bool operator==(const MtpFunction&, const MtpFunction&) = default;

 private:
  friend MtpFunction normalize(std::vector<MtpTerm> terms);
  std::vector<MtpTerm> terms_;
};

MtpFunction normalize(std::vector<MtpTerm> terms);
MtpFunction differentiate(const MtpFunction& f);

/// Exact f(0).
Rational eval_at_zero(const MtpFunction& f);
/// Exact f(pi/2) using sin = 1, cos = 0.
PiPolynomial eval_at_half_pi(const MtpFunction& f);
/// Interval value at a rational point in [0, 2] (any |x| <= 10 works).
Enclosure eval_enclosure(const MtpFunction& f, const Rational& x, unsigned digits);
/// Interval value over an argument interval inside [0, 3].
Enclosure eval_enclosure(const MtpFunction& f, const Enclosure& x, unsigned digits);

/// Exact Maclaurin coefficients of f up to x^order.
std::vector<Rational> maclaurin(const MtpFunction& f, unsigned order);

/// Rewrites sin^(2k+e) as (1 - cos^2)^k sin^e so every term has sin_pow <= 1.
MtpFunction reduce_pythagorean(const MtpFunction& f);

/// Largest monomial x^a cos^b sin^c dividing every term.
MtpTerm common_monomial(const MtpFunction& f);
/// f / (x^a cos^b sin^c); the monomial must divide every term.
MtpFunction divide_monomial(const MtpFunction& f, const MtpTerm& m);
/// Positive rational multiple of f with coprime integer coefficients.
MtpFunction primitive(const MtpFunction& f);
/// c > 0 with a == c * b, or 0 when a and b are not positively proportional.
Rational positive_ratio(const MtpFunction& a, const MtpFunction& b);

/// Parseable rendering, e.g. "2*x^7 + 135*cos(x)^2*sin(x)".
std::string render(const MtpFunction& f);

/// rational_part + pi_part * pi
struct ScaledPi {
  Rational rational_part;
  Rational pi_part;

  static ScaledPi rational(const Rational& r) { return {r, Rational(0)}; }
  static ScaledPi half_pi() { return {Rational(0), Rational(1, 2)}; }

  bool is_rational() const { return pi_part.is_zero(); }
  bool is_half_pi() const { return rational_part.is_zero() && pi_part == Rational(1, 2); }
  PiPolynomial as_pi_polynomial() const { return PiPolynomial({rational_part, pi_part}); }
  Enclosure enclose(unsigned digits) const;
  /// Rational lower / upper brackets rounded to `places` decimals (exact when
  /// the value is rational).
  Rational lower_bracket(unsigned places = 2) const;
  Rational upper_bracket(unsigned places = 2) const;
  std::string str() const;

  friend bool operator==(const ScaledPi&, const ScaledPi&) = default;
};

/// Exact comparison: -1, 0, +1.
int compare(const ScaledPi& a, const ScaledPi& b);

struct IntervalSpec {
  ScaledPi left;
  ScaledPi right;
  bool left_open = true;
  bool right_open = true;

  std::string str() const;
  friend bool operator==(const IntervalSpec&, const IntervalSpec&) = default;
};

}  // namespace mtp

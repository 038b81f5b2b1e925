#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mtp/enclosure.hpp"
#include "mtp/rational.hpp"

namespace mtp {

/// Dense univariate polynomial with rational coefficients; c[i] multiplies
/// x^i. Trailing zeros are trimmed so the zero polynomial is empty.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coeffs);
  static RationalPolynomial monomial(const Rational& c, unsigned power);

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rational coeff(unsigned i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const Rational& leading() const { return c_.back(); }
  /// Lowest power with a nonzero coefficient (0 for the zero polynomial).
  unsigned low_power() const;

  Rational operator()(const Rational& x) const;
  Enclosure operator()(const Enclosure& x) const;
  /// Exact value at x = pi/2.
  PiPolynomial at_half_pi() const;

  RationalPolynomial derivative() const;
  /// p(m * x)
  RationalPolynomial scale_argument(const Rational& m) const;
  /// x^k * p
  RationalPolynomial shift(unsigned k) const;

  /// Euclidean division; divisor must be nonzero.
  std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& d) const;

  RationalPolynomial& operator+=(const RationalPolynomial& o);
  RationalPolynomial& operator-=(const RationalPolynomial& o);
  RationalPolynomial& operator*=(const Rational& s);
  friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
  friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
  friend RationalPolynomial operator*(RationalPolynomial a, const Rational& s) { return a *= s; }
  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
  RationalPolynomial operator-() const { return *this * Rational(-1); }

  friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

  /// Highest power first, e.g. "-25357/2027520*x^13 + 115447/3548160*x^11".
  std::string str() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

}  // namespace mtp

#pragma once

#include <string>
#include <vector>

#include "mtp/mtp.hpp"
#include "mtp/polynomial.hpp"

namespace mtp {

enum class TrigKind { sin, cos };
std::string to_string(TrigKind k);

/// coeff * x^x_pow * kind(multiplier * x)
struct MultiAngleTerm {
  Rational coeff;
  unsigned x_pow = 0;
  TrigKind kind = TrigKind::sin;
  unsigned multiplier = 1;

  friend bool operator==(const MultiAngleTerm&, const MultiAngleTerm&) = default;
};

/// poly_part + sum of multiple-angle terms, sorted by (kind, multiplier, x_pow).
struct MultiAngleForm {
  RationalPolynomial poly_part;
  std::vector<MultiAngleTerm> trig_terms;

  Enclosure eval_enclosure(const Rational& x, unsigned digits) const;
  bool is_zero() const { return poly_part.is_zero() && trig_terms.empty(); }
  std::string str() const;
  friend bool operator==(const MultiAngleForm&, const MultiAngleForm&) = default;
};

struct PowerProductReduction {
  Rational constant;
  struct Part {
    Rational coeff;
    TrigKind kind;
    unsigned multiplier;
  };
  std::vector<Part> parts;  // decreasing multiplier
};

/// cos^q(x) sin^r(x) as constant + sum coeff * kind(multiplier * x).
PowerProductReduction reduce_power_product(unsigned q, unsigned r);

MultiAngleForm to_multi_angle(const MtpFunction& f);
/// Merges like terms and sorts; drops zero coefficients.
MultiAngleForm normalize(MultiAngleForm form);
MultiAngleForm operator+(const MultiAngleForm& a, const MultiAngleForm& b);

struct SignSplit {
  MultiAngleForm plus;
  MultiAngleForm minus;
};
SignSplit split_signs(const MultiAngleForm& form);

/// One bound site for stage III: every trig term sharing sign, kind and
/// multiplier, with their x-power coefficients collected in `coeff`.
struct Addend {
  int sign = 1;
  TrigKind kind = TrigKind::sin;
  unsigned multiplier = 1;
  RationalPolynomial coeff;

  /// e.g. "+sin(3x)", "-cos(x)"
  std::string label() const;
  friend bool operator==(const Addend&, const Addend&) = default;
};

/// Addends in index order: f+ first, then f-; inside each, by lowest power
/// of x in the coefficient, then multiplier, then cos before sin.
std::vector<Addend> addends(const SignSplit& split);

}  // namespace mtp

#pragma once

#include <map>
#include <string>
#include <vector>

#include "mtp/angle_reduce.hpp"
#include "mtp/mtp.hpp"
#include "mtp/polynomial.hpp"

namespace mtp {

enum class BoundDirection { lower, upper };

struct BoundSpec {
  TrigKind kind = TrigKind::sin;
  BoundDirection direction = BoundDirection::lower;
  unsigned index = 0;
  unsigned degree = 0;
  /// The bound holds for |t| <= sqrt(validity_radius_sq) = sqrt((n+3)(n+4)).
  unsigned long validity_radius_sq = 0;

  static BoundSpec make(TrigKind kind, BoundDirection direction, unsigned index);
};

using IndexAssignment = std::vector<unsigned>;

/// Truncated Maclaurin polynomial of sin/cos of the given degree.
RationalPolynomial taylor_poly(TrigKind kind, unsigned degree);

/// coeff * x^x_pow * T(multiplier * x), T the lower bound when coeff > 0 and
/// the upper one otherwise. `right_upper` is a rational upper bracket of the
/// interval's right endpoint used for the validity check.
RationalPolynomial bound_addend(const Rational& coeff, unsigned x_pow, TrigKind kind, unsigned multiplier,
                                unsigned index, const Rational& right_upper);

/// The same for a whole addend (every monomial of its coefficient).
RationalPolynomial bound_addend(const Addend& a, unsigned index, const Rational& right_upper);

/// Smallest index whose bound is valid on [0, right_upper] for the addend.
unsigned min_valid_index(const Addend& a, const Rational& right_upper);

/// Rational upper bracket of an interval's right endpoint (158/100 for pi/2).
Rational right_upper_bracket(const IntervalSpec& iv);

/// P = poly part of f+ and f- plus the per-addend bounds.
RationalPolynomial assemble(const SignSplit& split, const IndexAssignment& indices, const IntervalSpec& interval);
IndexAssignment min_valid_indices(const SignSplit& split, const IntervalSpec& interval);

/// Maps "+sin(3x)"-style addend labels to indices in addend order. Throws
/// IndexArityMismatch on a missing or unknown label.
IndexAssignment indices_from_labels(const SignSplit& split, const std::map<std::string, unsigned>& labelled);

}  // namespace mtp

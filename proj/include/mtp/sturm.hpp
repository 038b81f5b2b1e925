#pragma once

#include <utility>
#include <vector>

#include "mtp/mtp.hpp"
#include "mtp/polynomial.hpp"

namespace mtp {

/// P, P', then negated Euclidean remainders until the remainder vanishes.
struct SturmChain {
  std::vector<RationalPolynomial> polys;

  /// Sign changes of the chain at x, zeros skipped.
  unsigned variations(const Rational& x) const;
};

SturmChain sturm_chain(const RationalPolynomial& p);

/// Distinct real roots in (a, b); P(a), P(b) must be nonzero.
unsigned count_distinct_roots(const RationalPolynomial& p, const Rational& a, const Rational& b);
unsigned count_distinct_roots(const SturmChain& chain, const Rational& a, const Rational& b);

/// Value of P at a point a + c*pi, exact.
PiPolynomial evaluate_at(const RationalPolynomial& p, const ScaledPi& x);

struct Segment {
  Rational a;
  Rational b;
  friend bool operator==(const Segment&, const Segment&) = default;
};

/// Rational segment [a', b'] covering the interval with P(a'), P(b') != 0.
Segment extend_segment(const RationalPolynomial& p, const IntervalSpec& interval);

struct PolyPositivityCertificate {
  RationalPolynomial P;
  IntervalSpec original_interval;
  Segment extended_segment;
  unsigned root_count = 0;
  /// Rational interval endpoints where P vanishes.
  std::vector<Rational> boundary_zeros;
  int sign_at_a = 0;
  int sign_at_b = 0;
  ScaledPi witness_point;
  PiPolynomial witness_value;
  Enclosure witness_enclosure;
  int witness_sign = 0;

  friend bool operator==(const PolyPositivityCertificate&, const PolyPositivityCertificate&) = default;
};

/// Proves P > 0 on the open interval: no roots inside beyond the known
/// boundary zeros, and a positive value at the witness point.
PolyPositivityCertificate certify_positive(const RationalPolynomial& p, const IntervalSpec& interval,
                                           unsigned digits = 30);

}  // namespace mtp

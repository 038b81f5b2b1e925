#include "mtp/taylor_bounds.hpp"

#include <stdexcept>

#include "mtp/errors.hpp"

namespace mtp {

namespace {

// Lemma 1: lower bounds truncate right after a negative-sign term, upper
// bounds after a positive one.
unsigned bound_degree(TrigKind kind, BoundDirection dir, unsigned index) {
  if (kind == TrigKind::sin) return 4 * index + (dir == BoundDirection::lower ? 3 : 1);
  return 4 * index + (dir == BoundDirection::lower ? 2 : 0);
}

bool covers(const BoundSpec& b, unsigned multiplier, const Rational& right_upper) {
  const Rational reach = right_upper * Rational(static_cast<long>(multiplier));
  return reach * reach <= Rational(static_cast<long>(b.validity_radius_sq));
}

BoundDirection direction_for(int sign) { return sign > 0 ? BoundDirection::lower : BoundDirection::upper; }

}  // namespace

BoundSpec BoundSpec::make(TrigKind kind, BoundDirection direction, unsigned index) {
  BoundSpec b;
  b.kind = kind;
  b.direction = direction;
  b.index = index;
  b.degree = bound_degree(kind, direction, index);
  b.validity_radius_sq = static_cast<unsigned long>(b.degree + 3) * (b.degree + 4);
  return b;
}

RationalPolynomial taylor_poly(TrigKind kind, unsigned degree) {
  const unsigned parity = kind == TrigKind::sin ? 1 : 0;
  if (degree % 2 != parity)
    throw std::invalid_argument("taylor_poly: degree parity does not match " + to_string(kind));
  std::vector<Rational> c(degree + 1);
  Rational fact(1);
  for (unsigned k = 0; k <= degree; ++k) {
    if (k > 0) fact *= Rational(static_cast<long>(k));
    if (k % 2 != parity) continue;
    const bool negative = (k / 2) % 2 == 1;
    c[k] = negative ? -(Rational(1) / fact) : Rational(1) / fact;
  }
  return RationalPolynomial(std::move(c));
}

RationalPolynomial bound_addend(const Rational& coeff, unsigned x_pow, TrigKind kind, unsigned multiplier,
                                unsigned index, const Rational& right_upper) {
  const BoundSpec b = BoundSpec::make(kind, direction_for(coeff.sign()), index);
  if (!covers(b, multiplier, right_upper))
    throw ValidityRadiusExceeded("bound " + to_string(kind) + " degree " + std::to_string(b.degree) +
                                 " invalid for argument " + std::to_string(multiplier) + "*x up to " +
                                 right_upper.str());
  return (taylor_poly(kind, b.degree).scale_argument(Rational(static_cast<long>(multiplier))) * coeff).shift(x_pow);
}

RationalPolynomial bound_addend(const Addend& a, unsigned index, const Rational& right_upper) {
  const BoundSpec b = BoundSpec::make(a.kind, direction_for(a.sign), index);
  if (!covers(b, a.multiplier, right_upper))
    throw ValidityRadiusExceeded("addend " + a.label() + ": index " + std::to_string(index) + " (degree " +
                                 std::to_string(b.degree) + ") is not valid up to " +
                                 std::to_string(a.multiplier) + "*" + right_upper.str());
  return taylor_poly(a.kind, b.degree).scale_argument(Rational(static_cast<long>(a.multiplier))) * a.coeff;
}

unsigned min_valid_index(const Addend& a, const Rational& right_upper) {
  for (unsigned l = 0;; ++l)
    if (covers(BoundSpec::make(a.kind, direction_for(a.sign), l), a.multiplier, right_upper)) return l;
}

Rational right_upper_bracket(const IntervalSpec& iv) { return iv.right.upper_bracket(2); }

RationalPolynomial assemble(const SignSplit& split, const IndexAssignment& indices, const IntervalSpec& interval) {
  const auto adds = addends(split);
  if (adds.size() != indices.size())
    throw IndexArityMismatch("expected " + std::to_string(adds.size()) + " indices, got " +
                             std::to_string(indices.size()));
  const Rational b = right_upper_bracket(interval);
  RationalPolynomial p = split.plus.poly_part + split.minus.poly_part;
  for (std::size_t i = 0; i < adds.size(); ++i) p += bound_addend(adds[i], indices[i], b);
  return p;
}

IndexAssignment min_valid_indices(const SignSplit& split, const IntervalSpec& interval) {
  const Rational b = right_upper_bracket(interval);
  IndexAssignment out;
  for (const auto& a : addends(split)) out.push_back(min_valid_index(a, b));
  return out;
}

IndexAssignment indices_from_labels(const SignSplit& split, const std::map<std::string, unsigned>& labelled) {
  const auto adds = addends(split);
  IndexAssignment out;
  for (const auto& a : adds) {
    auto it = labelled.find(a.label());
    if (it == labelled.end()) throw IndexArityMismatch("no index given for addend " + a.label());
    out.push_back(it->second);
  }
  if (labelled.size() != adds.size()) {
    for (const auto& [label, idx] : labelled) {
      bool known = false;
      for (const auto& a : adds) known = known || a.label() == label;
      if (!known) throw IndexArityMismatch("unknown addend label " + label);
    }
  }
  return out;
}

}  // namespace mtp

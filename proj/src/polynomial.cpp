#include "mtp/polynomial.hpp"

#include <stdexcept>

namespace mtp {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

RationalPolynomial RationalPolynomial::monomial(const Rational& c, unsigned power) {
  std::vector<Rational> v(power + 1);
  v[power] = c;
  return RationalPolynomial(std::move(v));
}

void RationalPolynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

unsigned RationalPolynomial::low_power() const {
  for (unsigned i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return i;
  return 0;
}

Rational RationalPolynomial::operator()(const Rational& x) const {
  Rational acc;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

Enclosure RationalPolynomial::operator()(const Enclosure& x) const {
  Enclosure acc(Rational(0));
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + Enclosure(c_[i]);
  return acc;
}

PiPolynomial RationalPolynomial::at_half_pi() const {
  std::vector<Rational> v(c_.size());
  for (unsigned i = 0; i < c_.size(); ++i) v[i] = c_[i] * Rational(1, 2).pow(i);
  return PiPolynomial(std::move(v));
}

RationalPolynomial RationalPolynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return RationalPolynomial(std::move(v));
}

RationalPolynomial RationalPolynomial::scale_argument(const Rational& m) const {
  std::vector<Rational> v = c_;
  Rational f(1);
  for (auto& c : v) {
    c *= f;
    f *= m;
  }
  return RationalPolynomial(std::move(v));
}

RationalPolynomial RationalPolynomial::shift(unsigned k) const {
  if (c_.empty()) return {};
  std::vector<Rational> v(k);
  v.insert(v.end(), c_.begin(), c_.end());
  return RationalPolynomial(std::move(v));
}

std::pair<RationalPolynomial, RationalPolynomial> RationalPolynomial::divmod(const RationalPolynomial& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> r = c_;
  if (r.size() < d.c_.size()) return {RationalPolynomial(), *this};
  std::vector<Rational> q(r.size() - d.c_.size() + 1);
  const Rational inv_lead = Rational(1) / d.leading();
  for (std::size_t k = q.size(); k-- > 0;) {
    const Rational f = r[k + d.c_.size() - 1] * inv_lead;
    q[k] = f;
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j < d.c_.size(); ++j) r[k + j] -= f * d.c_[j];
  }
  r.resize(d.c_.size() - 1);
  return {RationalPolynomial(std::move(q)), RationalPolynomial(std::move(r))};
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const Rational& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return RationalPolynomial(std::move(v));
}

std::string RationalPolynomial::str() const {
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
      out += "x";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace mtp

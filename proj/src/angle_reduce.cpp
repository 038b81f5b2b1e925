#include "mtp/angle_reduce.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace mtp {

namespace {

Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

std::string monomial_str(const Rational& mag, unsigned x_pow, const std::string& trig) {
  std::vector<std::string> f;
  if (mag != Rational(1) || (x_pow == 0 && trig.empty())) f.push_back(mag.str());
  if (x_pow == 1) f.push_back("x");
  if (x_pow > 1) f.push_back("x^" + std::to_string(x_pow));
  if (!trig.empty()) f.push_back(trig);
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) out += (i ? "*" : "") + f[i];
  return out;
}

std::string trig_str(TrigKind kind, unsigned m) {
  return to_string(kind) + (m == 1 ? "(x)" : "(" + std::to_string(m) + "*x)");
}

}  // namespace

std::string to_string(TrigKind k) { return k == TrigKind::sin ? "sin" : "cos"; }

PowerProductReduction reduce_power_product(unsigned q, unsigned r) {
  // Expanding ((e^ix + e^-ix)/2)^q ((e^ix - e^-ix)/2i)^r, the exponential
  // e^{i(q+r-2k)x} carries c_k = sum_j (-1)^(k-j) C(q,j) C(r,k-j). Pairing
  // k with q+r-k yields cosines for even r and sines for odd r.
  const unsigned n = q + r;
  auto c = [&](unsigned k) {
    Integer s = 0;
    for (unsigned j = 0; j <= k; ++j) {
      Integer t = binomial(q, j) * binomial(r, k - j);
      s += ((k - j) % 2 == 0) ? t : Integer(-t);
    }
    return s;
  };
  Integer two_n1;
  mpz_ui_pow_ui(two_n1.get_mpz_t(), 2, n == 0 ? 0 : n - 1);
  const bool r_odd = r % 2 == 1;
  const int sgn = ((r_odd ? (r - 1) / 2 : r / 2) % 2 == 0) ? 1 : -1;
  PowerProductReduction out;
  for (unsigned k = 0; 2 * k < n; ++k) {
    const Rational coeff = Rational(c(k), two_n1) * Rational(sgn);
    if (!coeff.is_zero())
      out.parts.push_back({coeff, r_odd ? TrigKind::sin : TrigKind::cos, n - 2 * k});
  }
  if (n % 2 == 0 && !r_odd) out.constant = Rational(c(n / 2), two_n1 * 2) * Rational(sgn);
  if (n == 0) out.constant = Rational(1);
  return out;
}

MultiAngleForm normalize(MultiAngleForm form) {
  auto key = [](const MultiAngleTerm& t) { return std::make_tuple(t.kind, t.multiplier, t.x_pow); };
  std::sort(form.trig_terms.begin(), form.trig_terms.end(),
            [&](const MultiAngleTerm& a, const MultiAngleTerm& b) { return key(a) < key(b); });
  std::vector<MultiAngleTerm> merged;
  for (auto& t : form.trig_terms) {
    if (!merged.empty() && key(merged.back()) == key(t))
      merged.back().coeff += t.coeff;
    else
      merged.push_back(std::move(t));
    if (merged.back().coeff.is_zero()) merged.pop_back();
  }
  form.trig_terms = std::move(merged);
  return form;
}

MultiAngleForm operator+(const MultiAngleForm& a, const MultiAngleForm& b) {
  MultiAngleForm r;
  r.poly_part = a.poly_part + b.poly_part;
  r.trig_terms = a.trig_terms;
  r.trig_terms.insert(r.trig_terms.end(), b.trig_terms.begin(), b.trig_terms.end());
  return normalize(std::move(r));
}

MultiAngleForm to_multi_angle(const MtpFunction& f) {
  MultiAngleForm form;
  std::map<std::pair<unsigned, unsigned>, PowerProductReduction> cache;
  for (const auto& t : f.terms()) {
    auto key = std::make_pair(t.cos_pow, t.sin_pow);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, reduce_power_product(t.cos_pow, t.sin_pow)).first;
    const auto& red = it->second;
    if (!red.constant.is_zero()) form.poly_part += RationalPolynomial::monomial(t.coeff * red.constant, t.x_pow);
    for (const auto& p : red.parts) form.trig_terms.push_back({t.coeff * p.coeff, t.x_pow, p.kind, p.multiplier});
  }
  return normalize(std::move(form));
}

Enclosure MultiAngleForm::eval_enclosure(const Rational& x, unsigned digits) const {
  const unsigned work = digits + 12;
  Enclosure acc(poly_part(x));
  for (const auto& t : trig_terms) {
    const Rational arg = x * Rational(static_cast<long>(t.multiplier));
    const Enclosure v = t.kind == TrigKind::sin ? sin_enclosure(arg, work) : cos_enclosure(arg, work);
    acc += Enclosure(t.coeff * x.pow(t.x_pow)) * v;
  }
  return acc;
}

std::string MultiAngleForm::str() const {
  std::string out;
  auto append = [&](const Rational& c, unsigned x_pow, const std::string& trig) {
    if (out.empty())
      out += c.sign() < 0 ? "-" : "";
    else
      out += c.sign() < 0 ? " - " : " + ";
    out += monomial_str(c.abs(), x_pow, trig);
  };
  const auto& pc = poly_part.coeffs();
  for (std::size_t i = pc.size(); i-- > 0;)
    if (!pc[i].is_zero()) append(pc[i], static_cast<unsigned>(i), "");
  for (const auto& t : trig_terms) append(t.coeff, t.x_pow, trig_str(t.kind, t.multiplier));
  return out.empty() ? "0" : out;
}

SignSplit split_signs(const MultiAngleForm& form) {
  SignSplit s;
  const auto& pc = form.poly_part.coeffs();
  std::vector<Rational> plus(pc.size()), minus(pc.size());
  for (std::size_t i = 0; i < pc.size(); ++i) (pc[i].sign() > 0 ? plus : minus)[i] = pc[i];
  s.plus.poly_part = RationalPolynomial(std::move(plus));
  s.minus.poly_part = RationalPolynomial(std::move(minus));
  for (const auto& t : form.trig_terms) (t.coeff.sign() > 0 ? s.plus : s.minus).trig_terms.push_back(t);
  return s;
}

std::string Addend::label() const {
  return std::string(sign > 0 ? "+" : "-") + to_string(kind) + "(" + (multiplier == 1 ? "" : std::to_string(multiplier)) + "x)";
}

std::vector<Addend> addends(const SignSplit& split) {
  std::vector<Addend> out;
  for (int sgn : {1, -1}) {
    const MultiAngleForm& form = sgn > 0 ? split.plus : split.minus;
    std::map<std::pair<TrigKind, unsigned>, RationalPolynomial> groups;
    for (const auto& t : form.trig_terms)
      groups[{t.kind, t.multiplier}] += RationalPolynomial::monomial(t.coeff, t.x_pow);
    std::vector<Addend> part;
    for (auto& [k, poly] : groups) part.push_back({sgn, k.first, k.second, std::move(poly)});
    std::stable_sort(part.begin(), part.end(), [](const Addend& a, const Addend& b) {
      auto key = [](const Addend& d) {
        return std::make_tuple(d.coeff.low_power(), d.multiplier, d.kind == TrigKind::cos ? 0 : 1);
      };
      return key(a) < key(b);
    });
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace mtp

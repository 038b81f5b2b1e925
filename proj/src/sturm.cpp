#include "mtp/sturm.hpp"

#include "mtp/errors.hpp"

namespace mtp {

namespace {

struct Extension {
  Segment seg;
  std::vector<Rational> zeros;
  unsigned count = 0;
};

constexpr unsigned kExtensionRetries = 4;

Extension try_extension(const RationalPolynomial& p, const SturmChain& chain, const IntervalSpec& iv,
                        unsigned attempt) {
  const Rational scale = pow10_neg(attempt);
  const Rational margin = scale / Rational(10);
  const Rational nudge = scale / Rational(100);
  Extension e;
  if (iv.left.is_rational()) {
    const Rational& l = iv.left.rational_part;
    e.seg.a = l;
    if (p(l).is_zero()) {
      e.zeros.push_back(l);
      e.seg.a = l - margin;
    }
  } else {
    e.seg.a = iv.left.lower_bracket(2 + attempt);
  }
  while (p(e.seg.a).is_zero()) e.seg.a -= nudge;

  if (iv.right.is_rational()) {
    const Rational& r = iv.right.rational_part;
    e.seg.b = r;
    if (p(r).is_zero()) {
      e.zeros.push_back(r);
      e.seg.b = r + margin;
    }
  } else {
    e.seg.b = iv.right.upper_bracket(2 + attempt);
  }
  while (p(e.seg.b).is_zero()) e.seg.b += nudge;
  e.count = count_distinct_roots(chain, e.seg.a, e.seg.b);
  return e;
}

Extension extend(const RationalPolynomial& p, const SturmChain& chain, const IntervalSpec& iv) {
  Extension e;
  for (unsigned attempt = 0; attempt <= kExtensionRetries; ++attempt) {
    e = try_extension(p, chain, iv, attempt);
    if (e.count == e.zeros.size()) return e;
  }
  throw ExtensionFailed("segment [" + e.seg.a.str() + ", " + e.seg.b.str() + "] still holds " +
                        std::to_string(e.count) + " roots against " + std::to_string(e.zeros.size()) +
                        " boundary zeros after " + std::to_string(kExtensionRetries) + " retries");
}

int sign_of(const Rational& v) { return v.sign(); }

}  // namespace

unsigned SturmChain::variations(const Rational& x) const {
  unsigned v = 0;
  int last = 0;
  for (const auto& p : polys) {
    const int s = sign_of(p(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

SturmChain sturm_chain(const RationalPolynomial& p) {
  if (p.is_zero()) throw ZeroPolynomial("Sturm chain of the zero polynomial");
  SturmChain c;
  c.polys.push_back(p);
  RationalPolynomial d = p.derivative();
  if (d.is_zero()) return c;
  c.polys.push_back(d);
  for (;;) {
    const auto& a = c.polys[c.polys.size() - 2];
    const auto& b = c.polys.back();
    RationalPolynomial r = -a.divmod(b).second;
    if (r.is_zero()) break;
    c.polys.push_back(std::move(r));
  }
  return c;
}

unsigned count_distinct_roots(const SturmChain& chain, const Rational& a, const Rational& b) {
  if (!(a < b)) throw std::invalid_argument("count_distinct_roots needs a < b");
  const auto& p = chain.polys.front();
  if (p(a).is_zero()) throw EndpointRoot("P vanishes at a = " + a.str());
  if (p(b).is_zero()) throw EndpointRoot("P vanishes at b = " + b.str());
  return chain.variations(a) - chain.variations(b);
}

unsigned count_distinct_roots(const RationalPolynomial& p, const Rational& a, const Rational& b) {
  return count_distinct_roots(sturm_chain(p), a, b);
}

PiPolynomial evaluate_at(const RationalPolynomial& p, const ScaledPi& x) {
  const PiPolynomial xp = x.as_pi_polynomial();
  PiPolynomial acc;
  const auto& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * xp + PiPolynomial::constant(c[i]);
  return acc;
}

Segment extend_segment(const RationalPolynomial& p, const IntervalSpec& interval) {
  return extend(p, sturm_chain(p), interval).seg;
}

PolyPositivityCertificate certify_positive(const RationalPolynomial& p, const IntervalSpec& interval,
                                           unsigned digits) {
  if (p.is_zero()) throw ZeroPolynomial("cannot certify positivity of the zero polynomial");
  const SturmChain chain = sturm_chain(p);
  Extension ext;
  try {
    ext = extend(p, chain, interval);
  } catch (const ExtensionFailed& e) {
    throw NotPositive(std::string("P has roots inside the interval: ") + e.what());
  }
  PolyPositivityCertificate cert;
  cert.P = p;
  cert.original_interval = interval;
  cert.extended_segment = ext.seg;
  cert.root_count = ext.count;
  cert.boundary_zeros = ext.zeros;
  cert.sign_at_a = p(ext.seg.a).sign();
  cert.sign_at_b = p(ext.seg.b).sign();

  // any interior point works once no interior roots remain; prefer the
  // right endpoint as the appendices do
  cert.witness_point = interval.right;
  if (interval.right.is_rational() && p(interval.right.rational_part).is_zero()) {
    const Rational l = interval.left.is_rational() ? interval.left.rational_part : interval.left.upper_bracket(6);
    cert.witness_point = ScaledPi::rational((l + interval.right.rational_part) / Rational(2));
  }
  cert.witness_value = evaluate_at(p, cert.witness_point);
  cert.witness_enclosure = pipoly_enclosure(cert.witness_value, digits);
  cert.witness_sign = cert.witness_enclosure.sign();
  if (cert.witness_sign <= 0)
    throw NotPositive("P(" + cert.witness_point.str() + ") is not positive (" +
                      cert.witness_enclosure.decimal(8) + ")");
  return cert;
}

}  // namespace mtp

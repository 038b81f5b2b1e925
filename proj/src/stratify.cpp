#include "mtp/stratify.hpp"

#include <algorithm>

#include "mtp/errors.hpp"

namespace mtp {

namespace {

constexpr unsigned kMaxSignDigits = 1600;
constexpr int kGrid = 48;
constexpr unsigned kSeriesOrder = 60;

int sigma(const FamilySpec& f) { return f.direction == Direction::increasing ? 1 : -1; }

// Sign of f(x) at a rational point, escalating precision until decided.
int decided_sign(const MtpFunction& f, const Rational& x, unsigned digits) {
  for (unsigned d = digits;; d *= 2) {
    const int s = eval_enclosure(f, x, d).sign();
    if (s != Enclosure::kUndecided) return s;
    if (d >= kMaxSignDigits) break;
  }
  throw PrecisionInsufficient("sign of an MTP function at x = " + x.str() + " not decided");
}

Integer content_lcm(const PiPolynomial& p, Integer acc) {
  for (const auto& c : p.coeffs()) mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), c.denominator().get_mpz_t());
  return acc;
}

Integer content_gcd(const PiPolynomial& p, Integer acc) {
  for (const auto& c : p.coeffs()) mpz_gcd(acc.get_mpz_t(), acc.get_mpz_t(), c.numerator().get_mpz_t());
  return acc;
}

unsigned low_power(const PiPolynomial& p) {
  for (unsigned i = 0; i < p.coeffs().size(); ++i)
    if (!p.coeffs()[i].is_zero()) return i;
  return 0;
}

PiPolynomial drop_low(const PiPolynomial& p, unsigned k) {
  std::vector<Rational> c(p.coeffs().begin() + std::min<std::size_t>(k, p.coeffs().size()), p.coeffs().end());
  return PiPolynomial(std::move(c));
}

// Everything the minimax and classification searches evaluate repeatedly.
struct PhiCalculus {
  int s;
  MtpFunction N, D, G, H1, H2;

  explicit PhiCalculus(const FamilySpec& f) : s(sigma(f)), N(f.numerator), D(f.denominator) {
    const MtpFunction& wn = f.weight_num;
    const MtpFunction& wd = f.weight_den;
    const MtpFunction K = differentiate(wn) * wd - wn * differentiate(wd);
    G = (differentiate(N) * D - N * differentiate(D)) * wn * wd;
    H1 = D * D * K;
    H2 = N * D * K;
  }

  // D^2 Wd^2 phi_p' (positive multiple of the slope)
  MtpFunction slope(const Rational& p) const {
    MtpFunction v = H1 * p - G - H2;
    return s > 0 ? v : -v;
  }

  // D * sign-equivalent of phi_p
  MtpFunction level(const Rational& p) const {
    MtpFunction v = D * p - N;
    return s > 0 ? v : -v;
  }
};

// Rational interior sample points, left to right.
std::vector<Rational> interior_grid(const IntervalSpec& iv) {
  const Rational a = iv.left.upper_bracket(4);
  const Rational b = iv.right.lower_bracket(4);
  std::vector<Rational> xs;
  for (int j = 1; j < kGrid; ++j) xs.push_back(a + (b - a) * Rational(j, kGrid));
  return xs;
}

// Bisection on a sign change: sign(lo) = s_lo, sign(hi) = -s_lo.
Enclosure bisect_sign(const MtpFunction& f, Rational lo, Rational hi, int s_lo, const Rational& tol, unsigned digits) {
  while (hi - lo > tol) {
    const Rational mid = (lo + hi) / Rational(2);
    const int s = decided_sign(f, mid, digits);
    if (s == 0) return Enclosure(mid);
    if (s == s_lo) lo = mid;
    else hi = mid;
  }
  return Enclosure(lo, hi);
}

Rational round_places(const Rational& r, unsigned places) {
  const Rational unit = pow10_neg(places);
  return Rational((r / unit + Rational(1, 2)).floor()) * unit;
}

}  // namespace

PiRational PiRational::make(PiPolynomial num, PiPolynomial den) {
  if (den.is_zero()) throw ZeroDenominatorAtRight("pi-rational with zero denominator");
  PiRational r;
  if (num.is_zero()) {
    r.num = {};
    r.den = PiPolynomial::constant(Rational(1));
    return r;
  }
  const Integer l = content_lcm(den, content_lcm(num, 1));
  num = num * Rational(l);
  den = den * Rational(l);
  const Integer g = content_gcd(den, content_gcd(num, 0));
  num = num * Rational(Integer(1), g);
  den = den * Rational(Integer(1), g);
  const unsigned k = std::min(low_power(num), low_power(den));
  num = drop_low(num, k);
  den = drop_low(den, k);
  if (den.coeffs().back().sign() < 0) {
    num = -num;
    den = -den;
  }
  r.num = std::move(num);
  r.den = std::move(den);
  return r;
}

Rational PiRational::rational_value() const {
  if (!is_rational()) throw std::logic_error("pi-rational is not rational");
  return num.coeff(0) / den.coeff(0);
}

Enclosure PiRational::enclose(unsigned digits) const {
  if (is_rational()) return Enclosure(rational_value());
  return pipoly_enclosure(num, digits) / pipoly_enclosure(den, digits);
}

std::string PiRational::str() const {
  if (is_rational()) return rational_value().str();
  auto wrap = [](const PiPolynomial& p) {
    const std::string s = p.str();
    const bool atom = s.find_first_of(" *") == std::string::npos;
    return atom ? s : "(" + s + ")";
  };
  if (den == PiPolynomial::constant(Rational(1))) return num.str();
  const std::string n = num.str();
  const bool sum = n.find(" + ") != std::string::npos || n.find(" - ") != std::string::npos;
  return (sum ? "(" + n + ")" : n) + "/" + wrap(den);
}

int compare(const Rational& r, const PiRational& q) {
  if (q.is_rational()) {
    const Rational v = q.rational_value();
    return r < v ? -1 : (r > v ? 1 : 0);
  }
  return pipoly_sign(q.den * r - q.num) * pipoly_sign(q.den);
}

std::string to_string(MonotoneClaim c) { return c == MonotoneClaim::g_decreasing ? "g decreasing" : "g increasing"; }

std::string to_string(Region r) {
  switch (r) {
    case Region::at_or_below_A: return "at_or_below_A";
    case Region::interior: return "interior";
    case Region::at_or_above_B: return "at_or_above_B";
  }
  return "?";
}

EndpointConstants endpoint_constants(const FamilySpec& family) {
  EndpointConstants c;
  c.direction = family.direction;
  const auto n = maclaurin(family.numerator, kSeriesOrder);
  const auto d = maclaurin(family.denominator, kSeriesOrder);
  auto order = [](const std::vector<Rational>& s) -> int {
    for (std::size_t i = 0; i < s.size(); ++i)
      if (!s[i].is_zero()) return static_cast<int>(i);
    return -1;
  };
  const int on = order(n), od = order(d);
  if (od < 0) throw OrderMismatch("denominator vanishes to order > " + std::to_string(kSeriesOrder) + " at 0");
  if (on != od)
    throw OrderMismatch("numerator order " + (on < 0 ? std::string(">") + std::to_string(kSeriesOrder) : std::to_string(on)) +
                        " differs from denominator order " + std::to_string(od) + " at 0");
  c.at_zero = n[static_cast<std::size_t>(on)] / d[static_cast<std::size_t>(od)];

  const PiPolynomial dh = eval_at_half_pi(family.denominator);
  if (dh.is_zero()) throw ZeroDenominatorAtRight("denominator vanishes at pi/2");
  c.at_right = PiRational::make(eval_at_half_pi(family.numerator), dh);

  const PiRational zero = PiRational::from(c.at_zero);
  if (family.direction == Direction::increasing) {
    c.A = c.at_right;
    c.B = zero;
  } else {
    c.A = zero;
    c.B = c.at_right;
  }
  // A < B is the contract of a stratified family
  const int cmp = compare(c.at_zero, c.at_right);
  if ((family.direction == Direction::increasing && cmp <= 0) || (family.direction == Direction::decreasing && cmp >= 0))
    throw Error("endpoint limits are inconsistent with an " + to_string(family.direction) + " family (A >= B)");
  return c;
}

MonotonicityInequality monotonicity_inequality(const FamilySpec& family, std::optional<MonotoneClaim> forced) {
  MonotonicityInequality out;
  out.claim = forced ? *forced
                     : (family.direction == Direction::increasing ? MonotoneClaim::g_decreasing
                                                                  : MonotoneClaim::g_increasing);
  const MtpFunction& N = family.numerator;
  const MtpFunction& D = family.denominator;
  MtpFunction num = differentiate(N) * D - N * differentiate(D);
  if (out.claim == MonotoneClaim::g_decreasing) num = -num;
  num = divide_monomial(num, common_monomial(num));
  num = reduce_pythagorean(num);
  num = divide_monomial(num, common_monomial(num));
  out.f = primitive(num);
  return out;
}

ProofResult certify_strict_monotone(const FamilySpec& family, const ProverConfig& config,
                                    std::optional<MonotoneClaim> forced) {
  const auto ineq = monotonicity_inequality(family, forced);
  const std::string name = (family.name.empty() ? std::string("family") : family.name) + "-monotonicity";
  return prove(make_problem(ineq.f, family.interval, Goal::positive, name), config);
}

Enclosure evaluate_phi(const FamilySpec& family, const Rational& p, const Rational& x, unsigned digits) {
  const Enclosure n = eval_enclosure(family.numerator, x, digits);
  const Enclosure d = eval_enclosure(family.denominator, x, digits);
  const Enclosure wn = eval_enclosure(family.weight_num, x, digits);
  const Enclosure wd = eval_enclosure(family.weight_den, x, digits);
  Enclosure v = (Enclosure(p) - n / d) * wn / wd;
  return sigma(family) > 0 ? v : -v;
}

InteriorMinimum find_interior_minimum(const FamilySpec& family, const Rational& p, const Rational& tol) {
  constexpr unsigned digits = 40;
  const PhiCalculus calc(family);
  const MtpFunction slope = calc.slope(p);
  std::vector<Rational> xs = interior_grid(family.interval);
  for (unsigned places : {6U, 9U}) xs.push_back(family.interval.right.lower_bracket(places));

  // the slope must read - ... - + ... + along the grid
  std::optional<std::size_t> first_up;
  int prev = 0;
  for (std::size_t j = 0; j < xs.size(); ++j) {
    const int s = decided_sign(slope, xs[j], digits);
    if (s > 0 && !first_up) {
      if (prev >= 0)
        throw UnimodalityViolation("phi_p is not decreasing near the left end (p = " + p.str() + ")");
      first_up = j;
    } else if (s < 0 && first_up) {
      throw UnimodalityViolation("phi_p has more than one interior minimum (p = " + p.str() + ")");
    }
    if (s != 0) prev = s;
  }
  if (!first_up) throw UnimodalityViolation("phi_p has no interior minimum (p = " + p.str() + ")");
  InteriorMinimum m;
  m.t = bisect_sign(slope, xs[*first_up - 1], xs[*first_up], -1, tol, digits);
  m.value = evaluate_phi(family, p, m.t.mid(), digits);
  return m;
}

MinimaxResult solve_minimax(const FamilySpec& family, const MinimaxOptions& opt) {
  MinimaxResult r;
  const PiPolynomial wd_right = eval_at_half_pi(family.weight_den);
  if (wd_right.is_zero()) {
    r.reason = "weight diverges at right endpoint";
    return r;
  }
  const EndpointConstants c = endpoint_constants(family);
  const PiRational w_right = PiRational::make(eval_at_half_pi(family.weight_num), wd_right);
  const int s = sigma(family);
  const Enclosure at_right = c.at_right.enclose(opt.digits);
  const Enclosure wb = w_right.enclose(opt.digits);

  struct Probe {
    int sign;
    InteriorMinimum min;
  };
  auto h = [&](const Rational& p) {
    Enclosure right = (Enclosure(p) - at_right) * wb;
    if (s < 0) right = -right;
    InteriorMinimum m = find_interior_minimum(family, p, opt.t_tol);
    return Probe{(right - m.value.abs()).sign(), std::move(m)};
  };

  // short decimal approximations keep the bisection rationals small
  const Rational A = round_places(c.A.enclose(opt.digits).mid(), 20);
  const Rational B = round_places(c.B.enclose(opt.digits).mid(), 20);
  Rational lo = A + (B - A) / Rational(1000);
  const Probe at_lo = h(lo);
  if (at_lo.sign == Enclosure::kUndecided || at_lo.sign == 0)
    throw UnimodalityViolation("h(p) undecided at the lower bracket end");
  Rational hi;
  std::optional<Probe> at_hi;
  for (const Rational& frac : {Rational(1, 2), Rational(9, 10), Rational(99, 100), Rational(999, 1000)}) {
    hi = A + (B - A) * frac;
    Probe probe = h(hi);
    if (probe.sign == -at_lo.sign) {
      at_hi = std::move(probe);
      break;
    }
  }
  if (!at_hi) throw UnimodalityViolation("h(p) shows no sign change on the bracket; monotonicity of h violated");

  // near-degenerate minima make t^(p) sensitive to p, so stop only once the
  // minimiser has settled at both ends of the p bracket as well
  Enclosure t_lo = at_lo.min.t, t_hi = at_hi->min.t;
  auto settled = [&] { return (t_lo.mid() - t_hi.mid()).abs() <= opt.t_tol; };
  while (hi - lo > opt.p_tol || !settled()) {
    if (hi - lo < opt.p_tol * pow10_neg(6)) break;
    const Rational mid = (lo + hi) / Rational(2);
    Probe pm = h(mid);
    if (pm.sign == Enclosure::kUndecided || pm.sign == 0) {
      lo = hi = mid;
      break;
    }
    if (pm.sign == at_lo.sign) {
      lo = mid;
      t_lo = pm.min.t;
    } else {
      hi = mid;
      t_hi = pm.min.t;
    }
  }
  r.defined = true;
  r.p0 = Enclosure(lo, hi);
  const InteriorMinimum m = find_interior_minimum(family, r.p0.mid(), opt.t_tol);
  r.t0 = m.t;
  r.d0 = m.value.abs();
  return r;
}

Classification classify_parameter(const FamilySpec& family, const Rational& p, const Rational& tol) {
  const EndpointConstants c = endpoint_constants(family);
  Classification out;
  if (compare(p, c.A) <= 0) {
    out.region = Region::at_or_below_A;
    return out;
  }
  if (compare(p, c.B) >= 0) {
    out.region = Region::at_or_above_B;
    return out;
  }
  out.region = Region::interior;
  constexpr unsigned digits = 40;
  const PhiCalculus calc(family);
  const MtpFunction level = calc.level(p);
  // limit signs of phi_p at both ends differ for interior p
  const int s_left = (p > c.at_zero ? 1 : -1) * calc.s;
  const int s_right = compare(p, c.at_right) * calc.s;

  std::vector<Rational> xs;
  const IntervalSpec& iv = family.interval;
  const Rational a = iv.left.upper_bracket(4);
  for (unsigned k = 15; k >= 3; --k) xs.push_back(a + pow10_neg(k));
  for (const auto& x : interior_grid(iv)) xs.push_back(x);
  for (unsigned places = 5; places <= 15; ++places) xs.push_back(iv.right.lower_bracket(places));
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  std::vector<int> signs;
  for (const auto& x : xs) signs.push_back(decided_sign(level, x, digits));
  const auto k = static_cast<std::size_t>(std::find(signs.begin(), signs.end(), s_right) - signs.begin());
  const bool single = k > 0 && k < signs.size() &&
                      std::all_of(signs.begin(), signs.begin() + static_cast<long>(k), [&](int v) { return v == s_left; }) &&
                      std::all_of(signs.begin() + static_cast<long>(k), signs.end(), [&](int v) { return v == s_right; });
  if (!single) throw UnimodalityViolation("phi_p sign pattern does not show a single zero (p = " + p.str() + ")");
  out.zero = bisect_sign(level, xs[k - 1], xs[k], s_left, tol, digits);
  return out;
}

}  // namespace mtp

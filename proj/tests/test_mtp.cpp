#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "mtp/mtp.hpp"
#include "support/appendix.hpp"
#include "support/oracles.hpp"

using namespace mtp;

namespace {

MtpFunction x_pow(unsigned k) { return MtpFunction::monomial(Rational(1), k); }
MtpFunction sinx() { return MtpFunction::monomial(Rational(1), 0, 0, 1); }
MtpFunction cosx() { return MtpFunction::monomial(Rational(1), 0, 1, 0); }

}  // namespace

TEST_CASE("normalize merges and cancels") {
  const MtpTerm xc{Rational(1), 1, 1, 0}, xc2{Rational(2), 1, 1, 0};
  const MtpFunction merged = normalize({xc, xc2});
  REQUIRE(merged.size() == 1);
  CHECK(merged.terms()[0] == MtpTerm{Rational(3), 1, 1, 0});
  CHECK(normalize({MtpTerm{Rational(1), 0, 0, 1}, MtpTerm{Rational(-1), 0, 0, 1}}).is_zero());
  CHECK(appendix::problem("a1").f.size() == 7);  // the A1 input expands (15x^4 - 135) and (90x^3 + 45x)
}

TEST_CASE("normalize is idempotent and order-insensitive") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const MtpFunction f = oracle::random_mtp(rng, 8, 5, 4);
    std::vector<MtpTerm> t = f.terms();
    t.insert(t.end(), f.terms().begin(), f.terms().end());
    std::shuffle(t.begin(), t.end(), rng);
    CHECK(normalize(t) == f * Rational(2));
    CHECK(normalize(f.terms()) == f);
  }
}

TEST_CASE("differentiate") {
  CHECK(differentiate(sinx()) == cosx());
  CHECK(differentiate(cosx()) == -sinx());
  CHECK(differentiate(x_pow(3)) == MtpFunction::monomial(Rational(3), 2));
  CHECK(differentiate(MtpFunction::constant(Rational(5))).is_zero());
  std::mt19937_64 rng(12);
  for (int i = 0; i < 100; ++i) {
    const MtpFunction f = oracle::random_mtp(rng, 4, 4, 3), g = oracle::random_mtp(rng, 4, 4, 3);
    CHECK(differentiate(f + g) == differentiate(f) + differentiate(g));
    CHECK(differentiate(f * g) == differentiate(f) * g + f * differentiate(g));
  }
}

TEST_CASE("values at 0 and pi/2") {
  CHECK(eval_at_zero(cosx()) == Rational(1));
  CHECK(eval_at_zero(sinx()).is_zero());
  CHECK(eval_at_half_pi(cosx()).is_zero());
  CHECK(eval_at_half_pi(x_pow(2)) == PiPolynomial::monomial(Rational(1, 4), 2));
  const PiPolynomial a1 = eval_at_half_pi(appendix::problem("a1").f);
  CHECK(a1 == PiPolynomial({Rational(-135), 0, 0, 0, Rational(15, 16), 0, 0, Rational(1, 64)}));
  CHECK(to_decimal(pipoly_enclosure(a1).mid(), 5) == "3.51310");
}

TEST_CASE("eval_enclosure at rational points") {
  const Enclosure a2 = eval_enclosure(appendix::problem("a2").f, Rational(1), 30);
  CHECK(a2.width() < pow10_neg(25));
  CHECK(std::abs(a2.mid().to_double() - 14.68957) < 1e-5);
  const Enclosure a3 = eval_enclosure(appendix::problem("a3").f, Rational(1), 30);
  CHECK(std::abs(a3.mid().to_double() - 27.02986) < 1e-5);
  CHECK(eval_enclosure(MtpFunction(), Rational(3, 7), 10) == Enclosure(Rational(0)));
}

TEST_CASE("eval_enclosure agrees with direct MPFR interpretation") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 100; ++i) {
    const MtpFunction f = oracle::random_mtp(rng, 6, 6, 4);
    const Rational x = oracle::random_rational(rng, 0, 2, 100);
    CHECK(eval_enclosure(f, x, 30).overlaps(oracle::direct_eval(f, x)));
  }
}

TEST_CASE("maclaurin coefficients") {
  CHECK(maclaurin(sinx(), 5) ==
        std::vector<Rational>{0, 1, 0, Rational(-1, 6), 0, Rational(1, 120)});
  CHECK(maclaurin(cosx(), 4) == std::vector<Rational>{1, 0, Rational(-1, 2), 0, Rational(1, 24)});
  CHECK(maclaurin(sinx() * cosx(), 3) == std::vector<Rational>{0, 1, 0, Rational(-2, 3)});
}

TEST_CASE("degree-30 Maclaurin sums stay within the tail bound") {
  // Every cos^q sin^r is a combination of sin/cos(m x), m <= q + r, with
  // absolute coefficients summing to at most 1, so the tail past x^N of one
  // term is at most |c| x^p e^{M x} (M x)^{N+1-p} / (N+1-p)!.
  constexpr unsigned N = 30;
  std::mt19937_64 rng(14);
  for (int i = 0; i < 100; ++i) {
    const MtpFunction f = oracle::random_mtp(rng, 5, 4, 2);
    const auto coeffs = maclaurin(f, N);
    for (int k = 1; k <= 15; ++k) {
      const Rational x(k, 10);
      Rational partial;
      for (unsigned j = coeffs.size(); j-- > 0;) partial = partial * x + coeffs[j];
      double tail = 0;
      for (const auto& t : f.terms()) {
        const double M = t.cos_pow + t.sin_pow, xd = x.to_double();
        const unsigned rest = N + 1 - t.x_pow;
        tail += std::fabs(t.coeff.to_double()) * std::pow(xd, t.x_pow) * std::exp(M * xd) * std::pow(M * xd, rest) /
                std::tgamma(rest + 1.0);
      }
      const Enclosure v = eval_enclosure(f, x, 30);
      const double diff = std::fabs((v.mid() - partial).to_double());
      CHECK(diff <= tail + 1e-25);
    }
  }
}

TEST_CASE("exact value at pi/2 is the limit of nearby enclosures") {
  std::mt19937_64 rng(15);
  const ScaledPi half = ScaledPi::half_pi();
  const Rational near = half.lower_bracket(9);
  for (int i = 0; i < 50; ++i) {
    const MtpFunction f = oracle::random_mtp(rng, 5, 4, 3);
    const Enclosure exact = pipoly_enclosure(eval_at_half_pi(f), 40);
    const Enclosure approx = eval_enclosure(f, near, 30);
    CHECK(std::fabs((exact.mid() - approx.mid()).to_double()) < 1e-6);
  }
}

TEST_CASE("pythagorean reduction and monomial helpers") {
  const MtpFunction s3 = sinx().pow(3);
  const MtpFunction reduced = reduce_pythagorean(s3);
  CHECK(reduced == sinx() - cosx().pow(2) * sinx());
  for (const auto& t : reduced.terms()) CHECK(t.sin_pow <= 1);
  const MtpFunction f = x_pow(3) * cosx() * sinx() * Rational(6) + x_pow(2) * sinx() * Rational(4);
  const MtpTerm m = common_monomial(f);
  CHECK(m.x_pow == 2);
  CHECK(m.sin_pow == 1);
  CHECK(m.cos_pow == 0);
  CHECK(divide_monomial(f, m) == x_pow(1) * cosx() * Rational(6) + MtpFunction::constant(Rational(4)));
  CHECK(primitive(f * Rational(3, 7)) == x_pow(3) * cosx() * sinx() * Rational(3) + x_pow(2) * sinx() * Rational(2));
  CHECK(positive_ratio(f * Rational(5, 2), f) == Rational(5, 2));
  CHECK(positive_ratio(-f, f).is_zero());
}

TEST_CASE("render is parseable and stable") {
  const MtpFunction f = x_pow(7) * Rational(2) + cosx().pow(2) * sinx() * Rational(135);
  CHECK(render(f) == "135*cos(x)^2*sin(x) + 2*x^7");
  CHECK(render(MtpFunction()) == "0");
  CHECK(render(-sinx()) == "-sin(x)");
}

TEST_CASE("scaled pi points") {
  const ScaledPi h = ScaledPi::half_pi();
  CHECK(h.str() == "pi/2");
  CHECK(h.upper_bracket(2) == Rational(158, 100));
  CHECK(h.lower_bracket(2) == Rational(157, 100));
  CHECK(compare(ScaledPi::rational(Rational(3, 2)), h) == -1);
  CHECK(compare(ScaledPi::rational(Rational(8, 5)), h) == 1);
  CHECK(compare(h, h) == 0);
  const IntervalSpec iv{ScaledPi::rational(Rational(0)), h, true, true};
  CHECK(iv.str() == "(0, pi/2)");
}

#include <doctest.h>

#include <random>

#include "mtp/enclosure.hpp"
#include "mtp/errors.hpp"
#include "support/oracles.hpp"

using namespace mtp;

TEST_CASE("rational parsing and arithmetic") {
  CHECK(Rational::parse("6/8") == Rational(3, 4));
  CHECK(Rational::parse("-12") == Rational(-12));
  CHECK(Rational::parse("+1/3").str() == "1/3");
  CHECK_THROWS(Rational::parse("1.5"));
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(-7, 2).ceil() == -3);
  CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
  CHECK(pow10_neg(3) == Rational(1, 1000));
  CHECK(Rational(1, 3) < Rational(1, 2));
}

TEST_CASE("enclosure sign semantics") {
  CHECK(Enclosure(Rational(1), Rational(2)).sign() == 1);
  CHECK(Enclosure(Rational(-2), Rational(-1)).sign() == -1);
  CHECK(Enclosure(Rational(0)).sign() == 0);
  CHECK(Enclosure(Rational(-1), Rational(1)).sign() == Enclosure::kUndecided);
  CHECK_THROWS(Enclosure(Rational(1)) / Enclosure(Rational(-1), Rational(1)));
  const Enclosure e(Rational(1, 3), Rational(1, 2));
  const Enclosure r = e.round(8);
  CHECK(r.contains(e));
  CHECK(r.lo().denominator() <= 256);
  CHECK((e * e).contains(Rational(1, 9)));
  CHECK(Enclosure(Rational(-2), Rational(1)).pow(2) == Enclosure(Rational(0), Rational(4)));
}

TEST_CASE("pi enclosures") {
  const Enclosure p1 = pi_enclosure(1);
  CHECK(p1.contains(Rational(314159, 100000)));
  CHECK(p1.width() < Rational(1, 10));
  const Enclosure p2 = pi_enclosure(2);
  CHECK(Rational(314, 100) <= p2.lo());
  CHECK(p2.hi() <= Rational(315, 100));

  SUBCASE("forty digits against Machin") {
    const Enclosure machin = oracle::machin_pi(45);
    const Enclosure p40 = pi_enclosure(40);
    CHECK(p40.width() < pow10_neg(40));
    CHECK(p40.contains(machin));
  }
  SUBCASE("stored constant against Machin at full length") {
    CHECK(pi_enclosure(kPiStoredDigits).contains(oracle::machin_pi(110)));
  }
  CHECK_THROWS_AS(pi_enclosure(kPiStoredDigits + 1), PrecisionUnavailable);
}

TEST_CASE("sin and cos examples") {
  CHECK(sin_enclosure(Rational(0), 10) == Enclosure(Rational(0)));
  CHECK(cos_enclosure(Rational(0), 10) == Enclosure(Rational(1)));
  CHECK(sin_enclosure(Rational(1), 8).decimal(8) == "0.84147098");
  CHECK(sin_enclosure(Rational(3, 2), 8).decimal(8) == "0.99749499");
  CHECK(cos_enclosure(Rational(1), 8).decimal(8) == "0.54030231");
  CHECK(cos_enclosure(Rational(1, 2), 8).decimal(8) == "0.87758256");
}

TEST_CASE("sin and cos contain the MPFR value on 1000 random points") {
  std::mt19937_64 rng(1001);
  const unsigned digits[] = {8, 20, 50};
  int bad = 0;
  for (int i = 0; i < 1000; ++i) {
    const Rational x = oracle::random_rational(rng, -10, 10, 1000);
    const unsigned d = digits[i % 3];
    const Enclosure s = sin_enclosure(x, d), c = cos_enclosure(x, d);
    const bool ok = s.contains(oracle::sin_ref(x)) && c.contains(oracle::cos_ref(x)) && s.width() < pow10_neg(d) &&
                    c.width() < pow10_neg(d);
    if (!ok) ++bad;
  }
  CHECK(bad == 0);
}

TEST_CASE("more digits never widen an enclosure") {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 100; ++i) {
    const Rational x = oracle::random_rational(rng, -3, 3, 50);
    Rational prev_s = sin_enclosure(x, 5).width(), prev_c = cos_enclosure(x, 5).width();
    for (unsigned d = 10; d <= 40; d += 5) {
      const Rational ws = sin_enclosure(x, d).width(), wc = cos_enclosure(x, d).width();
      CHECK(ws <= prev_s);
      CHECK(wc <= prev_c);
      prev_s = ws;
      prev_c = wc;
    }
  }
  Rational prev = pi_enclosure(2).width();
  for (unsigned d = 3; d <= 100; d += 7) {
    CHECK(pi_enclosure(d).width() <= prev);
    prev = pi_enclosure(d).width();
  }
}

TEST_CASE("interval sin and cos") {
  const Enclosure x(Rational(1), Rational(11, 10));
  const Enclosure s = sin_enclosure(x, 20);
  CHECK(s.contains(oracle::sin_ref(Rational(1))));
  CHECK(s.contains(oracle::sin_ref(Rational(21, 20))));
  CHECK(s.contains(oracle::sin_ref(Rational(11, 10))));
  const Enclosure around_peak(Rational(15, 10), Rational(16, 10));
  CHECK(sin_enclosure(around_peak, 20).hi() >= Rational(1));
}

TEST_CASE("pi polynomials") {
  CHECK(pipoly_sign(PiPolynomial({Rational(-3), Rational(1)})) == 1);
  CHECK(pipoly_sign(PiPolynomial()) == 0);
  const PiPolynomial a1_half_pi({Rational(-135), 0, 0, 0, Rational(15, 16), 0, 0, Rational(1, 64)});
  CHECK(pipoly_sign(a1_half_pi) == 1);
  const Enclosure v = pipoly_enclosure(a1_half_pi);
  CHECK(to_decimal(v.mid(), 5) == "3.51310");
  CHECK(a1_half_pi.str() == "1/64*pi^7 + 15/16*pi^4 - 135");

  // pi - 355/113 is about -2.7e-7; starting at 2 digits forces escalation.
  CHECK(pipoly_sign(PiPolynomial({Rational(-355, 113), Rational(1)}), 2) == -1);
}

TEST_CASE("pipoly_sign agrees with MPFR on 200 random pi polynomials") {
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<long> coeff(-1000000, 1000000);
  std::uniform_int_distribution<int> deg(0, 10);
  int disagreements = 0, decided = 0;
  for (int i = 0; i < 200; ++i) {
    std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& v : c) v = Rational(coeff(rng));
    const Enclosure ref = oracle::pipoly_ref(c);
    if (ref.sign() == Enclosure::kUndecided) continue;
    ++decided;
    if (pipoly_sign(PiPolynomial(c)) != ref.sign()) ++disagreements;
  }
  CHECK(decided > 190);
  CHECK(disagreements == 0);
}

TEST_CASE("decimal rendering") {
  CHECK(to_decimal(Rational(1, 3), 4) == "0.3333");
  CHECK(to_decimal(Rational(-2, 3), 2) == "-0.67");
  CHECK(to_decimal(Rational(5), 0) == "5");
  CHECK(to_decimal(Rational(-1, 1000), 2) == "0.00");
}

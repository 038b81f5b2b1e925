#pragma once

#include <optional>
#include <string>

#include "mtp/parser.hpp"
#include "mtp/prover.hpp"

namespace mtp {

/// Exact quotient of two pi-polynomials, kept with coprime integer
/// coefficients, common pi powers cancelled and a positive leading
/// denominator coefficient.
struct PiRational {
  PiPolynomial num;
  PiPolynomial den{std::vector<Rational>{Rational(1)}};

  static PiRational make(PiPolynomial num, PiPolynomial den);
  static PiRational from(const Rational& r) { return make(PiPolynomial::constant(r), PiPolynomial::constant(Rational(1))); }

  bool is_rational() const { return num.degree() <= 0 && den.degree() == 0; }
  Rational rational_value() const;
  Enclosure enclose(unsigned digits) const;
  std::string str() const;

  friend bool operator==(const PiRational&, const PiRational&) = default;
};

/// Exact sign of (r - q).
int compare(const Rational& r, const PiRational& q);

struct EndpointConstants {
  Rational at_zero;       // lim g at the left endpoint 0+
  PiRational at_right;    // lim g at pi/2-
  PiRational A;           // the smaller limit
  PiRational B;           // the larger limit
  Direction direction = Direction::increasing;
};

EndpointConstants endpoint_constants(const FamilySpec& family);

enum class MonotoneClaim { g_decreasing, g_increasing };
std::string to_string(MonotoneClaim c);

struct MonotonicityInequality {
  MtpFunction f;  // claim holds iff f > 0 on the interval
  MonotoneClaim claim = MonotoneClaim::g_decreasing;
};

/// Numerator of -g' (claim g decreasing, increasing families) or g'
/// (decreasing families), with positive monomial and constant factors
/// cleared. `forced` overrides the claim.
MonotonicityInequality monotonicity_inequality(const FamilySpec& family,
                                               std::optional<MonotoneClaim> forced = std::nullopt);

ProofResult certify_strict_monotone(const FamilySpec& family, const ProverConfig& config = {},
                                    std::optional<MonotoneClaim> forced = std::nullopt);

/// sigma * (p - N/D) * Wn/Wd at a rational interior point; sigma = +1 for
/// increasing families and -1 for decreasing ones.
Enclosure evaluate_phi(const FamilySpec& family, const Rational& p, const Rational& x, unsigned digits = 40);

struct InteriorMinimum {
  Enclosure t;      // bracket of the minimiser
  Enclosure value;  // phi_p at the bracket midpoint
};

InteriorMinimum find_interior_minimum(const FamilySpec& family, const Rational& p,
                                      const Rational& tol = Rational(1, 100000000));

struct MinimaxResult {
  bool defined = false;
  std::string reason;  // set when not defined
  Enclosure p0;
  Enclosure t0;
  Enclosure d0;
};

struct MinimaxOptions {
  Rational p_tol = Rational(1, 1000000000);
  Rational t_tol = Rational(1, 100000000);
  unsigned digits = 40;
};

MinimaxResult solve_minimax(const FamilySpec& family, const MinimaxOptions& options = {});

enum class Region { at_or_below_A, interior, at_or_above_B };
std::string to_string(Region r);

struct Classification {
  Region region = Region::interior;
  std::optional<Enclosure> zero;  // bracket of x0 when interior
};

Classification classify_parameter(const FamilySpec& family, const Rational& p,
                                  const Rational& tol = Rational(1, 100000000));

}  // namespace mtp

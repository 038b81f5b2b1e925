#include "properties.hpp"

#include <omp.h>

#include <random>

#include "appendix.hpp"
#include "mtp/certificate_io.hpp"
#include "mtp/prover.hpp"
#include "mtp/sturm.hpp"
#include "mtp/taylor_bounds.hpp"
#include "oracles.hpp"

namespace properties {

using mtp::Rational;

namespace {

void fail(Result& r, const std::string& why) {
  if (r.ok) r.detail = why;
  r.ok = false;
}

// Largest two-decimal rational not above sqrt(v).
Rational sqrt_floor(unsigned long v) {
  unsigned long k = 0;
  while ((k + 1) * (k + 1) <= v * 10000) ++k;
  return Rational(static_cast<long>(k), 100);
}

}  // namespace

Result bound_grids(int points) {
  Result r;
  for (auto kind : {mtp::TrigKind::sin, mtp::TrigKind::cos})
    for (auto dir : {mtp::BoundDirection::lower, mtp::BoundDirection::upper})
      for (unsigned l = 0; l <= 2; ++l) {
        const auto spec = mtp::BoundSpec::make(kind, dir, l);
        const auto next = mtp::BoundSpec::make(kind, dir, l + 1);
        const auto T = mtp::taylor_poly(kind, spec.degree);
        const auto T4 = mtp::taylor_poly(kind, next.degree);
        const Rational radius = sqrt_floor(spec.validity_radius_sq);
        const bool lower = dir == mtp::BoundDirection::lower;
        const std::string tag = mtp::to_string(kind) + (lower ? " lower " : " upper ") + std::to_string(l);
        for (int k = 0; k <= points; ++k) {
          const Rational t = radius * Rational(k, points);
          const mtp::Enclosure truth = kind == mtp::TrigKind::sin ? oracle::sin_ref(t) : oracle::cos_ref(t);
          const Rational a = T(t), b = T4(t);
          ++r.checks;
          if (k == 0 && !truth.contains(a)) fail(r, tag + ": no equality at 0");
          if (lower ? a > truth.hi() : a < truth.lo()) fail(r, tag + ": ordering fails at t = " + t.str());
          // nesting: T_n, T_{n+4}, true value in order
          if (lower ? (b < a || b > truth.hi()) : (b > a || b < truth.lo()))
            fail(r, tag + ": nesting fails at t = " + t.str());
        }
      }
  if (r.ok) r.detail = std::to_string(r.checks) + " grid checks";
  return r;
}

Result angle_identity(int functions, int points, std::uint64_t seed) {
  Result r;
  std::mt19937_64 rng(seed);
  std::vector<mtp::MtpFunction> fs;
  for (const auto& c : appendix::cases()) fs.push_back(appendix::problem(c.id).f);
  for (int i = 0; i < functions; ++i) fs.push_back(oracle::random_mtp(rng, 6, 8, 6));
  for (const auto& f : fs) {
    const auto form = mtp::to_multi_angle(f);
    const auto split = mtp::split_signs(form);
    ++r.checks;
    if (!(mtp::normalize(split.plus + split.minus) == form)) fail(r, "split does not rebuild " + render(f));
    for (int k = 0; k < points; ++k) {
      Rational x = oracle::random_rational(rng, 0, 2, 64);
      if (x.sign() <= 0 || x >= Rational(157, 100)) x = Rational(k + 1, points + 1) * Rational(157, 100);
      ++r.checks;
      if (!form.eval_enclosure(x, 30).overlaps(mtp::eval_enclosure(f, x, 30)))
        fail(r, "identity fails for " + render(f) + " at x = " + x.str());
    }
  }
  if (r.ok) r.detail = std::to_string(fs.size()) + " functions, " + std::to_string(r.checks) + " checks";
  return r;
}

Result sturm_vs_bisection(int polynomials, std::uint64_t seed) {
  Result r;
  std::mt19937_64 rng(seed);
  unsigned total_roots = 0;
  for (int i = 0; i < polynomials; ++i) {
    const auto p = oracle::random_polynomial(rng, 12, 100);
    Rational a = oracle::random_rational(rng, -5, 5, 16), b = oracle::random_rational(rng, -5, 5, 16);
    if (b < a) std::swap(a, b);
    if (a == b) b = a + Rational(1);
    while (p(a).is_zero()) a -= Rational(1, 997);
    while (p(b).is_zero()) b += Rational(1, 991);
    const unsigned sturm = mtp::count_distinct_roots(p, a, b);
    const unsigned ref = oracle::bisection_root_count(p, a, b);
    total_roots += ref;
    ++r.checks;
    if (sturm != ref)
      fail(r, "P = " + p.str() + " on [" + a.str() + ", " + b.str() + "]: sturm " + std::to_string(sturm) +
                  ", oracle " + std::to_string(ref));
  }
  if (r.ok) r.detail = std::to_string(r.checks) + " polynomials, " + std::to_string(total_roots) + " roots in total";
  return r;
}

Result certificate_roundtrips() {
  Result r;
  for (const auto& c : appendix::cases()) {
    const auto problem = appendix::problem(c.id);
    const auto proved = mtp::prove(problem);
    const auto* cert = std::get_if<mtp::ProofCertificate>(&proved);
    ++r.checks;
    if (cert == nullptr) {
      fail(r, c.id + ": prove failed");
      continue;
    }
    const std::string text = mtp::certificate_to_json(*cert);
    const auto back = mtp::certificate_from_json(text);
    if (!(back == *cert)) fail(r, c.id + ": JSON round-trip changed the certificate");
    if (!mtp::verify(back)) fail(r, c.id + ": verify rejected a round-tripped certificate");
    auto tampered = back;
    auto coeffs = tampered.P.coeffs();
    coeffs.back() += Rational(1, 1000000);
    tampered.P = mtp::RationalPolynomial(coeffs);
    if (mtp::verify(tampered)) fail(r, c.id + ": verify accepted a tampered P");
  }
  if (r.ok) r.detail = std::to_string(r.checks) + " certificates";
  return r;
}

Result prover_determinism() {
  Result r;
  const int saved = omp_get_max_threads();
  for (const auto& c : appendix::cases()) {
    const auto problem = appendix::problem(c.id);
    mtp::ProverConfig serial;
    serial.parallel = false;
    const auto ref = mtp::prove(problem, serial);
    for (int threads : {1, 2, 4}) {
      omp_set_num_threads(threads);
      for (int rep = 0; rep < 2; ++rep) {
        ++r.checks;
        const auto again = mtp::prove(problem);
        const auto* a = std::get_if<mtp::ProofCertificate>(&ref);
        const auto* b = std::get_if<mtp::ProofCertificate>(&again);
        if (a == nullptr || b == nullptr || !(*a == *b))
          fail(r, c.id + ": certificate differs with " + std::to_string(threads) + " threads");
      }
    }
  }
  omp_set_num_threads(saved);
  if (r.ok) r.detail = std::to_string(r.checks) + " repeated runs";
  return r;
}

}  // namespace properties

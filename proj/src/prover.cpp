#include "mtp/prover.hpp"

#include <algorithm>
#include <optional>

#include "mtp/errors.hpp"
#include "mtp/parallel.hpp"

namespace mtp {

namespace {

constexpr unsigned kMaxRationalDigits = 400;

BoundaryValue boundary_value(const MtpFunction& f, const ScaledPi& point, bool open, unsigned digits) {
  BoundaryValue bv;
  bv.point = point;
  bv.open = open;
  if (point.is_rational() && point.rational_part.is_zero()) {
    bv.has_exact = true;
    bv.exact = PiPolynomial::constant(eval_at_zero(f));
  } else if (point.is_half_pi()) {
    bv.has_exact = true;
    bv.exact = eval_at_half_pi(f);
  }
  if (bv.has_exact) {
    bv.enclosure = pipoly_enclosure(bv.exact, digits);
    bv.sign = bv.enclosure.sign();
    return bv;
  }
  const unsigned limit = point.is_rational() ? kMaxRationalDigits : kPiStoredDigits;
  for (unsigned d = std::min(digits, limit);; d = std::min(2 * d, limit)) {
    bv.enclosure = point.is_rational() ? eval_enclosure(f, point.rational_part, d)
                                       : eval_enclosure(f, point.enclose(d), d);
    bv.sign = bv.enclosure.sign();
    if (bv.sign != Enclosure::kUndecided) return bv;
    if (d >= limit) break;
  }
  throw PrecisionInsufficient("cannot decide the sign of f at " + point.str());
}

bool admissible(const BoundaryValue& v) { return v.sign > 0 || (v.sign == 0 && v.open); }

struct Prepared {
  Stage1Report stage1;
  MultiAngleForm form;
  SignSplit split;
};

Prepared prepare(const ProblemSpec& problem, unsigned digits) {
  Prepared p;
  p.stage1 = stage1_boundary(problem, digits);
  p.form = to_multi_angle(problem.f);
  p.split = split_signs(p.form);
  return p;
}

ProofCertificate build(const ProblemSpec& problem, const Prepared& prep, const IndexAssignment& indices,
                       unsigned digits) {
  ProofCertificate cert;
  cert.problem = problem;
  cert.digits = digits;
  cert.stage1 = prep.stage1;
  cert.form = prep.form;
  cert.f_plus = prep.split.plus;
  cert.f_minus = prep.split.minus;
  cert.indices = indices;
  cert.P = assemble(prep.split, indices, problem.interval);
  cert.stage4 = certify_positive(cert.P, problem.interval, digits);
  cert.conclusion = conclusion_text(problem.interval);
  return cert;
}

std::string stage1_reason(const Stage1Report& r) {
  const BoundaryValue& bad = admissible(r.left) ? r.right : r.left;
  return "f(" + bad.point.str() + ") = " + bad.enclosure.decimal(8) +
         (bad.sign == 0 ? " vanishes at a closed endpoint" : " is negative");
}

std::string join(const IndexAssignment& idx) {
  std::string s = "(";
  for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + std::to_string(idx[i]);
  return s + ")";
}

// Magnitude of the first omitted Maclaurin term of an addend's bound at the
// right bracket; drives the greedy strategy.
Rational omitted_term(const Addend& a, unsigned index, const Rational& b) {
  const BoundSpec spec = BoundSpec::make(a.kind, a.sign > 0 ? BoundDirection::lower : BoundDirection::upper, index);
  const unsigned n = spec.degree + 2;
  Rational fact(1);
  for (unsigned k = 2; k <= n; ++k) fact *= Rational(static_cast<long>(k));
  Rational coeff_mag;
  for (unsigned i = 0; i < a.coeff.coeffs().size(); ++i) coeff_mag += a.coeff.coeffs()[i].abs() * b.pow(i);
  return coeff_mag * (b * Rational(static_cast<long>(a.multiplier))).pow(n) / fact;
}

}  // namespace

std::string to_string(SearchStrategy s) { return s == SearchStrategy::greedy ? "greedy" : "uniform_escalation"; }

std::string conclusion_text(const IntervalSpec& interval) { return "f(x) > 0 is true over " + interval.str(); }

Stage1Report stage1_boundary(const ProblemSpec& problem, unsigned digits) {
  Stage1Report r;
  r.left = boundary_value(problem.f, problem.interval.left, problem.interval.left_open, digits);
  r.right = boundary_value(problem.f, problem.interval.right, problem.interval.right_open, digits);
  r.possible = admissible(r.left) && admissible(r.right);
  return r;
}

ProofResult prove(const ProblemSpec& problem, const ProverConfig& config) {
  Prepared prep;
  try {
    prep = prepare(problem, config.digits);
  } catch (const PrecisionInsufficient& e) {
    return Failure{1, e.what(), {}};
  }
  if (!prep.stage1.possible) return Failure{1, stage1_reason(prep.stage1), {}};

  const auto adds = addends(prep.split);
  const IndexAssignment start = min_valid_indices(prep.split, problem.interval);
  for (std::size_t i = 0; i < start.size(); ++i)
    if (start[i] > config.max_index) {
      IndexAssignment clamped = start;
      for (auto& v : clamped) v = std::min(v, config.max_index);
      return Failure{3,
                     "addend " + adds[i].label() + " needs index " + std::to_string(start[i]) +
                         " for a valid bound but max_index is " + std::to_string(config.max_index),
                     {clamped}};
    }

  std::vector<IndexAssignment> tried;
  std::string last_reason = "no candidate assignment";
  auto attempt = [&](const IndexAssignment& idx, std::optional<ProofCertificate>& out, std::string& why) {
    try {
      out = build(problem, prep, idx, config.digits);
      return true;
    } catch (const Error& e) {
      why = e.what();
      return false;
    }
  };

  if (config.search_strategy == SearchStrategy::uniform_escalation) {
    std::vector<IndexAssignment> candidates;
    for (unsigned k = 0;; ++k) {
      IndexAssignment c = start;
      for (auto& v : c) v = std::min(v + k, config.max_index);
      if (!candidates.empty() && candidates.back() == c) break;
      candidates.push_back(std::move(c));
    }
    std::vector<std::optional<ProofCertificate>> certs(candidates.size());
    std::vector<std::string> reasons(candidates.size());
    auto run = [&](std::size_t i) { return attempt(candidates[i], certs[i], reasons[i]); };
    const auto hit = config.parallel ? first_success_parallel(candidates.size(), run)
                                     : first_success_serial(candidates.size(), run);
    if (hit) return std::move(*certs[*hit]);
    tried = candidates;
    last_reason = reasons.back();
  } else {
    const Rational b = right_upper_bracket(problem.interval);
    IndexAssignment cur = start;
    for (;;) {
      std::optional<ProofCertificate> cert;
      std::string why;
      tried.push_back(cur);
      if (attempt(cur, cert, why)) return std::move(*cert);
      last_reason = why;
      std::optional<std::size_t> pick;
      Rational best;
      for (std::size_t i = 0; i < cur.size(); ++i) {
        if (cur[i] >= config.max_index) continue;
        const Rational t = omitted_term(adds[i], cur[i], b);
        if (!pick || t > best) {
          pick = i;
          best = t;
        }
      }
      if (!pick) break;
      ++cur[*pick];
    }
  }
  return Failure{4, "no assignment up to max_index " + std::to_string(config.max_index) +
                        " certified P > 0 (last: " + join(tried.back()) + ": " + last_reason + ")",
                 std::move(tried)};
}

ProofResult replay(const ProblemSpec& problem, const IndexAssignment& indices, unsigned digits) {
  Prepared prep;
  try {
    prep = prepare(problem, digits);
  } catch (const PrecisionInsufficient& e) {
    return Failure{1, e.what(), {}};
  }
  if (!prep.stage1.possible) return Failure{1, stage1_reason(prep.stage1), {}};
  const auto adds = addends(prep.split);
  if (indices.size() != adds.size())
    throw IndexArityMismatch("expected " + std::to_string(adds.size()) + " indices, got " +
                             std::to_string(indices.size()));
  try {
    return build(problem, prep, indices, digits);
  } catch (const ValidityRadiusExceeded&) {
    throw;
  } catch (const Error& e) {
    return Failure{4, e.what(), {indices}};
  }
}

ProofResult replay(const ProblemSpec& problem, const std::map<std::string, unsigned>& labelled, unsigned digits) {
  const SignSplit split = split_signs(to_multi_angle(problem.f));
  return replay(problem, indices_from_labels(split, labelled), digits);
}

bool verify(const ProofCertificate& cert) {
  try {
    const ProblemSpec problem =
        make_problem(cert.problem.input, cert.problem.interval, cert.problem.goal, cert.problem.name);
    if (!(problem == cert.problem)) return false;
    const ProofResult again = replay(problem, cert.indices, cert.digits);
    const auto* c = std::get_if<ProofCertificate>(&again);
    return c != nullptr && *c == cert;
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace mtp

#include "mtp/render.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "mtp/certificate_io.hpp"
#include "mtp/errors.hpp"

namespace mtp {

namespace {

using json = nlohmann::json;

std::string rat_str(const Rational& r) { return r.numerator().get_str() + "/" + r.denominator().get_str(); }

// Exact decimal when the denominator is 2^a 5^b with few places, else a/b.
std::string short_decimal(const Rational& r) {
  for (unsigned places = 0; places <= 12; ++places) {
    const Rational scaled = r * Rational(pow10_neg(places).denominator());
    if (scaled.is_integer()) return to_decimal(r, places);
  }
  return r.str();
}

// Midpoint with `sig` significant digits.
std::string sig_decimal(const Enclosure& e, unsigned sig = 6) {
  const double v = std::fabs(e.mid().to_double());
  int lead = v > 0 ? static_cast<int>(std::floor(std::log10(v))) : 0;
  const int places = std::max(0, static_cast<int>(sig) - 1 - lead);
  return to_decimal(e.mid(), static_cast<unsigned>(places));
}

std::string sign_word(int s) { return s > 0 ? "> 0" : (s < 0 ? "< 0" : "= 0"); }

std::string join(const IndexAssignment& idx) {
  std::string s = "(";
  for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? ", " : "") + std::to_string(idx[i]);
  return s + ")";
}

Rational round_down(const Rational& r, unsigned places) {
  const Rational scale(pow10_neg(places).denominator());
  return Rational((r * scale).floor()) / scale;
}
Rational round_up(const Rational& r, unsigned places) {
  const Rational scale(pow10_neg(places).denominator());
  return Rational((r * scale).ceil()) / scale;
}

// ---- TeX pieces -----------------------------------------------------------

std::string tex_rational(const Rational& r) {
  const Rational m = r.abs();
  std::string body = m.is_integer() ? m.str() : "\\frac{" + m.numerator().get_str() + "}{" + m.denominator().get_str() + "}";
  return r.sign() < 0 ? "-" + body : body;
}

struct TexTerm {
  Rational coeff;
  std::string body;  // empty for a constant
};

std::string tex_sum(const std::vector<TexTerm>& terms) {
  std::string out;
  for (const auto& t : terms) {
    if (t.coeff.is_zero()) continue;
    const Rational m = t.coeff.abs();
    if (out.empty())
      out += t.coeff.sign() < 0 ? "-" : "";
    else
      out += t.coeff.sign() < 0 ? " - " : " + ";
    if (t.body.empty())
      out += tex_rational(m);
    else if (m == Rational(1))
      out += t.body;
    else
      out += tex_rational(m) + " \\cdot " + t.body;
  }
  return out.empty() ? "0" : out;
}

std::string tex_power(const std::string& base, unsigned e) {
  if (e == 0) return "";
  return e == 1 ? base : base + "^{" + std::to_string(e) + "}";
}

std::string tex_join(std::initializer_list<std::string> parts) {
  std::string out;
  for (const auto& p : parts) {
    if (p.empty()) continue;
    out += (out.empty() ? "" : " \\cdot ") + p;
  }
  return out;
}

std::string tex(const RationalPolynomial& p, const std::string& var = "x") {
  std::vector<TexTerm> terms;
  const auto& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) terms.push_back({c[i], tex_power(var, static_cast<unsigned>(i))});
  return tex_sum(terms);
}

std::string tex(const PiPolynomial& p) {
  std::vector<TexTerm> terms;
  const auto& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) terms.push_back({c[i], tex_power("\\pi", static_cast<unsigned>(i))});
  return tex_sum(terms);
}

std::string tex(const MtpFunction& f) {
  std::vector<TexTerm> terms;
  for (const auto& t : f.terms())
    terms.push_back({t.coeff, tex_join({tex_power("x", t.x_pow), t.cos_pow ? tex_power("\\cos", t.cos_pow) + " x" : "",
                                        t.sin_pow ? tex_power("\\sin", t.sin_pow) + " x" : ""})});
  return tex_sum(terms);
}

std::string tex_trig(TrigKind k, unsigned m) {
  return std::string(k == TrigKind::sin ? "\\sin " : "\\cos ") + (m == 1 ? "" : std::to_string(m)) + "x";
}

std::string tex(const MultiAngleForm& f) {
  std::vector<TexTerm> terms;
  for (const auto& t : f.trig_terms) terms.push_back({t.coeff, tex_join({tex_power("x", t.x_pow), tex_trig(t.kind, t.multiplier)})});
  const auto& c = f.poly_part.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) terms.push_back({c[i], tex_power("x", static_cast<unsigned>(i))});
  return tex_sum(terms);
}

std::string tex(const ScaledPi& p) {
  if (p.is_rational()) return tex_rational(p.rational_part);
  const Rational& c = p.pi_part;
  std::string pi;
  if (c.abs() == Rational(1))
    pi = "\\pi";
  else if (c.is_integer())
    pi = c.abs().str() + "\\pi";
  else
    pi = "\\frac{" + (c.numerator() == 1 || c.numerator() == -1 ? std::string() : Integer(abs(c.numerator())).get_str()) +
         "\\pi}{" + c.denominator().get_str() + "}";
  if (c.sign() < 0) pi = "-" + pi;
  if (p.rational_part.is_zero()) return pi;
  return tex_rational(p.rational_part) + (c.sign() < 0 ? " " : " + ") + pi;
}

std::string tex(const IntervalSpec& iv) {
  return std::string(iv.left_open ? "(" : "[") + tex(iv.left) + ", " + tex(iv.right) + (iv.right_open ? ")" : "]");
}

std::string tex_sign(int s) { return s > 0 ? "> 0" : (s < 0 ? "< 0" : "= 0"); }

constexpr const char* kTexHeader =
    "\\documentclass{article}\n\\usepackage{amsmath,amssymb}\n\\begin{document}\n";
constexpr const char* kTexFooter = "\\end{document}\n";

const char* kStage1 = "I (Recognition of possible case)";
const char* kStage2 = "II (Transformation of angles)";
const char* kStage3 = "III (Determination of downward rational polynomial approximation)";
const char* kStage4 = "IV (The final part)";

struct AddendLine {
  Addend addend;
  unsigned index;
  BoundSpec spec;
};

std::vector<AddendLine> addend_lines(const ProofCertificate& c) {
  std::vector<AddendLine> out;
  const auto adds = addends(SignSplit{c.f_plus, c.f_minus});
  for (std::size_t i = 0; i < adds.size() && i < c.indices.size(); ++i) {
    const auto dir = adds[i].sign > 0 ? BoundDirection::lower : BoundDirection::upper;
    out.push_back({adds[i], c.indices[i], BoundSpec::make(adds[i].kind, dir, c.indices[i])});
  }
  return out;
}

// "4*i+3" style degree formula for a bound.
std::string degree_formula(const BoundSpec& s, const std::string& i) {
  const unsigned offset = s.degree - 4 * s.index;
  return "4*" + i + (offset ? "+" + std::to_string(offset) : "");
}

std::vector<Rational> boundary_points(const PolyPositivityCertificate& s) {
  std::vector<Rational> pts{s.extended_segment.a};
  for (const auto& z : s.boundary_zeros) pts.push_back(z);
  pts.push_back(s.extended_segment.b);
  return pts;
}

std::string text_certificate(const ProofCertificate& c) {
  std::ostringstream o;
  const auto& pr = c.problem;
  const std::string S = pr.interval.str();
  o << "Problem " << (pr.name.empty() ? "(unnamed)" : pr.name) << "\n";
  if (pr.goal == Goal::negative) {
    o << "h(x) = " << render(pr.input) << "\n";
    o << "claim h(x) < 0, proven as f(x) = -h(x) > 0\n";
  }
  o << "f(x) = " << render(pr.f) << "\n";
  o << "interval S = " << S << "\n\n";

  o << kStage1 << "\n";
  for (const auto* b : {&c.stage1.left, &c.stage1.right}) {
    o << "  f(" << b->point.str() << ") = ";
    if (b->sign == 0) {
      o << "0" << (b->open ? " (open endpoint)" : "") << "\n";
      continue;
    }
    if (b->has_exact && b->exact.degree() > 0) o << b->exact.str() << " = ";
    o << sig_decimal(b->enclosure) << "... " << sign_word(b->sign) << "\n";
  }
  o << "  Therefore it is possible that f(x) > 0 over " << S << ".\n\n";

  o << kStage2 << "\n";
  o << "  f(x)  = " << c.form.str() << "\n";
  o << "  f+(x) = " << c.f_plus.str() << "\n";
  o << "  f-(x) = " << c.f_minus.str() << "\n\n";

  o << kStage3 << "\n";
  const auto lines = addend_lines(c);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto& l = lines[i];
    o << "  i" << i << " = " << l.index << ": " << l.addend.label() << " with "
      << (l.spec.direction == BoundDirection::lower ? "lower" : "upper") << " bound of degree "
      << degree_formula(l.spec, std::to_string(l.index)) << " = " << l.spec.degree << "\n";
  }
  o << "  indices " << join(c.indices) << "\n";
  o << "  P(x) = " << c.P.str() << "\n";
  o << "  f(x) > P(x) over " << S << "\n\n";

  const auto& s = c.stage4;
  o << kStage4 << "\n";
  o << "  1. By Sturm's theorem P has " << s.root_count << " distinct zero" << (s.root_count == 1 ? "" : "s")
    << " on the extended segment [" << short_decimal(s.extended_segment.a) << ", "
    << short_decimal(s.extended_segment.b) << "].\n";
  o << "  2. ";
  const auto pts = boundary_points(s);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const bool zero = i > 0 && i + 1 < pts.size();
    o << (i ? ", " : "") << "P(" << short_decimal(pts[i]) << ")" << (zero ? " = 0" : " != 0");
  }
  o << ".\n";
  o << "  3. P(" << s.witness_point.str() << ") = " << sig_decimal(s.witness_enclosure) << "... "
    << sign_word(s.witness_sign) << "\n";
  o << "  Therefore P(x) > 0 over " << S << ".\n\n";
  o << c.conclusion << "\n";
  return o.str();
}

std::string tex_certificate(const ProofCertificate& c) {
  std::ostringstream o;
  const auto& pr = c.problem;
  const std::string S = "$" + tex(pr.interval) + "$";
  o << kTexHeader;
  if (pr.goal == Goal::negative) {
    o << "The initial MTP inequality is $h(x) < 0$ with\n\\[ h(x) = " << tex(pr.input)
      << " \\]\nwhich is proven as $f(x) = -h(x) > 0$, where\n";
  } else {
    o << "The initial MTP function is\n";
  }
  o << "\\[ f(x) = " << tex(pr.f) << " \\]\nand the initial interval is $\\mathbb{S} = " << tex(pr.interval)
    << "$.\n\n";
  o << "Automated proof that $f(x) > 0$ for $x \\in " << tex(pr.interval) << "$:\n\n";

  o << "\\section*{" << kStage1 << "}\n\\begin{enumerate}\n";
  for (const auto* b : {&c.stage1.left, &c.stage1.right}) {
    o << "\\item $f(" << tex(b->point) << ") ";
    if (b->sign == 0)
      o << "= 0$" << (b->open ? " at an open endpoint" : "") << ".\n";
    else
      o << "= " << (b->has_exact && b->exact.degree() > 0 ? tex(b->exact) + " = " : std::string()) << sig_decimal(b->enclosure)
        << "\\dots " << tex_sign(b->sign) << "$.\n";
  }
  o << "\\end{enumerate}\nTherefore, it is possible that $f(x) > 0$ over " << S << ".\n\n";

  o << "\\section*{" << kStage2 << "}\n";
  o << "After the transformation of terms $\\cos^m x \\cdot \\sin^n x$ into sums of sine and cosine functions "
       "of multiple angles we obtain\n";
  o << "\\[ f(x) = " << tex(c.form) << " \\]\n";
  o << "with the positive and negative parts\n";
  o << "\\begin{align*}\nf^+(x) &= " << tex(c.f_plus) << ", \\\\\nf^-(x) &= " << tex(c.f_minus)
    << ".\n\\end{align*}\n\n";

  o << "\\section*{" << kStage3 << "}\n";
  o << "Each sine and cosine function is replaced by a downward or upward Taylor polynomial approximation:\n";
  o << "\\begin{enumerate}\n";
  const auto lines = addend_lines(c);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto& l = lines[i];
    const bool lower = l.spec.direction == BoundDirection::lower;
    o << "\\item $i_{" << i << "} = " << l.index << "$: $" << tex_trig(l.addend.kind, l.addend.multiplier) << "$ in $f^"
      << (l.addend.sign > 0 ? "+" : "-") << "$ is bounded by $" << (lower ? "\\underline{T}" : "\\overline{T}") << "_{"
      << l.spec.degree << "}^{\\" << to_string(l.addend.kind) << ", 0}(" << (l.addend.multiplier == 1 ? "" : std::to_string(l.addend.multiplier))
      << "x)$.\n";
  }
  o << "\\end{enumerate}\n";
  o << "For concrete indices $" << join(c.indices) << "$ we obtain the downward polynomial approximation\n";
  o << "\\[ P(x) = " << tex(c.P) << " \\]\n";
  o << "over " << S << ", i.e. $f(x) > P(x)$ over " << S << ".\n\n";

  const auto& s = c.stage4;
  o << "\\section*{" << kStage4 << "}\n";
  o << "Based on the Sturm theorem, the inequality $P(x) > 0$ is true over " << S
    << ". The conclusion is correct based on the following facts:\n\\begin{enumerate}\n";
  o << "\\item By the Sturm theorem, $P(x)$ has " << s.root_count << " distinct zero"
    << (s.root_count == 1 ? "" : "s") << " over the extended segment $[" << short_decimal(s.extended_segment.a) << ", "
    << short_decimal(s.extended_segment.b) << "]$ of the initial interval " << S << ".\n";
  o << "\\item Facts ";
  const auto pts = boundary_points(s);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const bool zero = i > 0 && i + 1 < pts.size();
    o << (i == 0 ? "" : (i + 1 == pts.size() ? " and " : ", ")) << "$P(" << short_decimal(pts[i]) << ")"
      << (zero ? " = 0" : " \\neq 0") << "$";
  }
  o << " are correct.\n";
  o << "\\item $P(" << tex(s.witness_point) << ") = " << sig_decimal(s.witness_enclosure) << "\\dots "
    << tex_sign(s.witness_sign) << "$.\n";
  o << "\\end{enumerate}\n";
  o << "Therefore, $f(x) > 0$ is true over " << S << ". $\\square$\n\n";
  o << "% " << c.conclusion << "\n";
  o << kTexFooter;
  return o.str();
}

json enclosure_json(const Enclosure& e, unsigned places) {
  return {{"lo", rat_str(e.lo())}, {"hi", rat_str(e.hi())}, {"decimal", e.decimal(places)}};
}

}  // namespace

RenderFormat parse_render_format(std::string_view name) {
  if (name == "text") return RenderFormat::text;
  if (name == "tex") return RenderFormat::tex;
  if (name == "json") return RenderFormat::json;
  throw std::invalid_argument("unknown format '" + std::string(name) + "' (expected text, tex or json)");
}

std::string to_string(RenderFormat f) {
  switch (f) {
    case RenderFormat::text: return "text";
    case RenderFormat::tex: return "tex";
    case RenderFormat::json: return "json";
  }
  return "text";
}

std::string render_certificate(const ProofCertificate& cert, RenderFormat format) {
  switch (format) {
    case RenderFormat::text: return text_certificate(cert);
    case RenderFormat::tex: return tex_certificate(cert);
    case RenderFormat::json: return certificate_to_json(cert);
  }
  return {};
}

std::string render_failure(const ProblemSpec& problem, const Failure& failure, RenderFormat format) {
  const std::string name = problem.name.empty() ? "(unnamed)" : problem.name;
  if (format == RenderFormat::json) {
    json attempted = json::array();
    for (const auto& a : failure.attempted) attempted.push_back(a);
    json j = {{"status", "failure"}, {"problem", name},   {"interval", problem.interval.str()},
              {"stage", failure.stage},  {"reason", failure.reason}, {"attempted", attempted}};
    return j.dump(2) + "\n";
  }
  std::ostringstream o;
  if (format == RenderFormat::tex) o << kTexHeader;
  o << "Proof of f(x) > 0 over " << problem.interval.str() << " for " << name << " failed at stage "
    << failure.stage << ": " << failure.reason << "\n";
  if (!failure.attempted.empty()) {
    o << "attempted index assignments:";
    for (const auto& a : failure.attempted) o << " " << join(a);
    o << "\n";
  }
  if (format == RenderFormat::tex) o << kTexFooter;
  return o.str();
}

StratifyReport build_stratify_report(const FamilySpec& family, const StratifyOptions& options) {
  StratifyReport r;
  r.family = family;
  r.digits = options.minimax.digits;
  r.constants = endpoint_constants(family);
  if (!options.skip_monotonicity) {
    r.inequality = monotonicity_inequality(family);
    r.monotonicity = certify_strict_monotone(family, options.prover);
  }
  const Enclosure a = r.constants.A.enclose(r.digits), b = r.constants.B.enclose(r.digits);
  const Rational below = r.constants.A.is_rational() ? r.constants.A.rational_value() : round_down(a.lo(), 12);
  const Rational above = r.constants.B.is_rational() ? r.constants.B.rational_value() : round_up(b.hi(), 12);
  const Rational middle = round_down((a.mid() + b.mid()) / Rational(2), 12);
  for (const Rational& p : {below, middle, above})
    r.classification.push_back({p, classify_parameter(family, p, options.minimax.t_tol)});
  r.minimax = solve_minimax(family, options.minimax);
  return r;
}

std::string render_stratify_report(const StratifyReport& r, RenderFormat format) {
  const auto& f = r.family;
  const auto& k = r.constants;
  const std::string name = f.name.empty() ? "(unnamed)" : f.name;
  const Enclosure A = k.A.enclose(r.digits), B = k.B.enclose(r.digits);
  auto minimax_line = [&]() -> std::string {
    if (!r.minimax.defined) return "minimax approximant: not defined (" + r.minimax.reason + ")";
    return "minimax approximant: p0 = " + r.minimax.p0.decimal(12) + ", t0 = " + r.minimax.t0.decimal(10) +
           ", d0 = " + r.minimax.d0.decimal(12);
  };
  auto class_line = [](const ClassificationSample& s) {
    std::string line = "p = " + short_decimal(s.p) + ": " + to_string(s.result.region);
    if (s.result.zero)
      line += ", zero of phi_p at x0 in [" + to_decimal(s.result.zero->lo(), 10) + ", " +
              to_decimal(s.result.zero->hi(), 10) + "]";
    return line;
  };

  if (format == RenderFormat::json) {
    json j;
    j["family"] = name;
    j["direction"] = to_string(f.direction);
    j["interval"] = f.interval.str();
    j["numerator"] = render(f.numerator);
    j["denominator"] = render(f.denominator);
    j["weight"] = {{"numerator", render(f.weight_num)}, {"denominator", render(f.weight_den)}};
    j["limit_at_zero"] = rat_str(k.at_zero);
    j["limit_at_right"] = k.at_right.str();
    auto constant = [&](const PiRational& q, const Enclosure& e) {
      json c = {{"exact", q.str()}, {"enclosure", enclosure_json(e, 12)}};
      json num = json::array(), den = json::array();
      for (const auto& x : q.num.coeffs()) num.push_back(rat_str(x));
      for (const auto& x : q.den.coeffs()) den.push_back(rat_str(x));
      c["numerator"] = num;
      c["denominator"] = den;
      return c;
    };
    j["A"] = constant(k.A, A);
    j["B"] = constant(k.B, B);
    if (!r.monotonicity) {
      j["monotonicity"] = {{"status", "skipped"}};
    } else {
      json m = {{"claim", to_string(r.inequality->claim)}, {"f", render(r.inequality->f)}};
      if (const auto* c = std::get_if<ProofCertificate>(&*r.monotonicity)) {
        m["status"] = "certified";
        m["certificate"] = json::parse(certificate_to_json(*c));
      } else {
        const auto& fl = std::get<Failure>(*r.monotonicity);
        m["status"] = "failed";
        m["stage"] = fl.stage;
        m["reason"] = fl.reason;
      }
      j["monotonicity"] = m;
    }
    json cls = json::array();
    for (const auto& s : r.classification) {
      json e = {{"p", rat_str(s.p)}, {"region", to_string(s.result.region)}};
      if (s.result.zero) e["x0"] = enclosure_json(*s.result.zero, 10);
      cls.push_back(e);
    }
    j["classification"] = cls;
    if (r.minimax.defined)
      j["minimax"] = {{"defined", true},
                      {"p0", enclosure_json(r.minimax.p0, 12)},
                      {"t0", enclosure_json(r.minimax.t0, 10)},
                      {"d0", enclosure_json(r.minimax.d0, 12)}};
    else
      j["minimax"] = {{"defined", false}, {"reason", r.minimax.reason}};
    return j.dump(2) + "\n";
  }

  std::vector<std::string> lines;
  lines.push_back("family " + name + ": " + to_string(f.direction) + " stratification on " + f.interval.str());
  lines.push_back("g(x) = (" + render(f.numerator) + ")/(" + render(f.denominator) + ")");
  lines.push_back("w(x) = (" + render(f.weight_num) + ")/(" + render(f.weight_den) + ")");
  lines.push_back("A = " + k.A.str() + " = " + A.decimal(12));
  lines.push_back("B = " + k.B.str() + " = " + B.decimal(12));
  if (!r.monotonicity) {
    lines.push_back("monotonicity: skipped");
  } else {
    lines.push_back("monotonicity: " + to_string(r.inequality->claim) + " iff f(x) > 0 with f(x) = " +
                    render(r.inequality->f));
    if (const auto* c = std::get_if<ProofCertificate>(&*r.monotonicity))
      lines.push_back("  certified with indices " + join(c->indices) + ", P(x) = " + c->P.str());
    else {
      const auto& fl = std::get<Failure>(*r.monotonicity);
      lines.push_back("  not certified (stage " + std::to_string(fl.stage) + "): " + fl.reason);
    }
  }
  lines.push_back("classification:");
  for (const auto& s : r.classification) lines.push_back("  " + class_line(s));
  lines.push_back(minimax_line());

  std::ostringstream o;
  if (format == RenderFormat::tex) {
    o << kTexHeader << "\\begin{verbatim}\n";
    for (const auto& l : lines) o << l << "\n";
    o << "\\end{verbatim}\n";
    o << "\\[ A = \\frac{" << tex(k.A.num) << "}{" << tex(k.A.den) << "}, \\quad B = \\frac{" << tex(k.B.num)
      << "}{" << tex(k.B.den) << "} \\]\n";
    o << kTexFooter;
    return o.str();
  }
  for (const auto& l : lines) o << l << "\n";
  return o.str();
}

}  // namespace mtp

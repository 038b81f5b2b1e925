#include "mtp/certificate_io.hpp"

#include <json.hpp>

#include "mtp/errors.hpp"

namespace mtp {

namespace {

using json = nlohmann::json;

constexpr const char* kFormat = "mtp-certificate";
constexpr int kVersion = 1;

std::string rat(const Rational& r) { return r.numerator().get_str() + "/" + r.denominator().get_str(); }

Rational rat(const json& j) {
  if (!j.is_string()) throw CertificateFormatError("expected a rational string, got " + j.dump());
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::exception&) {
    throw CertificateFormatError("bad rational " + j.dump());
  }
}

json rats(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& r : v) a.push_back(rat(r));
  return a;
}

std::vector<Rational> rat_list(const json& j) {
  if (!j.is_array()) throw CertificateFormatError("expected a coefficient list");
  std::vector<Rational> v;
  for (const auto& e : j) v.push_back(rat(e));
  return v;
}

json to_j(const ScaledPi& p) { return {{"rational", rat(p.rational_part)}, {"pi", rat(p.pi_part)}}; }
ScaledPi scaled_pi(const json& j) { return {rat(j.at("rational")), rat(j.at("pi"))}; }

json to_j(const Enclosure& e) { return {{"lo", rat(e.lo())}, {"hi", rat(e.hi())}}; }
Enclosure enclosure(const json& j) {
  const Rational lo = rat(j.at("lo")), hi = rat(j.at("hi"));
  if (hi < lo) throw CertificateFormatError("enclosure with lo > hi");
  return Enclosure(lo, hi);
}

json to_j(const IntervalSpec& iv) {
  return {{"left", to_j(iv.left)}, {"right", to_j(iv.right)}, {"left_open", iv.left_open},
          {"right_open", iv.right_open}, {"text", iv.str()}};
}
IntervalSpec interval(const json& j) {
  return {scaled_pi(j.at("left")), scaled_pi(j.at("right")), j.at("left_open").get<bool>(),
          j.at("right_open").get<bool>()};
}

json to_j(const MtpFunction& f) {
  json terms = json::array();
  for (const auto& t : f.terms())
    terms.push_back({{"coeff", rat(t.coeff)}, {"x", t.x_pow}, {"cos", t.cos_pow}, {"sin", t.sin_pow}});
  return {{"terms", terms}, {"text", render(f)}};
}
MtpFunction mtp_function(const json& j) {
  std::vector<MtpTerm> terms;
  for (const auto& t : j.at("terms"))
    terms.push_back({rat(t.at("coeff")), t.at("x").get<unsigned>(), t.at("cos").get<unsigned>(),
                     t.at("sin").get<unsigned>()});
  return normalize(std::move(terms));
}

json to_j(const MultiAngleForm& m) {
  json trig = json::array();
  for (const auto& t : m.trig_terms)
    trig.push_back(
        {{"coeff", rat(t.coeff)}, {"x", t.x_pow}, {"kind", to_string(t.kind)}, {"multiplier", t.multiplier}});
  return {{"poly", rats(m.poly_part.coeffs())}, {"trig", trig}, {"text", m.str()}};
}
MultiAngleForm multi_angle(const json& j) {
  MultiAngleForm m;
  m.poly_part = RationalPolynomial(rat_list(j.at("poly")));
  for (const auto& t : j.at("trig")) {
    const std::string kind = t.at("kind").get<std::string>();
    if (kind != "sin" && kind != "cos") throw CertificateFormatError("bad trig kind " + kind);
    m.trig_terms.push_back({rat(t.at("coeff")), t.at("x").get<unsigned>(),
                            kind == "sin" ? TrigKind::sin : TrigKind::cos, t.at("multiplier").get<unsigned>()});
  }
  return m;
}

json to_j(const BoundaryValue& b) {
  json j = {{"point", to_j(b.point)}, {"open", b.open}, {"enclosure", to_j(b.enclosure)}, {"sign", b.sign}};
  j["exact"] = b.has_exact ? rats(b.exact.coeffs()) : json(nullptr);
  return j;
}
BoundaryValue boundary(const json& j) {
  BoundaryValue b;
  b.point = scaled_pi(j.at("point"));
  b.open = j.at("open").get<bool>();
  b.has_exact = !j.at("exact").is_null();
  if (b.has_exact) b.exact = PiPolynomial(rat_list(j.at("exact")));
  b.enclosure = enclosure(j.at("enclosure"));
  b.sign = j.at("sign").get<int>();
  return b;
}

Goal goal(const std::string& s) {
  if (s == "positive") return Goal::positive;
  if (s == "negative") return Goal::negative;
  throw CertificateFormatError("bad goal " + s);
}

}  // namespace

std::string certificate_to_json(const ProofCertificate& c, int indent) {
  json j;
  j["format"] = kFormat;
  j["version"] = kVersion;
  j["digits"] = c.digits;
  j["problem"] = {{"name", c.problem.name},
                  {"goal", to_string(c.problem.goal)},
                  {"interval", to_j(c.problem.interval)},
                  {"input", to_j(c.problem.input)},
                  {"f", to_j(c.problem.f)}};
  j["stage1"] = {{"left", to_j(c.stage1.left)}, {"right", to_j(c.stage1.right)}, {"possible", c.stage1.possible}};
  j["stage2"] = {{"form", to_j(c.form)}, {"f_plus", to_j(c.f_plus)}, {"f_minus", to_j(c.f_minus)}};
  json labels = json::array();
  for (const auto& a : addends(SignSplit{c.f_plus, c.f_minus})) labels.push_back(a.label());
  j["stage3"] = {{"addends", labels}, {"indices", c.indices}, {"P", rats(c.P.coeffs())}, {"P_text", c.P.str()}};
  const auto& s = c.stage4;
  json zeros = json::array();
  for (const auto& z : s.boundary_zeros) zeros.push_back(rat(z));
  j["stage4"] = {{"P", rats(s.P.coeffs())},
                 {"interval", to_j(s.original_interval)},
                 {"segment", {rat(s.extended_segment.a), rat(s.extended_segment.b)}},
                 {"root_count", s.root_count},
                 {"boundary_zeros", zeros},
                 {"sign_at_a", s.sign_at_a},
                 {"sign_at_b", s.sign_at_b},
                 {"witness_point", to_j(s.witness_point)},
                 {"witness_value", rats(s.witness_value.coeffs())},
                 {"witness_enclosure", to_j(s.witness_enclosure)},
                 {"witness_sign", s.witness_sign}};
  j["conclusion"] = c.conclusion;
  return j.dump(indent) + "\n";
}

ProofCertificate certificate_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw CertificateFormatError(std::string("not valid JSON: ") + e.what());
  }
  try {
    if (j.at("format").get<std::string>() != kFormat) throw CertificateFormatError("not an mtp certificate");
    if (j.at("version").get<int>() != kVersion) throw CertificateFormatError("unsupported certificate version");
    ProofCertificate c;
    c.digits = j.at("digits").get<unsigned>();
    const json& p = j.at("problem");
    c.problem.name = p.at("name").get<std::string>();
    c.problem.goal = goal(p.at("goal").get<std::string>());
    c.problem.interval = interval(p.at("interval"));
    c.problem.input = mtp_function(p.at("input"));
    c.problem.f = mtp_function(p.at("f"));
    const json& s1 = j.at("stage1");
    c.stage1 = {boundary(s1.at("left")), boundary(s1.at("right")), s1.at("possible").get<bool>()};
    const json& s2 = j.at("stage2");
    c.form = multi_angle(s2.at("form"));
    c.f_plus = multi_angle(s2.at("f_plus"));
    c.f_minus = multi_angle(s2.at("f_minus"));
    const json& s3 = j.at("stage3");
    c.indices = s3.at("indices").get<IndexAssignment>();
    c.P = RationalPolynomial(rat_list(s3.at("P")));
    const json& s4 = j.at("stage4");
    auto& st = c.stage4;
    st.P = RationalPolynomial(rat_list(s4.at("P")));
    st.original_interval = interval(s4.at("interval"));
    const json& seg = s4.at("segment");
    if (!seg.is_array() || seg.size() != 2) throw CertificateFormatError("segment must have two endpoints");
    st.extended_segment = {rat(seg[0]), rat(seg[1])};
    st.root_count = s4.at("root_count").get<unsigned>();
    st.boundary_zeros = rat_list(s4.at("boundary_zeros"));
    st.sign_at_a = s4.at("sign_at_a").get<int>();
    st.sign_at_b = s4.at("sign_at_b").get<int>();
    st.witness_point = scaled_pi(s4.at("witness_point"));
    st.witness_value = PiPolynomial(rat_list(s4.at("witness_value")));
    st.witness_enclosure = enclosure(s4.at("witness_enclosure"));
    st.witness_sign = s4.at("witness_sign").get<int>();
    c.conclusion = j.at("conclusion").get<std::string>();
    return c;
  } catch (const json::exception& e) {
    throw CertificateFormatError(std::string("malformed certificate: ") + e.what());
  }
}

}  // namespace mtp

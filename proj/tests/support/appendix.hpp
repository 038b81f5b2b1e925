#pragma once

// Appendix problems with the published index tuples, final polynomials and
// printed decimals, shared by the unit tests and the acceptance binary.

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mtp/parser.hpp"
#include "mtp/polynomial.hpp"

namespace appendix {

inline std::string fixture_path(const std::string& name) { return std::string(MTP_FIXTURE_DIR) + "/" + name; }

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name));
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

inline mtp::ProblemSpec problem(const std::string& id) { return mtp::parse_problem(read_fixture(id + ".mtp")); }
inline mtp::FamilySpec family(const std::string& id) { return mtp::parse_family(read_fixture(id + ".family")); }

/// Polynomial from (power, "a/b") pairs.
inline mtp::RationalPolynomial poly(const std::vector<std::pair<unsigned, const char*>>& terms) {
  mtp::RationalPolynomial p;
  for (const auto& [k, c] : terms) p += mtp::RationalPolynomial::monomial(mtp::Rational::parse(c), k);
  return p;
}

struct Case {
  std::string id;
  /// Published tuple; `labels` gives the published addend order when it
  /// differs from the library's (A3), empty otherwise.
  std::vector<unsigned> indices;
  std::vector<std::string> labels;
  mtp::RationalPolynomial P;
  /// Printed stage I values: left (0 means f vanishes there) and right.
  double f_left;
  double f_right;
  /// Extended segment and Sturm count.
  mtp::Rational seg_a, seg_b;
  unsigned roots;
  /// Printed witness value of P at the right endpoint.
  double witness;
};

inline std::vector<Case> cases() {
  using mtp::Rational;
  const Rational a0(-1, 10), b0(158, 100);
  return {
      {"a1", {2, 2, 1, 2, 3}, {}, poly({{13, "-25357/2027520"}, {11, "115447/3548160"}}), 0, 3.51310, a0, b0, 1,
       0.24116},
      {"a2",
       {3, 3, 3, 3, 3, 3, 3, 3},
       {},
       poly({{23, "-1/6227020800"},
             {21, "-12417313/413952000"},
             {19, "-581132641/691891200"},
             {17, "-4449211/1663200"},
             {15, "21361/4160"},
             {13, "-424/11"},
             {11, "656/15"}}),
       0, 14.68957, a0, Rational(1), 1, 6.77772},
      {"a3",
       {3, 4, 1, 2, 4, 4, 2, 2},
       {"+sin(3x)", "+cos(3x)", "+sin(x)", "+cos(x)", "-sin(3x)", "-cos(3x)", "-sin(x)", "-cos(x)"},
       poly({{25, "-387420489/487911424000"},
             {23, "-129140163/9758228480"},
             {21, "-521856760043/4940103168000"},
             {19, "-10201878397/7841433600"},
             {17, "936145883/86486400"},
             {15, "-2048321/37440"},
             {13, "1587173/13728"},
             {11, "-19771/440"}}),
       27.02986, 5021.73462, Rational(1), b0, 0, 1228.02881},
      {"a4", {2, 2, 2}, {}, poly({{11, "-131/1330560"}, {9, "1/1008"}}), 0, 0.054404, a0, b0, 1, 0.043615},
      {"a5", {1, 1, 2, 2}, {}, poly({{15, "-31/120960"}, {13, "1/192"}, {11, "-3/16"}, {9, "5/8"}}), 0, 23.53938, a0,
       b0, 1, 11.074847},
      {"a6", {1, 2, 1, 2, 2}, {}, poly({{11, "-16/2835"}, {9, "89/4032"}}), 0, 1.29545, a0, b0, 1, 0.47438},
      {"a7",
       {2, 3, 1, 1, 2, 2},
       {},
       poly({{16, "-531441/1435033600"}, {14, "177147/20500480"}, {12, "-59049/394240"}, {10, "7003/20160"}}),
       0, 23.68123, a0, b0, 1, 2.27261},
  };
}

/// Labelled indices for cases published in a different addend order.
inline std::map<std::string, unsigned> labelled(const Case& c) {
  std::map<std::string, unsigned> m;
  for (std::size_t i = 0; i < c.labels.size(); ++i) m[c.labels[i]] = c.indices[i];
  return m;
}

}  // namespace appendix

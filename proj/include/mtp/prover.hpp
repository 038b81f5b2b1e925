#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "mtp/angle_reduce.hpp"
#include "mtp/parser.hpp"
#include "mtp/sturm.hpp"
#include "mtp/taylor_bounds.hpp"

namespace mtp {

/// f at one interval endpoint. `exact` is set when the value is a
/// pi-polynomial (endpoint 0 or pi/2); otherwise only the enclosure is known.
struct BoundaryValue {
  ScaledPi point;
  bool open = true;
  bool has_exact = false;
  PiPolynomial exact;
  Enclosure enclosure;
  int sign = 0;

  friend bool operator==(const BoundaryValue&, const BoundaryValue&) = default;
};

struct Stage1Report {
  BoundaryValue left;
  BoundaryValue right;
  bool possible = false;

  friend bool operator==(const Stage1Report&, const Stage1Report&) = default;
};

enum class SearchStrategy { uniform_escalation, greedy };

struct ProverConfig {
  unsigned max_index = 8;
  SearchStrategy search_strategy = SearchStrategy::uniform_escalation;
  unsigned digits = 30;
  /// Evaluate candidate assignments with the OpenMP kernel.
  bool parallel = true;
};

struct ProofCertificate {
  ProblemSpec problem;
  unsigned digits = 30;
  Stage1Report stage1;
  MultiAngleForm form;
  MultiAngleForm f_plus;
  MultiAngleForm f_minus;
  IndexAssignment indices;
  RationalPolynomial P;
  PolyPositivityCertificate stage4;
  std::string conclusion;

  friend bool operator==(const ProofCertificate&, const ProofCertificate&) = default;
};

struct Failure {
  int stage = 0;  // 1..4
  std::string reason;
  std::vector<IndexAssignment> attempted;
};

using ProofResult = std::variant<ProofCertificate, Failure>;

Stage1Report stage1_boundary(const ProblemSpec& problem, unsigned digits = 30);

ProofResult prove(const ProblemSpec& problem, const ProverConfig& config = {});

/// Uses exactly the given indices (addend order, see addends()).
ProofResult replay(const ProblemSpec& problem, const IndexAssignment& indices, unsigned digits = 30);
/// Indices keyed by addend label, e.g. {"+sin(3x)", 3}.
ProofResult replay(const ProblemSpec& problem, const std::map<std::string, unsigned>& labelled,
                   unsigned digits = 30);

/// Recomputes every stage from the certificate's problem and indices.
bool verify(const ProofCertificate& cert);

/// "f(x) > 0 is true over (0, pi/2)"
std::string conclusion_text(const IntervalSpec& interval);

std::string to_string(SearchStrategy s);

}  // namespace mtp

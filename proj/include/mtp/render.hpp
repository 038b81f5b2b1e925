#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mtp/prover.hpp"
#include "mtp/stratify.hpp"

namespace mtp {

enum class RenderFormat { text, tex, json };

/// "text", "tex" or "json"; std::invalid_argument otherwise.
RenderFormat parse_render_format(std::string_view name);
std::string to_string(RenderFormat f);

/// Stages I-IV in the appendix layout, ending with the conclusion line.
std::string render_certificate(const ProofCertificate& cert, RenderFormat format);
std::string render_failure(const ProblemSpec& problem, const Failure& failure, RenderFormat format);

struct StratifyOptions {
  MinimaxOptions minimax;
  ProverConfig prover;
  bool skip_monotonicity = false;
};

struct ClassificationSample {
  Rational p;
  Classification result;
};

struct StratifyReport {
  FamilySpec family;
  EndpointConstants constants;
  unsigned digits = 40;
  /// Empty when skipped.
  std::optional<MonotonicityInequality> inequality;
  std::optional<ProofResult> monotonicity;
  std::vector<ClassificationSample> classification;
  MinimaxResult minimax;
};

StratifyReport build_stratify_report(const FamilySpec& family, const StratifyOptions& options = {});

/// Text reports end with the minimax line, e.g.
/// "minimax approximant: not defined (weight diverges at right endpoint)".
std::string render_stratify_report(const StratifyReport& report, RenderFormat format);

}  // namespace mtp

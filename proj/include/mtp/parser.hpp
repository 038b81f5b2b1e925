#pragma once

#include <string>
#include <string_view>

#include "mtp/mtp.hpp"

namespace mtp {

enum class Goal { positive, negative };
enum class Direction { increasing, decreasing };

std::string to_string(Goal g);
std::string to_string(Direction d);

struct ProblemSpec {
  std::string name;
  MtpFunction input;  // as written in the file
  Goal goal = Goal::positive;
  IntervalSpec interval;
  /// The function proven positive: input, or -input for goal negative.
  MtpFunction f;

  friend bool operator==(const ProblemSpec&, const ProblemSpec&) = default;
};

/// g = numerator / denominator, weight w = weight_num / weight_den.
struct FamilySpec {
  std::string name;
  MtpFunction numerator;
  MtpFunction denominator;
  MtpFunction weight_num;
  MtpFunction weight_den;
  Direction direction = Direction::increasing;
  IntervalSpec interval;
};

MtpFunction parse_expression(std::string_view text);
/// Endpoint literal: integer, a/b, pi, pi/k, k*pi, (a/b)*pi.
ScaledPi parse_endpoint(std::string_view text);
IntervalSpec parse_interval(std::string_view text);

ProblemSpec parse_problem(std::string_view text);
FamilySpec parse_family(std::string_view text);

/// Builds a problem with validation; shared by the file parser and callers
/// that assemble problems programmatically.
ProblemSpec make_problem(MtpFunction input, IntervalSpec interval, Goal goal, std::string name = {});

/// Text of a problem file that parses back to `p`.
std::string render_problem(const ProblemSpec& p);

}  // namespace mtp

#include "mtp/parser.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "mtp/errors.hpp"

namespace mtp {

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : s_(text) {}

  MtpFunction parse() {
    MtpFunction f = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool accept_word(std::string_view w) {
    skip();
    if (s_.substr(pos_, w.size()) != w) return false;
    const std::size_t end = pos_ + w.size();
    if (end < s_.size() && std::isalnum(static_cast<unsigned char>(s_[end]))) return false;
    pos_ = end;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool peek_digit() {
    skip();
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }

  Integer integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer literal");
    if (pos_ < s_.size() && s_[pos_] == '.') fail("decimal literals are not allowed; use a/b");
    return Integer(std::string(s_.substr(start, pos_ - start)), 10);
  }

  MtpFunction expr() {
    MtpFunction acc = term();
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  MtpFunction term() {
    MtpFunction acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        if (!peek_digit()) fail("only division by an integer literal is supported");
        const Integer d = integer();
        if (d == 0) throw SyntaxError("division by zero", at);
        acc = acc * Rational(Integer(1), d);
      } else {
        return acc;
      }
    }
  }

  MtpFunction unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  MtpFunction power() {
    MtpFunction base = atom();
    if (accept('^')) {
      skip();
      if (pos_ < s_.size() && s_[pos_] == '-') throw NegativeExponent("negative exponent", pos_);
      if (!peek_digit()) fail("exponent must be a nonnegative integer literal");
      const Integer e = integer();
      if (e > 1000) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  MtpFunction atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    if (peek_digit()) return MtpFunction::constant(Rational(integer()));
    if (accept('(')) {
      MtpFunction inner = expr();
      expect(')');
      return inner;
    }
    if (accept_word("sin")) return trig(false);
    if (accept_word("cos")) return trig(true);
    if (accept_word("x")) return MtpFunction::monomial(Rational(1), 1);
    fail("unexpected '" + std::string(1, s_[pos_]) + "'");
  }

  MtpFunction trig(bool is_cos) {
    expect('(');
    const std::size_t arg_start = pos_;
    skip();
    if (s_.substr(pos_, 1) == "x") {
      ++pos_;
      if (accept(')')) return is_cos ? MtpFunction::monomial(Rational(1), 0, 1, 0) : MtpFunction::monomial(Rational(1), 0, 0, 1);
    }
    // find the matching parenthesis to report the offending argument
    int depth = 1;
    std::size_t end = arg_start;
    while (end < s_.size() && depth > 0) {
      if (s_[end] == '(') ++depth;
      if (s_[end] == ')') --depth;
      ++end;
    }
    std::string arg(s_.substr(arg_start, end - arg_start - (depth == 0 ? 1 : 0)));
    throw UnsupportedArgument("trigonometric argument must be x, got '" + arg + "'", arg_start);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

Rational parse_rational_literal(const std::string& s) {
  try {
    return Rational::parse(s);
  } catch (const std::exception&) {
    throw SyntaxError("malformed number '" + s + "'");
  }
}

// key: value lines; '#' starts a comment line.
std::map<std::string, std::string> parse_keyvalues(std::string_view text) {
  std::map<std::string, std::string> kv;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view l = trim(line);
    if (l.empty() || l.front() == '#') continue;
    const auto colon = l.find(':');
    if (colon == std::string_view::npos)
      throw SyntaxError("line " + std::to_string(lineno) + ": expected 'key: value'");
    std::string key(trim(l.substr(0, colon)));
    std::string value(trim(l.substr(colon + 1)));
    if (kv.count(key)) throw SyntaxError("line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
    kv.emplace(std::move(key), std::move(value));
  }
  return kv;
}

const std::string& require(const std::map<std::string, std::string>& kv, const std::string& key) {
  auto it = kv.find(key);
  if (it == kv.end()) throw SyntaxError("missing key '" + key + "'");
  return it->second;
}

void reject_unknown(const std::map<std::string, std::string>& kv, std::initializer_list<std::string_view> known) {
  for (const auto& [k, v] : kv) {
    bool ok = false;
    for (auto n : known) ok = ok || k == n;
    if (!ok) throw SyntaxError("unknown key '" + k + "'");
  }
}

MtpFunction parse_field(const std::map<std::string, std::string>& kv, const std::string& key) {
  try {
    return parse_expression(require(kv, key));
  } catch (const UnsupportedArgument& e) {
    throw UnsupportedArgument(key + ": " + e.what());
  } catch (const NegativeExponent& e) {
    throw NegativeExponent(key + ": " + e.what());
  } catch (const SyntaxError& e) {
    throw SyntaxError(key + ": " + e.what());
  }
}

void validate_interval(const IntervalSpec& iv) {
  if (compare(iv.left, ScaledPi::rational(Rational(0))) < 0 || compare(iv.right, ScaledPi::half_pi()) > 0)
    throw IntervalOutOfRange("interval " + iv.str() + " is not inside [0, pi/2]");
  if (compare(iv.left, iv.right) >= 0) throw IntervalOutOfRange("interval " + iv.str() + " is empty");
}

}  // namespace

std::string to_string(Goal g) { return g == Goal::positive ? "positive" : "negative"; }
std::string to_string(Direction d) { return d == Direction::increasing ? "increasing" : "decreasing"; }

MtpFunction parse_expression(std::string_view text) { return ExprParser(text).parse(); }

ScaledPi parse_endpoint(std::string_view text) {
  const std::string s = strip_spaces(text);
  const auto at = s.find("pi");
  if (at == std::string::npos) return ScaledPi::rational(parse_rational_literal(s));
  const std::string before = s.substr(0, at);
  const std::string after = s.substr(at + 2);
  Rational factor(1);
  if (!before.empty()) {
    if (before.back() != '*') throw SyntaxError("malformed endpoint '" + s + "'");
    std::string c = before.substr(0, before.size() - 1);
    if (c.size() >= 2 && c.front() == '(' && c.back() == ')') c = c.substr(1, c.size() - 2);
    factor = parse_rational_literal(c);
  }
  if (!after.empty()) {
    if (after.front() != '/') throw SyntaxError("malformed endpoint '" + s + "'");
    const Rational d = parse_rational_literal(after.substr(1));
    if (d.is_zero()) throw SyntaxError("malformed endpoint '" + s + "'");
    factor /= d;
  }
  return ScaledPi{Rational(0), factor};
}

IntervalSpec parse_interval(std::string_view text) {
  const std::string s = strip_spaces(text);
  if (s.size() < 5) throw SyntaxError("malformed interval '" + std::string(text) + "'");
  IntervalSpec iv;
  const char open = s.front(), close = s.back();
  if ((open != '(' && open != '[') || (close != ')' && close != ']'))
    throw SyntaxError("interval must use ( [ and ) ] brackets: '" + s + "'");
  iv.left_open = open == '(';
  iv.right_open = close == ')';
  // the separating comma is the first one outside nested parentheses
  int depth = 0;
  std::size_t comma = std::string::npos;
  for (std::size_t i = 1; i + 1 < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == ',' && depth == 0) {
      comma = i;
      break;
    }
  }
  if (comma == std::string::npos) throw SyntaxError("interval needs two endpoints: '" + s + "'");
  iv.left = parse_endpoint(s.substr(1, comma - 1));
  iv.right = parse_endpoint(s.substr(comma + 1, s.size() - comma - 2));
  validate_interval(iv);
  return iv;
}

ProblemSpec make_problem(MtpFunction input, IntervalSpec interval, Goal goal, std::string name) {
  validate_interval(interval);
  ProblemSpec p;
  p.name = std::move(name);
  p.f = goal == Goal::negative ? -input : input;
  p.input = std::move(input);
  p.goal = goal;
  p.interval = std::move(interval);
  return p;
}

ProblemSpec parse_problem(std::string_view text) {
  const auto kv = parse_keyvalues(text);
  reject_unknown(kv, {"name", "goal", "interval", "f"});
  Goal goal = Goal::positive;
  if (auto it = kv.find("goal"); it != kv.end()) {
    if (it->second == "positive") goal = Goal::positive;
    else if (it->second == "negative") goal = Goal::negative;
    else throw SyntaxError("goal must be positive or negative, got '" + it->second + "'");
  }
  const IntervalSpec iv = parse_interval(require(kv, "interval"));
  auto name = kv.count("name") ? kv.at("name") : std::string();
  return make_problem(parse_field(kv, "f"), iv, goal, std::move(name));
}

FamilySpec parse_family(std::string_view text) {
  const auto kv = parse_keyvalues(text);
  reject_unknown(kv, {"name", "kind", "direction", "interval", "numerator", "denominator", "weight_num", "weight_den"});
  if (require(kv, "kind") != "family") throw SyntaxError("kind must be 'family'");
  FamilySpec fam;
  if (kv.count("name")) fam.name = kv.at("name");
  const std::string& dir = require(kv, "direction");
  if (dir == "increasing") fam.direction = Direction::increasing;
  else if (dir == "decreasing") fam.direction = Direction::decreasing;
  else throw SyntaxError("direction must be increasing or decreasing, got '" + dir + "'");
  fam.interval = parse_interval(require(kv, "interval"));
  validate_interval(fam.interval);
  fam.numerator = parse_field(kv, "numerator");
  fam.denominator = parse_field(kv, "denominator");
  fam.weight_num = parse_field(kv, "weight_num");
  fam.weight_den = parse_field(kv, "weight_den");
  if (fam.denominator.is_zero()) throw ZeroDenominator("denominator is the zero function");
  if (fam.weight_num.is_zero()) throw ZeroDenominator("weight_num is the zero function");
  if (fam.weight_den.is_zero()) throw ZeroDenominator("weight_den is the zero function");

  // contract check: D, weight_num and weight_den positive on an interior grid
  const Rational a = fam.interval.left.upper_bracket(4);
  const Rational b = fam.interval.right.lower_bracket(4);
  constexpr int kGrid = 16;
  for (int i = 1; i < kGrid; ++i) {
    const Rational x = a + (b - a) * Rational(i, kGrid);
    for (const auto* part : {&fam.denominator, &fam.weight_num, &fam.weight_den}) {
      if (eval_enclosure(*part, x, 20).hi().sign() <= 0)
        throw ZeroDenominator("denominator or weight not positive at x = " + x.str());
    }
  }
  return fam;
}

std::string render_problem(const ProblemSpec& p) {
  std::string out;
  if (!p.name.empty()) out += "name: " + p.name + "\n";
  out += "goal: " + to_string(p.goal) + "\n";
  out += "interval: " + p.interval.str() + "\n";
  out += "f: " + render(p.input) + "\n";
  return out;
}

}  // namespace mtp

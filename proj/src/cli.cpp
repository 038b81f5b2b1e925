#include "mtp/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "mtp/certificate_io.hpp"
#include "mtp/errors.hpp"
#include "mtp/parser.hpp"
#include "mtp/prover.hpp"
#include "mtp/render.hpp"
#include "mtp/stratify.hpp"

namespace mtp {

namespace {

constexpr const char* kDigitsEnv = "MTP_DIGITS";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read file '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

unsigned parse_unsigned(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty() || text.front() == '-')
    throw UsageError(what + " must be a nonnegative integer, got '" + text + "'");
  return static_cast<unsigned>(v);
}

// Default precision, unless overridden through the environment.
unsigned default_digits(unsigned fallback) {
  const char* env = std::getenv(kDigitsEnv);
  if (env == nullptr || *env == '\0') return fallback;
  const unsigned d = parse_unsigned(env, kDigitsEnv);
  if (d == 0) throw UsageError(std::string(kDigitsEnv) + " must be positive");
  return d;
}

// "1e-9", "0.000001" or "1/1000".
Rational parse_tolerance(const std::string& text) {
  const auto bad = [&] { return UsageError("bad tolerance '" + text + "'"); };
  Rational value;
  const auto e = text.find_first_of("eE");
  const std::string mantissa = text.substr(0, e);
  try {
    if (mantissa.find('.') != std::string::npos) {
      const auto dot = mantissa.find('.');
      const std::string frac = mantissa.substr(dot + 1);
      value = Rational::parse(mantissa.substr(0, dot).empty() ? "0" : mantissa.substr(0, dot)) +
              Rational::parse(frac.empty() ? "0" : frac) * pow10_neg(static_cast<unsigned>(frac.size()));
    } else {
      value = Rational::parse(mantissa);
    }
    if (e != std::string::npos) {
      const int exp = std::stoi(text.substr(e + 1));
      value *= exp < 0 ? pow10_neg(static_cast<unsigned>(-exp)) : Rational(1) / pow10_neg(static_cast<unsigned>(exp));
    }
  } catch (const std::exception&) {
    throw bad();
  }
  if (value.sign() <= 0) throw bad();
  return value;
}

std::string stem(const std::string& path) { return std::filesystem::path(path).stem().string(); }

ProblemSpec load_problem(const std::string& path) {
  ProblemSpec p = parse_problem(read_file(path));
  if (p.name.empty()) p = make_problem(p.input, p.interval, p.goal, stem(path));
  return p;
}

void emit(const std::string& text, const std::string& output, std::ostream& out) {
  if (output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(output, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + output + "'");
  f << text;
}

int finish(const ProblemSpec& problem, const ProofResult& result, RenderFormat format, const std::string& output,
           std::ostream& out, std::ostream& err) {
  if (const auto* cert = std::get_if<ProofCertificate>(&result)) {
    emit(render_certificate(*cert, format), output, out);
    return kExitOk;
  }
  const auto& failure = std::get<Failure>(result);
  emit(render_failure(problem, failure, format), output, out);
  err << "proof failed at stage " << failure.stage << ": " << failure.reason << "\n";
  return kExitFailed;
}

// "2,2,1,2,3" or "+sin(3x)=3,-cos(x)=2,...".
std::variant<IndexAssignment, std::map<std::string, unsigned>> parse_indices(const std::string& text) {
  std::vector<std::string> items;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      items.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur += ch;
    }
  }
  items.push_back(cur);
  if (text.find('=') == std::string::npos) {
    IndexAssignment idx;
    for (const auto& s : items) idx.push_back(parse_unsigned(s, "index"));
    return idx;
  }
  std::map<std::string, unsigned> labelled;
  for (const auto& s : items) {
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw UsageError("mixed labelled and positional indices in '" + text + "'");
    if (!labelled.emplace(s.substr(0, eq), parse_unsigned(s.substr(eq + 1), "index")).second)
      throw UsageError("duplicate label " + s.substr(0, eq));
  }
  return labelled;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact prover for mixed trigonometric polynomial inequalities on subsets of [0, pi/2]", "mtp"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  std::string file, format_name = "text", output, strategy_name = "uniform", indices_text, tol_text;
  unsigned max_index = 8;
  std::optional<unsigned> digits_flag;
  bool serial = false, skip_mono = false;

  auto* prove_cmd = app.add_subcommand("prove", "Search index assignments and prove f > 0");
  prove_cmd->add_option("file", file, "Problem file")->required();
  prove_cmd->add_option("--format", format_name, "text, tex or json");
  prove_cmd->add_option("--max-index", max_index, "Largest bound index tried");
  prove_cmd->add_option("--digits", digits_flag, "Decimal digits for sign decisions");
  prove_cmd->add_option("--output", output, "Write the certificate here instead of stdout");
  prove_cmd->add_option("--strategy", strategy_name, "uniform or greedy");
  prove_cmd->add_flag("--serial", serial, "Evaluate candidates on one thread");

  auto* replay_cmd = app.add_subcommand("replay", "Prove with fixed bound indices");
  replay_cmd->add_option("file", file, "Problem file")->required();
  replay_cmd->add_option("--indices", indices_text, "i0,i1,... or +sin(3x)=3,...")->required();
  replay_cmd->add_option("--format", format_name, "text, tex or json");
  replay_cmd->add_option("--digits", digits_flag, "Decimal digits for sign decisions");
  replay_cmd->add_option("--output", output, "Write the certificate here instead of stdout");

  auto* stratify_cmd = app.add_subcommand("stratify", "Analyse a stratified family");
  stratify_cmd->add_option("file", file, "Family file")->required();
  stratify_cmd->add_option("--tol", tol_text, "Tolerance on p for the minimax solve (default 1e-9)");
  stratify_cmd->add_option("--digits", digits_flag, "Working precision in decimal digits");
  stratify_cmd->add_option("--format", format_name, "text, tex or json");
  stratify_cmd->add_option("--output", output, "Write the report here instead of stdout");
  stratify_cmd->add_flag("--skip-monotonicity", skip_mono, "Do not certify that g is monotone");

  auto* verify_cmd = app.add_subcommand("verify", "Recompute every stage of a JSON certificate");
  verify_cmd->add_option("file", file, "Certificate file (json)")->required();

  std::vector<const char*> argv{"mtp"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const RenderFormat format = parse_render_format(format_name);

    if (prove_cmd->parsed()) {
      const ProblemSpec problem = load_problem(file);
      ProverConfig config;
      config.max_index = max_index;
      config.digits = digits_flag ? *digits_flag : default_digits(config.digits);
      config.parallel = !serial;
      if (strategy_name == "greedy")
        config.search_strategy = SearchStrategy::greedy;
      else if (strategy_name != "uniform" && strategy_name != "uniform_escalation")
        throw UsageError("unknown strategy '" + strategy_name + "'");
      return finish(problem, prove(problem, config), format, output, out, err);
    }

    if (replay_cmd->parsed()) {
      const ProblemSpec problem = load_problem(file);
      const unsigned digits = digits_flag ? *digits_flag : default_digits(30);
      const auto parsed = parse_indices(indices_text);
      const ProofResult result = std::holds_alternative<IndexAssignment>(parsed)
                                     ? replay(problem, std::get<IndexAssignment>(parsed), digits)
                                     : replay(problem, std::get<std::map<std::string, unsigned>>(parsed), digits);
      return finish(problem, result, format, output, out, err);
    }

    if (stratify_cmd->parsed()) {
      FamilySpec family = parse_family(read_file(file));
      if (family.name.empty()) family.name = stem(file);
      StratifyOptions options;
      options.minimax.digits = digits_flag ? *digits_flag : default_digits(options.minimax.digits);
      if (!tol_text.empty()) options.minimax.p_tol = parse_tolerance(tol_text);
      options.skip_monotonicity = skip_mono;
      const StratifyReport report = build_stratify_report(family, options);
      emit(render_stratify_report(report, format), output, out);
      if (report.monotonicity && std::holds_alternative<Failure>(*report.monotonicity)) {
        err << "monotonicity of g was not certified\n";
        return kExitFailed;
      }
      return kExitOk;
    }

    if (verify_cmd->parsed()) {
      const ProofCertificate cert = certificate_from_json(read_file(file));
      if (verify(cert)) {
        out << "certificate verified: " << cert.conclusion << "\n";
        return kExitOk;
      }
      out << "certificate rejected\n";
      return kExitFailed;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SyntaxError& e) {
    err << "syntax error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IntervalOutOfRange& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ZeroDenominator& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IndexArityMismatch& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CertificateFormatError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "failed: " << e.what() << "\n";
    return kExitFailed;
  }
  return kExitUsage;
}

}  // namespace mtp

#pragma once

// Command-line front end. `run_cli` is the whole program minus process
// plumbing, so tests drive it in-process with string streams.
//
// Exit codes:
//   0  success / every check passed
//   1  a verification or Desargues check failed
//   2  usage, parse or backend error
//   3  singular or degenerate input (vanishing difference, invalid base,
//      degenerate configuration, ...)

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "desargues/constructions.hpp"
#include "desargues/crossratio_maps.hpp"
#include "desargues/error.hpp"
#include "desargues/expression.hpp"
#include "desargues/selftest.hpp"
#include "desargues/svg.hpp"
#include "desargues/text.hpp"
#include "desargues/verify.hpp"

namespace desargues::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kSingular = 3 };

inline int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BackendMismatch:
    case ErrorKind::InvalidModulus:
    case ErrorKind::UnsupportedBackend:
    case ErrorKind::ParseError:
      return kUsage;
    default:
      return kSingular;
  }
}

struct EvalCommand {
  std::string expression;
  std::string backend = "rational";
};

struct ConstructCommand {
  ConstructionOp op = ConstructionOp::Add;
  std::string a, b;
  std::string aux = "(0,1)";
  std::optional<std::string> svg_path;
  std::string backend = "rational";
};

struct VerifyCommand {
  MapFamily family = MapFamily::A;
  std::string base;
  std::string backend = "rational";
  std::uint64_t seed = 0;
  std::size_t count = 100;
  bool exhaustive = false;
};

struct DesarguesCommand {
  std::string config_path;
  std::string backend = "rational";
};

struct SelfTestCommand {
  std::uint64_t seed = 0;
  std::size_t count = 50;
};

using Command =
    std::variant<EvalCommand, ConstructCommand, VerifyCommand, DesarguesCommand, SelfTestCommand>;

namespace detail {

template <class Fn>
decltype(auto) with_backend(const std::string& spec, Fn&& fn) {
  return std::visit(std::forward<Fn>(fn), parse_backend(spec));
}

inline int run_eval(const EvalCommand& cmd, std::ostream& out) {
  return with_backend(cmd.backend, [&](const auto& field) {
    const auto ast = parse_expression(field, cmd.expression);
    out << to_string(evaluate_expression(ast)) << "\n";
    return kOk;
  });
}

inline int run_construct(const ConstructCommand& cmd, std::ostream& out) {
  return with_backend(cmd.backend, [&](const auto& field) {
    using S = scalar_t<std::decay_t<decltype(field)>>;
    const auto frame = LineFrame<S>::canonical(field);
    const auto a = frame.embed(parse_scalar(field, cmd.a));
    const auto b = frame.embed(parse_scalar(field, cmd.b));
    const auto aux = parse_point(field, cmd.aux);
    const auto trace = cmd.op == ConstructionOp::Add ? trace_add(frame, a, b, aux)
                                                     : trace_mul(frame, a, b, aux);
    std::string svg;
    if (cmd.svg_path) svg = render_svg(trace);
    out << "O = " << to_string(trace.origin) << "\n"
        << "I = " << to_string(trace.unit) << "\n"
        << "A = " << to_string(trace.a) << "\n"
        << "B = " << to_string(trace.b) << "\n"
        << "B1 = " << to_string(trace.aux) << "\n"
        << "P1 = " << to_string(trace.p1) << "\n"
        << "result = " << to_string(trace.result) << "\n"
        << "coordinate = " << to_string(frame.extract(trace.result)) << "\n";
    if (cmd.svg_path) {
      std::ofstream file(*cmd.svg_path, std::ios::binary);
      if (!file) throw Error(ErrorKind::ParseError, "cannot write " + *cmd.svg_path);
      file << svg;
    }
    return kOk;
  });
}

inline int run_verify(const VerifyCommand& cmd, std::ostream& out) {
  return with_backend(cmd.backend, [&](const auto& field) {
    const auto pts = parse_scalar_list(field, cmd.base, 3);
    const auto base = CrossRatioBase<scalar_t<std::decay_t<decltype(field)>>>::make(
        cmd.family, pts[0], pts[1], pts[2]);
    const Report report = verify_family(field, base, SampleSpec{cmd.seed, cmd.count, cmd.exhaustive});
    out << format_report(report);
    out << (report.passed() ? "verify: PASS" : "verify: FAIL") << "\n";
    return report.passed() ? kOk : kCheckFailed;
  });
}

inline int run_desargues(const DesarguesCommand& cmd, std::ostream& out) {
  std::ifstream file(cmd.config_path, std::ios::binary);
  if (!file) throw Error(ErrorKind::ParseError, "cannot read " + cmd.config_path);
  std::ostringstream buf;
  buf << file.rdbuf();
  const std::string text = buf.str();
  return with_backend(cmd.backend, [&](const auto& field) {
    const auto cfg = parse_desargues_config(field, text);
    bool hypotheses = true;
    for (const auto& h : desargues_hypotheses(cfg)) {
      out << "hypothesis " << h.name << ": " << (h.holds ? "holds" : "FAILS") << "\n";
      hypotheses = hypotheses && h.holds;
    }
    if (!hypotheses) {
      out << "InvalidConfiguration\n";
      return kSingular;
    }
    const bool parallel = check_desargues(cfg);
    out << "conclusion AC || A'C': " << (parallel ? "true" : "false") << "\n";
    return parallel ? kOk : kCheckFailed;
  });
}

}  // namespace detail

/// Executes one command. Library errors are reported on `err` with their
/// kind and details and mapped to exit codes.
inline int run(const Command& command, std::ostream& out, std::ostream& err) {
  try {
    return std::visit(
        [&](const auto& cmd) -> int {
          using T = std::decay_t<decltype(cmd)>;
          if constexpr (std::is_same_v<T, EvalCommand>) {
            return detail::run_eval(cmd, out);
          } else if constexpr (std::is_same_v<T, ConstructCommand>) {
            return detail::run_construct(cmd, out);
          } else if constexpr (std::is_same_v<T, VerifyCommand>) {
            return detail::run_verify(cmd, out);
          } else if constexpr (std::is_same_v<T, DesarguesCommand>) {
            return detail::run_desargues(cmd, out);
          } else {
            return run_selftest(cmd.seed, cmd.count, out) ? kOk : kCheckFailed;
          }
        },
        command);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
}

/// Parses argv into a Command; nullopt with `code` set when the program
/// should exit without running anything (help, usage errors).
inline std::optional<Command> parse_args(const std::vector<std::string>& args, std::ostream& out,
                                         std::ostream& err, int& code) {
  CLI::App app{"Exact cross-ratio and Desargues-plane toolkit", "desargues"};
  app.require_subcommand(1);

  EvalCommand eval;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate an expression exactly");
  eval_cmd->add_option("expression", eval.expression, "e.g. \"cr(2,3;1,5)\"")->required();
  eval_cmd->add_option("--backend", eval.backend, "rational | quaternion | gfp(p)");

  ConstructCommand construct;
  std::string op;
  auto* construct_cmd = app.add_subcommand("construct", "Trace the addition or multiplication construction");
  construct_cmd->add_option("op", op, "add | mul")->required()->check(CLI::IsMember({"add", "mul"}));
  construct_cmd->add_option("--a", construct.a, "coordinate of A on line OI")->required();
  construct_cmd->add_option("--b", construct.b, "coordinate of B on line OI")->required();
  construct_cmd->add_option("--aux", construct.aux, "auxiliary point B1 off line OI");
  construct_cmd->add_option("--svg", construct.svg_path, "write the drawing here (rational only)");
  construct_cmd->add_option("--backend", construct.backend, "rational | quaternion | gfp(p)");

  VerifyCommand verify;
  std::string family;
  auto* verify_cmd = app.add_subcommand("verify", "Check the identities of one cross-ratio family");
  verify_cmd->add_option("--family", family, "A | B | C | D")->required()->check(CLI::IsMember({"A", "B", "C", "D"}));
  verify_cmd->add_option("--base", verify.base, "the three fixed points, in slot order")->required();
  verify_cmd->add_option("--backend", verify.backend, "rational | quaternion | gfp(p)");
  verify_cmd->add_option("--seed", verify.seed, "sampling seed");
  verify_cmd->add_option("--count", verify.count, "samples per identity")->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--exhaustive", verify.exhaustive, "every admissible tuple (finite fields)");

  DesarguesCommand desargues;
  auto* desargues_cmd = app.add_subcommand("desargues", "Check a Desargues configuration file");
  desargues_cmd->add_option("--config", desargues.config_path, "configuration file")->required();
  desargues_cmd->add_option("--backend", desargues.backend, "rational | quaternion | gfp(p)");

  SelfTestCommand selftest;
  auto* selftest_cmd = app.add_subcommand("selftest", "Run the invariant suite");
  selftest_cmd->add_option("--seed", selftest.seed, "sampling seed");
  selftest_cmd->add_option("--count", selftest.count, "samples per identity")->check(CLI::PositiveNumber);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("desargues");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    code = rc == 0 ? kOk : kUsage;
    return std::nullopt;
  }

  if (eval_cmd->parsed()) return eval;
  if (construct_cmd->parsed()) {
    construct.op = op == "add" ? ConstructionOp::Add : ConstructionOp::Mul;
    return construct;
  }
  if (verify_cmd->parsed()) {
    verify.family = static_cast<MapFamily>(family[0] - 'A');
    return verify;
  }
  if (desargues_cmd->parsed()) return desargues;
  return selftest;
}

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  int code = kOk;
  const auto command = parse_args(args, out, err, code);
  if (!command) return code;
  return run(*command, out, err);
}

}  // namespace desargues::cli

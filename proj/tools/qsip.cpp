// qsip: command-line front end.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "qsip/cli.hpp"
#include "qsip/error.hpp"

namespace {

std::optional<std::string> slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Branch-locus analysis, S-unit constructions and integral point search"};
  std::string command;
  std::string problem_path;
  app.add_option("command", command, "analyze | sunit | construct | scan | solve | verify")
      ->required()
      ->check(CLI::IsMember({"analyze", "sunit", "construct", "scan", "solve", "verify"}));
  app.add_option("problem", problem_path, "problem file");

  std::optional<std::string> vars, f, proj, primes, c, form, cvals, points;
  std::optional<std::int64_t> height;
  std::optional<unsigned> expbound, precision;
  std::optional<bool> primitive;
  qsip::cli::Flags flags;
  bool no_dims = false;
  std::string emit;
  app.add_option("--vars", vars, "variable declaration, e.g. \"X0 X1 X2\"");
  app.add_option("--f", f, "the form f");
  app.add_option("--proj", proj, "projection variable");
  app.add_option("--primes", primes, "primes of S, e.g. \"2 3\"");
  app.add_option("--height", height, "height bound (scan) or box bound (solve)");
  app.add_option("--expbound", expbound, "exponent bound for S-unit enumeration");
  app.add_option("--precision", precision, "binary precision of numeric roots");
  app.add_option("--primitive", primitive, "solve: primitive tuples only");
  app.add_option("--c", c, "solve: right-hand side");
  app.add_option("--form", form, "solve: the form F (defaults to f)");
  app.add_option("--cvals", cvals, "construct: constants c_2 ... c_d, or c for d = 3");
  app.add_option("--points", points, "verify: file listing points");
  app.add_option("--emit", emit, "write the report to this path instead of stdout");
  app.add_flag("--check-only", flags.check_only, "scan: run the identity suite without searching");
  app.add_flag("--no-dims", no_dims, "analyze: skip Groebner dimension computations");
  app.add_option("--threads", flags.threads, "scan worker threads")->check(CLI::Range(1u, 256u));
  app.add_option("--max-pairs", flags.max_pairs, "Groebner pair budget");
  app.add_option("--max-degree", flags.max_degree, "Groebner degree budget");
  CLI11_PARSE(app, argc, argv);
  flags.dims = !no_dims;

  qsip::cli::ProblemFile pf;
  try {
    if (!problem_path.empty()) {
      const auto text = slurp(problem_path);
      if (!text) {
        std::cerr << "cannot read " << problem_path << "\n";
        return qsip::cli::kInputError;
      }
      pf = qsip::cli::parse_problem(*text);
    }
    // Flags override file keys; a one-line file fragment reuses the parser.
    auto override_key = [&](const char* key, const std::optional<std::string>& v) {
      if (!v) return;
      const auto part = qsip::cli::parse_problem(std::string(key) + ": " + *v + "\n");
      if (std::string(key) == "vars") pf.vars = part.vars;
      if (std::string(key) == "primes") pf.primes = part.primes;
      pf.origins.erase(key);
    };
    override_key("vars", vars);
    override_key("primes", primes);
    if (f) pf.f_text = *f, pf.origins.erase("f");
    if (proj) pf.proj = *proj;
    if (c) pf.c_text = *c;
    if (form) pf.form_text = *form, pf.origins.erase("form");
    if (cvals) pf.cvals = *cvals;
    if (height) pf.height = *height;
    if (expbound) pf.expbound = *expbound;
    if (precision) pf.precision = *precision;
    if (primitive) pf.primitive = *primitive;
    if (points) {
      const auto text = slurp(*points);
      if (!text) {
        std::cerr << "cannot read " << *points << "\n";
        return qsip::cli::kInputError;
      }
      flags.points_text = *text;
    }
  } catch (const qsip::Error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return qsip::cli::kInputError;
  }

  const auto result = qsip::cli::run(command, pf, flags);
  const std::string text = result.report.dump(2) + "\n";
  if (!emit.empty()) {
    std::ofstream out(emit, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << emit << "\n";
      return qsip::cli::kInputError;
    }
    out << text;
  } else {
    std::cout << text;
  }
  for (const auto& w : result.report["warnings"])
    if (w.get<std::string>().rfind("error: ", 0) == 0) std::cerr << w.get<std::string>() << "\n";
  return result.exit_code;
}

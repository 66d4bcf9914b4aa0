#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qsip/mpoly.hpp"

namespace qsip::cli {

using Report = nlohmann::ordered_json;

/// poly  := ['+'|'-'] term (('+'|'-') term)*
/// term  := coeff | [coeff ['*']] factor ('*' factor)*
/// factor:= var ['^' nat]      coeff := int ['/' int]      var := [A-Z][0-9]*
/// Throws SyntaxError with a 1-based line and column.
MPoly parse_poly(std::string_view text, const std::vector<std::string>& vars);

/// Terms by descending total degree, then descending lexicographic exponent.
std::string print_poly(const MPoly& p, const std::vector<std::string>& vars);

struct ProblemFile {
  std::vector<std::string> vars;
  std::string f_text;
  std::string proj;
  std::vector<std::uint64_t> primes;
  std::optional<std::int64_t> height;
  std::optional<unsigned> expbound;
  std::optional<unsigned> precision;
  std::optional<bool> primitive;
  std::optional<std::string> c_text;     // right-hand side for solve
  std::optional<std::string> form_text;  // F for solve; f when absent
  std::optional<std::string> cvals;      // construction constants
  /// Where each key's value starts in the file: (line, column), 1-based.
  std::map<std::string, std::pair<int, int>> origins;
};

/// Line-oriented "key: value" text; '#' starts a comment; an indented line
/// continues the previous value. Throws SyntaxError.
ProblemFile parse_problem(std::string_view text);

struct Flags {
  std::optional<std::string> emit;
  bool check_only = false;
  bool dims = true;
  unsigned threads = 1;
  std::optional<std::string> points_text;  // verify input
  std::size_t max_pairs = 5000;
  unsigned max_degree = 40;
};

struct RunResult {
  Report report;
  int exit_code = 0;  // 0 ok, 2 input error, 3 identity failure, 4 budget exceeded
};

enum ExitCode { kOk = 0, kInputError = 2, kIdentityFailure = 3, kBudgetExceeded = 4 };

/// analyze | sunit | construct | scan | solve | verify
RunResult run(const std::string& command, const ProblemFile& problem, const Flags& flags);

}  // namespace qsip::cli

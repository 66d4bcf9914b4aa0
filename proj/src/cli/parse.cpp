#include <algorithm>
#include <cctype>
#include <limits>

#include "qsip/cli.hpp"
#include "qsip/error.hpp"

namespace qsip::cli {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  bool eof() const { return pos_ >= s_.size(); }
  char peek() const { return eof() ? '\0' : s_[pos_]; }
  int line() const { return line_; }
  int column() const { return col_; }

  char get() {
    const char c = s_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) get();
  }

  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(msg, line_, col_); }

  std::string digits() {
    std::string out;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) out += get();
    return out;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class PolyParser {
 public:
  PolyParser(std::string_view text, const std::vector<std::string>& vars) : cur_(text), vars_(vars) {}

  MPoly parse() {
    MPoly out(vars_.size());
    cur_.skip_ws();
    if (cur_.eof()) cur_.fail("empty polynomial");
    bool negative = false;
    if (cur_.peek() == '+' || cur_.peek() == '-') negative = cur_.get() == '-';
    for (;;) {
      cur_.skip_ws();
      MPoly t = term();
      if (negative)
        out -= t;
      else
        out += t;
      cur_.skip_ws();
      if (cur_.eof()) return out;
      if (cur_.peek() != '+' && cur_.peek() != '-') cur_.fail("expected '+' or '-'");
      negative = cur_.get() == '-';
    }
  }

 private:
  Rational coefficient() {
    const std::string num = cur_.digits();
    if (cur_.peek() != '/') return Rational(BigInt(num));
    cur_.get();
    const std::string den = cur_.digits();
    if (den.empty()) cur_.fail("expected denominator");
    if (BigInt(den) == 0) cur_.fail("zero denominator");
    return Rational(BigInt(num), BigInt(den));
  }

  MPoly term() {
    Rational c(1);
    if (std::isdigit(static_cast<unsigned char>(cur_.peek()))) {
      c = coefficient();
      cur_.skip_ws();
      if (cur_.peek() != '*') {
        if (std::isupper(static_cast<unsigned char>(cur_.peek()))) cur_.fail("expected '*'");
        return MPoly(vars_.size(), c);
      }
      cur_.get();
      cur_.skip_ws();
    }
    std::vector<Exponent> exps(vars_.size(), 0);
    for (;;) {
      factor(exps);
      cur_.skip_ws();
      if (cur_.peek() != '*') break;
      cur_.get();
      cur_.skip_ws();
    }
    return MPoly::term(vars_.size(), exps, c);
  }

  void factor(std::vector<Exponent>& exps) {
    if (!std::isupper(static_cast<unsigned char>(cur_.peek()))) cur_.fail("expected a variable");
    const int line = cur_.line(), col = cur_.column();
    std::string name(1, cur_.get());
    name += cur_.digits();
    const auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) throw SyntaxError("unknown variable " + name, line, col);
    const auto idx = static_cast<std::size_t>(it - vars_.begin());
    cur_.skip_ws();
    Exponent e = 1;
    if (cur_.peek() == '^') {
      cur_.get();
      cur_.skip_ws();
      const std::string d = cur_.digits();
      if (d.empty()) cur_.fail("exponent must be a nonnegative integer");
      if (d.size() > 9) cur_.fail("exponent too large");
      e = static_cast<Exponent>(std::stoul(d));
    }
    const std::uint64_t sum = std::uint64_t{exps[idx]} + e;
    if (sum > std::numeric_limits<std::int32_t>::max()) cur_.fail("exponent too large");
    exps[idx] = static_cast<Exponent>(sum);
  }

  Cursor cur_;
  const std::vector<std::string>& vars_;
};

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

bool valid_var(const std::string& v) {
  if (v.empty() || !std::isupper(static_cast<unsigned char>(v[0]))) return false;
  return std::all_of(v.begin() + 1, v.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

template <class T>
T parse_unsigned(const std::string& s, int line, int col, T max) {
  if (s.empty() || s.size() > 18 || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw SyntaxError("expected a nonnegative integer", line, col);
  const auto v = std::stoull(s);
  if (v > static_cast<unsigned long long>(max)) throw SyntaxError("value out of range", line, col);
  return static_cast<T>(v);
}

}  // namespace

MPoly parse_poly(std::string_view text, const std::vector<std::string>& vars) {
  return PolyParser(text, vars).parse();
}

std::string print_poly(const MPoly& p, const std::vector<std::string>& vars) {
  if (p.is_zero()) return "0";
  std::vector<std::size_t> order(p.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (p.term_degree(a) != p.term_degree(b)) return p.term_degree(a) > p.term_degree(b);
    const auto ea = p.exponents(a), eb = p.exponents(b);
    return std::lexicographical_compare(eb.begin(), eb.end(), ea.begin(), ea.end());
  });
  std::string out;
  bool first = true;
  for (auto t : order) {
    const Rational& c = p.coeff(t);
    std::string mono;
    const auto e = p.exponents(t);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += vars.at(i);
      if (e[i] > 1) mono += '^' + std::to_string(e[i]);
    }
    if (first)
      out += c.sign() < 0 ? "-" : "";
    else
      out += c.sign() < 0 ? " - " : " + ";
    first = false;
    const Rational a = c.abs();
    if (mono.empty())
      out += a.str();
    else if (a.is_one())
      out += mono;
    else
      out += a.str() + "*" + mono;
  }
  return out;
}

ProblemFile parse_problem(std::string_view text) {
  struct Entry {
    std::string value;
    int line = 1, col = 1;
  };
  std::map<std::string, Entry> entries;
  static const std::vector<std::string> known = {"vars", "f", "proj", "primes", "height", "expbound",
                                                 "precision", "primitive", "c", "form", "cvals"};
  std::string current;
  int lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(start, end - start));
    start = end + 1;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    if (std::isspace(static_cast<unsigned char>(line[0]))) {
      if (current.empty()) throw SyntaxError("continuation line without a key", lineno, 1);
      entries[current].value += "\n" + line;
      continue;
    }
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw SyntaxError("expected 'key: value'", lineno, 1);
    const std::string key = trim(std::string_view(line).substr(0, colon));
    if (std::find(known.begin(), known.end(), key) == known.end())
      throw SyntaxError("unknown key '" + key + "'", lineno, 1);
    if (entries.count(key)) throw SyntaxError("duplicate key '" + key + "'", lineno, 1);
    entries[key] = {line.substr(colon + 1), lineno, static_cast<int>(colon) + 2};
    current = key;
  }

  ProblemFile pf;
  for (const auto& [key, e] : entries) {
    pf.origins[key] = {e.line, e.col};
    const std::string v = trim(e.value);
    if (key == "vars") {
      pf.vars = split_list(v);
      for (const auto& name : pf.vars)
        if (!valid_var(name)) throw SyntaxError("invalid variable name '" + name + "'", e.line, e.col);
      auto sorted = pf.vars;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw SyntaxError("duplicate variable", e.line, e.col);
    } else if (key == "f") {
      pf.f_text = e.value;
    } else if (key == "proj") {
      pf.proj = v;
    } else if (key == "primes") {
      for (const auto& p : split_list(v))
        pf.primes.push_back(parse_unsigned<std::uint64_t>(p, e.line, e.col, std::numeric_limits<std::uint64_t>::max()));
    } else if (key == "height") {
      pf.height = parse_unsigned<std::int64_t>(v, e.line, e.col, std::int64_t{1} << 40);
    } else if (key == "expbound") {
      pf.expbound = parse_unsigned<unsigned>(v, e.line, e.col, 1000);
    } else if (key == "precision") {
      pf.precision = parse_unsigned<unsigned>(v, e.line, e.col, 1u << 20);
    } else if (key == "primitive") {
      if (v == "true" || v == "yes" || v == "1")
        pf.primitive = true;
      else if (v == "false" || v == "no" || v == "0")
        pf.primitive = false;
      else
        throw SyntaxError("expected true or false", e.line, e.col);
    } else if (key == "c") {
      pf.c_text = v;
    } else if (key == "form") {
      pf.form_text = e.value;
    } else if (key == "cvals") {
      pf.cvals = v;
    }
  }
  return pf;
}

}  // namespace qsip::cli

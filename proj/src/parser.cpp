#include "parser.hpp"

#include <cctype>
#include <sstream>

#include "errors.hpp"

namespace ruledcov {

namespace {

struct Lexer {
  std::string_view text;
  size_t pos = 0;
  int line = 1, col = 1;

  void skip_ws() {
    while (pos < text.size() && std::isspace((unsigned char)text[pos])) advance();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  void advance() {
    if (text[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }
  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line, col); }
};

class Parser {
public:
  Parser(std::string_view text, unsigned allowed) : lex_{text}, allowed_(allowed) {}

  RatFn parse() {
    RatFn r = expr();
    if (lex_.peek() != '\0') lex_.fail("unexpected trailing input");
    return r;
  }

private:
  Lexer lex_;
  unsigned allowed_;

  RatFn expr() {
    RatFn acc = term();
    for (;;) {
      char c = lex_.peek();
      if (c == '+') {
        lex_.advance();
        acc = acc + term();
      } else if (c == '-') {
        lex_.advance();
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  RatFn term() {
    RatFn acc = factor();
    for (;;) {
      char c = lex_.peek();
      if (c == '*') {
        lex_.advance();
        acc = acc * factor();
      } else if (c == '/') {
        lex_.advance();
        RatFn d = factor();
        if (d.is_zero()) lex_.fail("division by zero");
        acc = acc / d;
      } else {
        return acc;
      }
    }
  }

  RatFn factor() {
    char c = lex_.peek();
    if (c == '-') {
      lex_.advance();
      return -factor();
    }
    if (c == '+') {
      lex_.advance();
      return factor();
    }
    RatFn base = atom();
    if (lex_.peek() == '^') {
      lex_.advance();
      long e = exponent();
      if (e < 0 && base.is_zero()) lex_.fail("negative power of zero");
      return base.pow((int)e);
    }
    return base;
  }

  long exponent() {
    char c = lex_.peek();
    bool neg = false;
    if (c == '-') {
      neg = true;
      lex_.advance();
      c = lex_.peek();
    }
    if (!std::isdigit((unsigned char)c)) lex_.fail("expected integer exponent");
    long v = integer();
    return neg ? -v : v;
  }

  RatFn atom() {
    char c = lex_.peek();
    if (c == '(') {
      lex_.advance();
      RatFn r = expr();
      if (lex_.peek() != ')') lex_.fail("expected ')'");
      lex_.advance();
      return r;
    }
    if (std::isdigit((unsigned char)c)) {
      // Arbitrary-precision integer literal.
      std::string digits;
      while (lex_.pos < lex_.text.size() &&
             std::isdigit((unsigned char)lex_.text[lex_.pos])) {
        digits += lex_.text[lex_.pos];
        lex_.advance();
      }
      return RatFn(MPoly(Scalar(mpz_class(digits))));
    }
    if (std::isalpha((unsigned char)c)) {
      std::string name;
      while (lex_.pos < lex_.text.size() &&
             std::isalnum((unsigned char)lex_.text[lex_.pos])) {
        name += lex_.text[lex_.pos];
        lex_.advance();
      }
      auto idx = var_index(name);
      if (!idx) lex_.fail("unknown variable '" + name + "'");
      if (!(allowed_ & (1u << *idx)))
        lex_.fail("variable '" + name + "' not allowed here");
      return RatFn(MPoly::var(*idx));
    }
    lex_.fail("unexpected character");
  }

  long integer() {
    long v = 0;
    while (lex_.pos < lex_.text.size() &&
           std::isdigit((unsigned char)lex_.text[lex_.pos])) {
      v = v * 10 + (lex_.text[lex_.pos] - '0');
      lex_.advance();
    }
    return v;
  }
};

}  // namespace

RatFn parse_expr(std::string_view text, unsigned allowed_vars) {
  return Parser(text, allowed_vars).parse();
}

std::array<RatFn, 3> InputDoc::parsed_components() const {
  std::array<RatFn, 3> out;
  for (int i = 0; i < 3; ++i) out[i] = parse_expr(components[i], kVarsST);
  return out;
}

std::optional<MPoly> InputDoc::parsed_implicit() const {
  if (!implicit) return std::nullopt;
  RatFn f = parse_expr(*implicit, kVarsXYZ);
  if (!f.is_poly())
    throw Error(kError, "implicit equation must be polynomial in x, y, z");
  return f.num();
}

InputDoc parse_input_doc(std::string_view text) {
  InputDoc doc;
  std::array<bool, 3> have{};
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError("expected '<key> = <value>'", lineno, 1);
    std::string key = line.substr(a, eq - a);
    key.erase(key.find_last_not_of(" \t") + 1);
    std::string value = line.substr(eq + 1);
    if (key == "x" || key == "y" || key == "z") {
      int i = key[0] - 'x';
      doc.components[i] = value;
      have[i] = true;
    } else if (key == "F") {
      doc.implicit = value;
    } else if (key == "seed") {
      doc.seed = std::stol(value);
    } else if (key == "max_attempts") {
      doc.max_attempts = std::stoi(value);
      if (doc.max_attempts < 1)
        throw ParseError("max_attempts must be positive", lineno, 1);
    } else {
      throw ParseError("unknown key '" + key + "'", lineno, 1);
    }
  }
  for (int i = 0; i < 3; ++i)
    if (!have[i])
      throw Error(kError, std::string("missing component '") + char('x' + i) + "'");
  return doc;
}

}  // namespace ruledcov

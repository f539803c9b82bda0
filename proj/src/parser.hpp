#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "ratfn.hpp"

namespace ruledcov {

// Standard-precedence expression parser: + - * / ^, unary minus, parentheses,
// integer literals (rationals are written a/b). Multiplication is always
// explicit.
RatFn parse_expr(std::string_view text, unsigned allowed_vars);

// One-job input document: three surface components, optional implicit
// equation, optional seed / retry budget.
struct InputDoc {
  std::array<std::string, 3> components;
  std::optional<std::string> implicit;
  long seed = 0;
  int max_attempts = 64;

  std::array<RatFn, 3> parsed_components() const;
  std::optional<MPoly> parsed_implicit() const;
};

// Text format: lines "x = <expr>", "y = <expr>", "z = <expr>", optional
// "F = <expr>", "seed = <int>", "max_attempts = <int>"; blank lines and
// #-comments ignored.
InputDoc parse_input_doc(std::string_view text);

}  // namespace ruledcov

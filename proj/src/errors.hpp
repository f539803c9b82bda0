#pragma once

#include <stdexcept>
#include <string>

namespace ruledcov {

// Status codes shared with the C API / CLI exit codes.
enum StatusCode : int {
  kOk = 0,
  kError = 1,
  kNotRuledForm = 2,
  kBudgetExhausted = 3,
  kCheckFailed = 4,
};

class Error : public std::runtime_error {
public:
  Error(int code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  int code() const { return code_; }

private:
  int code_;
};

class ParseError : public Error {
public:
  ParseError(const std::string& msg, int line, int col)
      : Error(kError, msg + " at line " + std::to_string(line) + ", column " +
                          std::to_string(col)),
        line_(line),
        col_(col) {}
  int line() const { return line_; }
  int column() const { return col_; }

private:
  int line_, col_;
};

// Denominator vanishes at an evaluation point; callers typically resample.
class PoleError : public Error {
public:
  explicit PoleError(const std::string& msg) : Error(kError, msg) {}
};

class NotRuledFormError : public Error {
public:
  explicit NotRuledFormError(const std::string& msg) : Error(kNotRuledForm, msg) {}
};

class BudgetError : public Error {
public:
  explicit BudgetError(const std::string& msg) : Error(kBudgetExhausted, msg) {}
};

// A pipeline invariant failed; indicates a bug or a violated precondition
// upstream, never a recoverable input condition.
class InternalError : public Error {
public:
  explicit InternalError(const std::string& msg) : Error(kError, msg) {}
};

class NotZeroDimensionalError : public Error {
public:
  explicit NotZeroDimensionalError(const std::string& msg) : Error(kError, msg) {}
};

}  // namespace ruledcov

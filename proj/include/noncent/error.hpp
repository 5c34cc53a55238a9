#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace noncent {

enum class Errc {
  NotAGroup,
  ClosureExceeded,
  NotNormal,
  TooLarge,
  TrivialGroup,
  ParseError,
  UndeclaredGenerator,
  CosetLimitExceeded,
  AbelianGroup,
  NotMaximal,
  NotASubgroup,
  NotRegular2Group,
  UnknownFormat,
  FormatError,
  DuplicateLabel,
  OrderMismatch,
  InvalidArgument,
};

const char* to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Carries the 1-based position of the offending character.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& expected)
      : Error(Errc::ParseError, "line " + std::to_string(line) + ", column " +
                                    std::to_string(column) + ": expected " + expected),
        line_(line),
        column_(column),
        expected_(expected) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string expected_;
};

}  // namespace noncent

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sureloss {

/// Argument outside the mathematical domain of an operation (bad index,
/// non-positive scale, malformed probability vector, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A documented precondition does not hold, e.g. a natural extension was
/// requested for an upper pmf whose total is below one.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A request that breaks one of the free-coupon rules.
class RuleViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The bookmaker's own odds already admit a sure gain, so coupon analysis
/// does not apply; use the plain avoiding-sure-loss check instead.
class BaseSureLossError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The complementary slackness system could not be turned into a feasible
/// stake vector, or a produced certificate failed verification.
class CertificateError : public std::runtime_error {
 public:
  CertificateError(const std::string& what, std::size_t index)
      : std::runtime_error(what), index_(index) {}
  explicit CertificateError(const std::string& what)
      : std::runtime_error(what) {}

  // Offending outcome index, or npos when not tied to one.
  std::size_t index() const noexcept { return index_; }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::size_t index_ = npos;
};

/// Malformed input text, with 1-based row and column of the problem.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t row, std::size_t column)
      : std::runtime_error(format(what, row, column)), row_(row), column_(column) {}

  std::size_t row() const noexcept { return row_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t row, std::size_t column) {
    if (row == 0) return what;
    return "row " + std::to_string(row) + ", column " + std::to_string(column) + ": " + what;
  }

  std::size_t row_;
  std::size_t column_;
};

}  // namespace sureloss

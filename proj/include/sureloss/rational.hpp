#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace sureloss {

using BigInt = boost::multiprecision::cpp_int;

/// Exact fraction with arbitrary-precision numerator and denominator.
///
/// Always kept in lowest terms with a positive denominator, so equal values
/// have identical representations and `str()` is canonical.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t numerator, std::int64_t denominator);
  Rational(const BigInt& numerator, const BigInt& denominator);

  /// Accepts "n", "-n", "n/d" and "-n/d" with decimal integers; whitespace
  /// around the tokens is ignored. Throws DomainError on anything else or a
  /// zero denominator.
  static Rational parse(std::string_view text);

  BigInt numerator() const;
  BigInt denominator() const;

  /// Canonical "num/den" form, e.g. "5/1", "-47/21".
  std::string str() const;

  /// Fixed-point rendering with round-half-even at `places` decimals.
  std::string to_decimal(int places = 4) const;

  /// Lossy; for display and tolerance checks only.
  double to_double() const;

  int sign() const;
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const;

  Rational abs() const;
  Rational operator-() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws DomainError on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.value_ == rhs.value_; }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

 private:
  using Value = boost::multiprecision::cpp_rational;
  explicit Rational(Value value) : value_(std::move(value)) {}

  Value value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace sureloss

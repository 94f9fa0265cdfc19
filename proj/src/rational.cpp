#include "sureloss/rational.hpp"

#include "sureloss/errors.hpp"

#include <cctype>
#include <ostream>

namespace sureloss {

namespace {

std::string_view trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  return text;
}

BigInt parse_integer(std::string_view token, std::string_view whole, bool allow_sign) {
  token = trim(token);
  bool negative = false;
  if (allow_sign && !token.empty() && (token.front() == '-' || token.front() == '+')) {
    negative = token.front() == '-';
    token.remove_prefix(1);
  }
  if (token.empty()) throw DomainError("malformed rational '" + std::string(whole) + "'");
  for (char c : token) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw DomainError("malformed rational '" + std::string(whole) + "'");
  }
  BigInt value{std::string(token)};
  return negative ? BigInt(-value) : value;
}

}  // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator)
    : Rational(BigInt(numerator), BigInt(denominator)) {}

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw DomainError("rational with zero denominator");
  // Boost rejects a negative denominator; move the sign to the numerator.
  if (denominator < 0)
    value_ = Value(BigInt(-numerator), BigInt(-denominator));
  else
    value_ = Value(numerator, denominator);
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text, true), BigInt(1));
  BigInt num = parse_integer(text.substr(0, slash), text, true);
  BigInt den = parse_integer(text.substr(slash + 1), text, false);
  if (den == 0) throw DomainError("rational with zero denominator '" + std::string(text) + "'");
  return Rational(num, den);
}

BigInt Rational::numerator() const { return boost::multiprecision::numerator(value_); }
BigInt Rational::denominator() const { return boost::multiprecision::denominator(value_); }

std::string Rational::str() const {
  return numerator().str() + "/" + denominator().str();
}

std::string Rational::to_decimal(int places) const {
  if (places < 0) throw DomainError("negative number of decimal places");
  BigInt scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;

  const BigInt num = numerator();
  const BigInt den = denominator();
  const BigInt magnitude = (num < 0 ? BigInt(-num) : num) * scale;
  BigInt quotient = magnitude / den;
  const BigInt twice_remainder = 2 * (magnitude % den);
  if (twice_remainder > den || (twice_remainder == den && (quotient & 1) != 0)) ++quotient;

  std::string digits = quotient.str();
  if (places > 0) {
    if (digits.size() <= static_cast<std::size_t>(places))
      digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
    digits.insert(digits.size() - static_cast<std::size_t>(places), 1, '.');
  }
  if (num < 0 && quotient != 0) digits.insert(0, 1, '-');
  return digits;
}

double Rational::to_double() const { return value_.convert_to<double>(); }

int Rational::sign() const { return value_.sign(); }

bool Rational::is_integer() const { return denominator() == 1; }

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::operator-() const { return Rational(Value(-value_)); }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  const int c = lhs.value_.compare(rhs.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.str(); }

}  // namespace sureloss

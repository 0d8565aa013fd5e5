#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace pct {

using Wide = __int128;

/// Exact rational number with 128-bit numerator and denominator, always kept
/// in lowest terms with a positive denominator.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(Wide num);  // NOLINT(google-explicit-constructor)
  Rational(Wide num, Wide den);

  Wide num() const { return num_; }
  Wide den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  /// Mathematical floor and ceiling (toward -inf / +inf).
  Wide floor() const;
  Wide ceil() const;

  double to_double() const;

  /// "p/q", or "p" when the value is an integer.
  std::string to_string() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const { return Rational(-num_, den_); }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  Wide num_ = 0;
  Wide den_ = 1;
};

std::string wide_to_string(Wide v);

/// Decimal rendering with up to `digits` significant digits, trailing zeros
/// trimmed ("0.5", "0.4", "1").
std::string to_decimal(const Rational& r, int digits = 6);

}  // namespace pct

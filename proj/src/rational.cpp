#include "pct/rational.hpp"

#include <cstdio>
#include <stdexcept>

namespace pct {
namespace {

Wide abs_wide(Wide v) { return v < 0 ? -v : v; }

Wide gcd_wide(Wide a, Wide b) {
  a = abs_wide(a);
  b = abs_wide(b);
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Rational::Rational(Wide num) : num_(num), den_(1) {}

Rational::Rational(Wide num, Wide den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide g = gcd_wide(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  num_ = num;
  den_ = den;
}

Wide Rational::floor() const {
  Wide q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

Wide Rational::ceil() const {
  Wide q = num_ / den_;
  if (num_ % den_ != 0 && num_ > 0) ++q;
  return q;
}

double Rational::to_double() const {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::to_string() const {
  if (den_ == 1) return wide_to_string(num_);
  return wide_to_string(num_) + "/" + wide_to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  Wide g = gcd_wide(a.den_, b.den_);
  return Rational(a.num_ * (b.den_ / g) + b.num_ * (a.den_ / g),
                  a.den_ / g * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  Wide g1 = gcd_wide(a.num_, b.den_);
  Wide g2 = gcd_wide(b.num_, a.den_);
  if (g1 == 0) g1 = 1;
  if (g2 == 0) g2 = 1;
  return Rational((a.num_ / g1) * (b.num_ / g2), (a.den_ / g2) * (b.den_ / g1));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
  return a * Rational(b.den_, b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  Wide lhs = a.num_ * b.den_;
  Wide rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string wide_to_string(Wide v) {
  if (v == 0) return "0";
  bool negative = v < 0;
  // Work with negative values so that the minimum representable value is safe.
  if (!negative) v = -v;
  std::string digits;
  while (v != 0) {
    digits.push_back(static_cast<char>('0' - static_cast<int>(v % 10)));
    v /= 10;
  }
  if (negative) digits.push_back('-');
  return std::string(digits.rbegin(), digits.rend());
}

std::string to_decimal(const Rational& r, int digits) {
  if (r.is_integer()) return wide_to_string(r.num());
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, r.to_double());
  return buf;
}

}  // namespace pct

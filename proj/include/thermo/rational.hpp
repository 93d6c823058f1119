#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

namespace thermo {

/// High-precision real used for logarithms, exponentials and display values.
/// 100 significant decimal digits; may hold +/-infinity.
using Real = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<100>,
    boost::multiprecision::et_off>;

using BigInt = boost::multiprecision::mpz_int;

class RationalError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exact fraction, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : value_(value) {}  // NOLINT: implicit by intent
  Rational(std::int64_t numerator, std::int64_t denominator);
  Rational(const BigInt& numerator, const BigInt& denominator);
  explicit Rational(const BigInt& value) : value_(value) {}

  /// Parses "a/b" or "a", with an optional leading minus. No whitespace,
  /// no sign on the denominator, denominator non-zero.
  static Rational parse(std::string_view text);

  BigInt numerator() const;
  BigInt denominator() const;

  int sign() const;
  bool is_zero() const { return sign() == 0; }
  Rational abs() const;

  /// Exact text form, "a/b" or "a". Parses back to the same value.
  std::string str() const;
  Real to_real() const;
  /// Fixed-point decimal rendering with `digits` fractional digits.
  std::string decimal(int digits) const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  explicit Rational(boost::multiprecision::mpq_rational v) : value_(std::move(v)) {}

  boost::multiprecision::mpq_rational value_;
};

using Vector = std::vector<Rational>;

Rational sum(const Vector& v);
Rational dot(const Vector& a, const Vector& b);

/// Parses a whole vector; the error message names the failing index.
Vector parse_vector(const std::vector<std::string>& items);

/// Fixed-point rendering of a real, trailing zeros trimmed, "-0" folded to "0".
/// Infinities render as "inf" / "-inf".
std::string format_real(const Real& value, int digits);

}  // namespace thermo

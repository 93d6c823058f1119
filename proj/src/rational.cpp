#include "thermo/rational.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace thermo {

namespace mp = boost::multiprecision;

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw RationalError("rational with zero denominator");
  value_ = mp::mpq_rational(BigInt(numerator), BigInt(denominator));
}

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw RationalError("rational with zero denominator");
  value_ = mp::mpq_rational(numerator, denominator);
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const std::string quoted = "'" + std::string(text) + "'";
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw RationalError("invalid rational " + quoted);
  }
  BigInt n{std::string(num)};
  BigInt d{std::string(den)};
  if (d == 0) throw RationalError("invalid rational " + quoted + " (zero denominator)");
  if (negative) n = -n;
  return Rational(n, d);
}

BigInt Rational::numerator() const { return mp::numerator(value_); }
BigInt Rational::denominator() const { return mp::denominator(value_); }

int Rational::sign() const { return value_.sign(); }

Rational Rational::abs() const { return Rational(mp::abs(value_)); }

std::string Rational::str() const {
  const BigInt n = numerator();
  const BigInt d = denominator();
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

Real Rational::to_real() const { return Real(numerator()) / Real(denominator()); }

std::string Rational::decimal(int digits) const {
  // Round half away from zero at the requested digit, exactly.
  BigInt scale = mp::pow(BigInt(10), static_cast<unsigned>(digits));
  const BigInt n = mp::abs(numerator()) * scale;
  const BigInt d = denominator();
  BigInt q = n / d;
  if ((n % d) * 2 >= d) q += 1;
  std::string s = q.str();
  if (digits > 0) {
    if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
  }
  if (sign() < 0 && q != 0) s.insert(0, "-");
  return s;
}

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
  if (rhs.is_zero()) throw RationalError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(-value_); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const int c = a.value_.compare(b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational sum(const Vector& v) {
  Rational s;
  for (const auto& x : v) s += x;
  return s;
}

Rational dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vector parse_vector(const std::vector<std::string>& items) {
  Vector out;
  out.reserve(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) {
    try {
      out.push_back(Rational::parse(items[i]));
    } catch (const RationalError& e) {
      throw RationalError("[" + std::to_string(i) + "]: " + e.what());
    }
  }
  return out;
}

std::string format_real(const Real& value, int digits) {
  if (boost::multiprecision::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (boost::multiprecision::isnan(value)) return "nan";
  std::string s = value.str(digits, std::ios::fixed);
  if (s.find('.') != std::string::npos) {
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  if (s == "-0") s = "0";
  return s;
}

}  // namespace thermo

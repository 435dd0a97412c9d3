#pragma once

#include <cstdint>
#include <string>

namespace madcc {

/// Exact rational on 64-bit integers, always stored normalized (gcd 1,
/// positive denominator). Every operation checks for overflow and throws
/// Errc::out_of_range rather than wrapping; metric computations in this
/// library must never silently lose exactness.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(long long n);  // NOLINT: implicit by design, metrics read naturally
  Rational(long long num, long long den);

  long long num() const { return num_; }
  long long den() const { return den_; }

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  Rational operator-() const;

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const;
  bool operator<=(const Rational& o) const { return *this < o || *this == o; }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator>=(const Rational& o) const { return o <= *this; }

  bool is_integer() const { return den_ == 1; }

  /// Renders as "p/q" with the denominator always present ("2/1").
  std::string str() const;
  /// Renders as a decimal with three significant digits (table display).
  std::string str_decimal3() const;
  double to_double() const;

  static Rational parse(const std::string& text);

 private:
  long long num_ = 0;
  long long den_ = 1;
  void normalize();
};

}  // namespace madcc

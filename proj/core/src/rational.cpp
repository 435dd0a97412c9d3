#include "madcc/rational.hpp"

#include <cstdio>
#include <cstdlib>
#include <numeric>

#include "madcc/errors.hpp"

namespace madcc {

namespace {

long long checked_narrow(__int128 x, const char* op) {
  if (x > INT64_MAX || x < INT64_MIN) fail(Errc::out_of_range, std::string("rational overflow in ") + op);
  return static_cast<long long>(x);
}

}  // namespace

Rational::Rational(long long n) : num_(n), den_(1) {}

Rational::Rational(long long num, long long den) : num_(num), den_(den) {
  if (den_ == 0) fail(Errc::invalid_parameters, "rational with zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
  if (num_ == 0) den_ = 1;
}

Rational Rational::operator+(const Rational& o) const {
  __int128 n = static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_;
  __int128 d = static_cast<__int128>(den_) * o.den_;
  __int128 g = 1;
  {
    __int128 a = n < 0 ? -n : n, b = d;
    while (b) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    g = a == 0 ? 1 : a;
  }
  return Rational(checked_narrow(n / g, "+"), checked_narrow(d / g, "+"));
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational Rational::operator*(const Rational& o) const {
  long long g1 = std::gcd(num_ < 0 ? -num_ : num_, o.den_);
  long long g2 = std::gcd(o.num_ < 0 ? -o.num_ : o.num_, den_);
  __int128 n = static_cast<__int128>(num_ / g1) * (o.num_ / g2);
  __int128 d = static_cast<__int128>(den_ / g2) * (o.den_ / g1);
  return Rational(checked_narrow(n, "*"), checked_narrow(d, "*"));
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num_ == 0) fail(Errc::invalid_parameters, "rational division by zero");
  Rational inv;
  inv.num_ = o.den_;
  inv.den_ = o.num_;
  if (inv.den_ < 0) {
    inv.num_ = -inv.num_;
    inv.den_ = -inv.den_;
  }
  return *this * inv;
}

bool Rational::operator<(const Rational& o) const {
  return static_cast<__int128>(num_) * o.den_ < static_cast<__int128>(o.num_) * den_;
}

std::string Rational::str() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::str_decimal3() const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", to_double());
  return buf;
}

double Rational::to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

Rational Rational::parse(const std::string& text) {
  const char* p = text.c_str();
  char* end = nullptr;
  errno = 0;
  long long num = std::strtoll(p, &end, 10);
  if (end == p || errno == ERANGE) fail(Errc::malformed_input, "bad rational '" + text + "'");
  long long den = 1;
  if (*end == '/') {
    const char* q = end + 1;
    den = std::strtoll(q, &end, 10);
    if (end == q || errno == ERANGE) fail(Errc::malformed_input, "bad rational '" + text + "'");
  }
  if (*end != '\0') fail(Errc::malformed_input, "trailing characters in rational '" + text + "'");
  return Rational(num, den);
}

}  // namespace madcc

#include "inoc/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <numeric>

#include "inoc/errors.hpp"

namespace inoc {

namespace {

using Wide = __int128;

long long narrow(Wide v) {
  require(v <= static_cast<Wide>(0x7FFFFFFFFFFFFFFFLL) &&
              v >= -static_cast<Wide>(0x7FFFFFFFFFFFFFFFLL),
          "rational overflow");
  return static_cast<long long>(v);
}

}  // namespace

Rational::Rational(long long num, long long den) {
  require(den != 0, "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  num_ = num;
  den_ = den;
}

Rational Rational::from_decimal(const std::string& text) {
  require(!text.empty(), "empty decimal string");
  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') {
    negative = text[pos] == '-';
    ++pos;
  }
  long long num = 0;
  long long den = 1;
  bool any_digit = false;
  bool seen_point = false;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c == '.') {
      require(!seen_point, "malformed decimal: " + text);
      seen_point = true;
      continue;
    }
    require(std::isdigit(static_cast<unsigned char>(c)), "malformed decimal: " + text);
    any_digit = true;
    Wide next = static_cast<Wide>(num) * 10 + (c - '0');
    num = narrow(next);
    if (seen_point) den = narrow(static_cast<Wide>(den) * 10);
  }
  require(any_digit, "malformed decimal: " + text);
  return Rational(negative ? -num : num, den);
}

Rational Rational::operator+(const Rational& o) const {
  Wide n = static_cast<Wide>(num_) * o.den_ + static_cast<Wide>(o.num_) * den_;
  Wide d = static_cast<Wide>(den_) * o.den_;
  // reduce on the wide values before narrowing to 64 bits
  Wide a = n < 0 ? -n : n;
  Wide b = d;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  if (a == 0) a = 1;
  return Rational(narrow(n / a), narrow(d / a));
}

Rational Rational::operator-(const Rational& o) const {
  return *this + Rational(-o.num_, o.den_);
}

Rational Rational::operator*(const Rational& o) const {
  long long g1 = std::gcd(num_ < 0 ? -num_ : num_, o.den_);
  long long g2 = std::gcd(o.num_ < 0 ? -o.num_ : o.num_, den_);
  Wide n = static_cast<Wide>(num_ / g1) * (o.num_ / g2);
  Wide d = static_cast<Wide>(den_ / g2) * (o.den_ / g1);
  return Rational(narrow(n), narrow(d));
}

Rational Rational::operator/(const Rational& o) const {
  require(o.num_ != 0, "division by zero rational");
  return *this * Rational(o.den_, o.num_);
}

int Rational::compare(const Rational& o) const {
  Wide lhs = static_cast<Wide>(num_) * o.den_;
  Wide rhs = static_cast<Wide>(o.num_) * den_;
  if (lhs < rhs) return -1;
  if (lhs > rhs) return 1;
  return 0;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace inoc

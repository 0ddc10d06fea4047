#pragma once

#include <string>

namespace inoc {

// Exact rational on 64-bit numerator/denominator, always reduced, denominator
// positive. Equilibrium membership for pure profiles compares integer
// component sizes against t = Cn/L through these, so verdicts never depend on
// a floating tolerance.
class Rational {
 public:
  Rational() = default;
  Rational(long long value) : num_(value) {}  // implicit on purpose
  Rational(long long num, long long den);

  // Accepts "[+-]digits[.digits]", e.g. "2", "-0.25", "1.5".
  static Rational from_decimal(const std::string& text);

  long long num() const { return num_; }
  long long den() const { return den_; }
  double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  bool positive() const { return num_ > 0; }

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;

  int compare(const Rational& o) const;  // -1 / 0 / +1

  bool operator==(const Rational& o) const { return compare(o) == 0; }
  bool operator!=(const Rational& o) const { return compare(o) != 0; }
  bool operator<(const Rational& o) const { return compare(o) < 0; }
  bool operator<=(const Rational& o) const { return compare(o) <= 0; }
  bool operator>(const Rational& o) const { return compare(o) > 0; }
  bool operator>=(const Rational& o) const { return compare(o) >= 0; }

  std::string str() const;

 private:
  long long num_ = 0;
  long long den_ = 1;
};

}  // namespace inoc

#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <iosfwd>
#include <string>

namespace colmez {

using Rational = mpq_class;

inline constexpr int kDefaultDigits = 64;

// Arbitrary-precision real carrying its own working precision in decimal
// digits. Binary operations run at the larger of the two operand precisions.
class BigReal {
 public:
  explicit BigReal(int digits = kDefaultDigits);
  BigReal(long value, int digits);
  BigReal(double value, int digits);
  BigReal(const Rational& value, int digits);
  static BigReal parse(const std::string& text, int digits);

  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  int digits() const { return digits_; }
  // Same value re-rounded to a different precision.
  BigReal with_digits(int digits) const;

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  double to_double() const;
  // Scientific notation with the given number of significant digits.
  std::string str(int significant = 20) const;

  bool is_zero() const;
  bool is_finite() const;
  int sign() const;

  BigReal& operator+=(const BigReal& rhs);
  BigReal& operator-=(const BigReal& rhs);
  BigReal& operator*=(const BigReal& rhs);
  BigReal& operator/=(const BigReal& rhs);

  friend BigReal operator+(BigReal lhs, const BigReal& rhs) { return lhs += rhs; }
  friend BigReal operator-(BigReal lhs, const BigReal& rhs) { return lhs -= rhs; }
  friend BigReal operator*(BigReal lhs, const BigReal& rhs) { return lhs *= rhs; }
  friend BigReal operator/(BigReal lhs, const BigReal& rhs) { return lhs /= rhs; }
  BigReal operator-() const;

  friend bool operator<(const BigReal& a, const BigReal& b);
  friend bool operator>(const BigReal& a, const BigReal& b) { return b < a; }
  friend bool operator<=(const BigReal& a, const BigReal& b) { return !(b < a); }
  friend bool operator>=(const BigReal& a, const BigReal& b) { return !(a < b); }
  friend bool operator==(const BigReal& a, const BigReal& b);

 private:
  void adopt_precision(int digits);

  mpfr_t value_;
  int digits_;
};

std::ostream& operator<<(std::ostream& os, const BigReal& x);

mpfr_prec_t bits_for_digits(int digits);

BigReal sqrt(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal log(const BigReal& x);
BigReal sin(const BigReal& x);
BigReal cos(const BigReal& x);
BigReal atan2(const BigReal& y, const BigReal& x);
BigReal pow(const BigReal& x, const BigReal& y);
BigReal abs(const BigReal& x);
BigReal sinh(const BigReal& x);
BigReal cosh(const BigReal& x);
BigReal digamma(const BigReal& x);
BigReal max(const BigReal& a, const BigReal& b);

BigReal const_pi(int digits);
BigReal const_euler(int digits);
// 10^(-k) at the given precision; used for tolerances.
BigReal ten_to_minus(int k, int digits);

// log Gamma(x) for x > 0; throws std::domain_error otherwise.
BigReal log_gamma(const BigReal& x);
BigReal log_gamma(const Rational& x, int digits);

}  // namespace colmez

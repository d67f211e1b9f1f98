#include "colmez/bigreal.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace colmez {

namespace {
constexpr mpfr_rnd_t kRnd = MPFR_RNDN;

BigReal unary(const BigReal& x, int (*fn)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t)) {
  BigReal r(x.digits());
  fn(r.get(), x.get(), kRnd);
  return r;
}
}  // namespace

mpfr_prec_t bits_for_digits(int digits) {
  if (digits < 1) throw std::invalid_argument("precision must be positive");
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 16;
}

BigReal::BigReal(int digits) : digits_(digits) {
  mpfr_init2(value_, bits_for_digits(digits));
  mpfr_set_zero(value_, 1);
}

BigReal::BigReal(long value, int digits) : BigReal(digits) { mpfr_set_si(value_, value, kRnd); }

BigReal::BigReal(double value, int digits) : BigReal(digits) { mpfr_set_d(value_, value, kRnd); }

BigReal::BigReal(const Rational& value, int digits) : BigReal(digits) {
  mpfr_set_q(value_, value.get_mpq_t(), kRnd);
}

BigReal BigReal::parse(const std::string& text, int digits) {
  BigReal r(digits);
  if (mpfr_set_str(r.value_, text.c_str(), 10, kRnd) != 0) {
    throw std::invalid_argument("not a decimal number: " + text);
  }
  return r;
}

BigReal::BigReal(const BigReal& other) : digits_(other.digits_) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, kRnd);
}

BigReal::BigReal(BigReal&& other) noexcept : digits_(other.digits_) {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, kRnd);
    digits_ = other.digits_;
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  mpfr_swap(value_, other.value_);
  std::swap(digits_, other.digits_);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(value_); }

BigReal BigReal::with_digits(int digits) const {
  BigReal r(digits);
  mpfr_set(r.value_, value_, kRnd);
  return r;
}

void BigReal::adopt_precision(int digits) {
  if (digits <= digits_) return;
  mpfr_prec_round(value_, bits_for_digits(digits), kRnd);
  digits_ = digits;
}

double BigReal::to_double() const { return mpfr_get_d(value_, kRnd); }

std::string BigReal::str(int significant) const {
  if (mpfr_nan_p(value_)) return "nan";
  if (mpfr_inf_p(value_)) return mpfr_sgn(value_) > 0 ? "inf" : "-inf";
  std::vector<char> buf(static_cast<std::size_t>(significant) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", significant - 1, value_);
  return std::string(buf.data());
}

bool BigReal::is_zero() const { return mpfr_zero_p(value_) != 0; }
bool BigReal::is_finite() const { return mpfr_number_p(value_) != 0; }
int BigReal::sign() const { return mpfr_sgn(value_); }

BigReal& BigReal::operator+=(const BigReal& rhs) {
  adopt_precision(rhs.digits_);
  mpfr_add(value_, value_, rhs.value_, kRnd);
  return *this;
}

BigReal& BigReal::operator-=(const BigReal& rhs) {
  adopt_precision(rhs.digits_);
  mpfr_sub(value_, value_, rhs.value_, kRnd);
  return *this;
}

BigReal& BigReal::operator*=(const BigReal& rhs) {
  adopt_precision(rhs.digits_);
  mpfr_mul(value_, value_, rhs.value_, kRnd);
  return *this;
}

BigReal& BigReal::operator/=(const BigReal& rhs) {
  adopt_precision(rhs.digits_);
  mpfr_div(value_, value_, rhs.value_, kRnd);
  return *this;
}

BigReal BigReal::operator-() const {
  BigReal r(*this);
  mpfr_neg(r.value_, r.value_, kRnd);
  return r;
}

bool operator<(const BigReal& a, const BigReal& b) { return mpfr_less_p(a.value_, b.value_) != 0; }
bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }

std::ostream& operator<<(std::ostream& os, const BigReal& x) { return os << x.str(); }

BigReal sqrt(const BigReal& x) { return unary(x, mpfr_sqrt); }
BigReal exp(const BigReal& x) { return unary(x, mpfr_exp); }
BigReal log(const BigReal& x) { return unary(x, mpfr_log); }
BigReal sin(const BigReal& x) { return unary(x, mpfr_sin); }
BigReal cos(const BigReal& x) { return unary(x, mpfr_cos); }
BigReal abs(const BigReal& x) { return unary(x, mpfr_abs); }
BigReal sinh(const BigReal& x) { return unary(x, mpfr_sinh); }
BigReal cosh(const BigReal& x) { return unary(x, mpfr_cosh); }
BigReal digamma(const BigReal& x) { return unary(x, mpfr_digamma); }

BigReal atan2(const BigReal& y, const BigReal& x) {
  BigReal r(std::max(x.digits(), y.digits()));
  mpfr_atan2(r.get(), y.get(), x.get(), kRnd);
  return r;
}

BigReal pow(const BigReal& x, const BigReal& y) {
  BigReal r(std::max(x.digits(), y.digits()));
  mpfr_pow(r.get(), x.get(), y.get(), kRnd);
  return r;
}

BigReal max(const BigReal& a, const BigReal& b) { return a < b ? b : a; }

BigReal const_pi(int digits) {
  BigReal r(digits);
  mpfr_const_pi(r.get(), kRnd);
  return r;
}

BigReal const_euler(int digits) {
  BigReal r(digits);
  mpfr_const_euler(r.get(), kRnd);
  return r;
}

BigReal ten_to_minus(int k, int digits) {
  BigReal r(10L, digits);
  mpfr_pow_si(r.get(), r.get(), -k, kRnd);
  return r;
}

BigReal log_gamma(const BigReal& x) {
  if (x.sign() <= 0) throw std::domain_error("log_gamma: argument must be positive");
  return unary(x, mpfr_lngamma);
}

BigReal log_gamma(const Rational& x, int digits) {
  if (sgn(x) <= 0) throw std::domain_error("log_gamma: argument must be positive");
  return log_gamma(BigReal(x, digits));
}

}  // namespace colmez

#include "colmez/bigcomplex.hpp"

#include <stdexcept>

namespace colmez {

BigComplex& BigComplex::operator+=(const BigComplex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& o) {
  BigReal r = re * o.re - im * o.im;
  BigReal i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& o) {
  BigReal den = norm2(o);
  if (den.is_zero()) throw std::domain_error("complex division by zero");
  BigReal r = (re * o.re + im * o.im) / den;
  BigReal i = (im * o.re - re * o.im) / den;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

BigComplex& BigComplex::operator*=(const BigReal& s) {
  re *= s;
  im *= s;
  return *this;
}

BigComplex conj(const BigComplex& z) { return BigComplex(z.re, -z.im); }

BigReal norm2(const BigComplex& z) { return z.re * z.re + z.im * z.im; }

BigReal abs(const BigComplex& z) { return sqrt(norm2(z)); }

BigReal arg(const BigComplex& z) { return atan2(z.im, z.re); }

BigComplex exp(const BigComplex& z) {
  BigReal m = exp(z.re);
  return BigComplex(m * cos(z.im), m * sin(z.im));
}

BigComplex log(const BigComplex& z) { return BigComplex(log(abs(z)), arg(z)); }

BigComplex sqrt(const BigComplex& z) {
  BigReal half(Rational(1, 2), z.digits());
  BigReal m = sqrt(abs(z));
  BigReal t = arg(z) * half;
  return BigComplex(m * cos(t), m * sin(t));
}

BigComplex unit_phase(const BigReal& theta) { return BigComplex(cos(theta), sin(theta)); }

BigComplex pow_int(const BigComplex& z, long n) {
  BigComplex base = z;
  if (n < 0) {
    base = BigComplex(BigReal(1L, z.digits())) / z;
    n = -n;
  }
  BigComplex result(BigReal(1L, z.digits()));
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

}  // namespace colmez

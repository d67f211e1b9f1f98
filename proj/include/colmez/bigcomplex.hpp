#pragma once

#include "colmez/bigreal.hpp"

namespace colmez {

struct BigComplex {
  BigReal re;
  BigReal im;

  explicit BigComplex(int digits = kDefaultDigits) : re(digits), im(digits) {}
  BigComplex(BigReal r, BigReal i) : re(std::move(r)), im(std::move(i)) {}
  explicit BigComplex(const BigReal& r) : re(r), im(r.digits()) {}

  int digits() const { return std::max(re.digits(), im.digits()); }

  BigComplex& operator+=(const BigComplex& o);
  BigComplex& operator-=(const BigComplex& o);
  BigComplex& operator*=(const BigComplex& o);
  BigComplex& operator/=(const BigComplex& o);
  BigComplex& operator*=(const BigReal& s);

  friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
  friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
  friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
  friend BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }
  friend BigComplex operator*(BigComplex a, const BigReal& s) { return a *= s; }
  BigComplex operator-() const { return BigComplex(-re, -im); }
};

BigComplex conj(const BigComplex& z);
BigReal norm2(const BigComplex& z);
BigReal abs(const BigComplex& z);
BigReal arg(const BigComplex& z);
BigComplex exp(const BigComplex& z);
// Principal branch.
BigComplex log(const BigComplex& z);
BigComplex sqrt(const BigComplex& z);
// e^{i theta}
BigComplex unit_phase(const BigReal& theta);
// z^n for integer n (repeated squaring; n < 0 inverts).
BigComplex pow_int(const BigComplex& z, long n);

}  // namespace colmez

#include "colmez/ratfunc.hpp"

#include <sstream>
#include <stdexcept>

namespace colmez {

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  for (auto& c : c_) c.canonicalize();
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  acc.canonicalize();
  return acc;
}

BigReal Polynomial::eval(const BigReal& x) const {
  BigReal acc(x.digits());
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + BigReal(*it, x.digits());
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
  return Polynomial(std::move(d));
}

std::pair<int, Polynomial> Polynomial::split_root_one() const {
  if (is_zero()) throw std::domain_error("zero polynomial has no finite root multiplicity");
  int mult = 0;
  std::vector<Rational> cur = c_;
  for (;;) {
    // Synthetic division by (X - 1).
    std::vector<Rational> q(cur.size() > 1 ? cur.size() - 1 : 0);
    Rational carry = 0;
    for (std::size_t i = cur.size(); i-- > 0;) {
      carry += cur[i];
      if (i > 0) q[i - 1] = carry;
    }
    if (carry != 0) break;
    cur = std::move(q);
    ++mult;
  }
  return {mult, Polynomial(std::move(cur))};
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return Polynomial(std::move(r));
}

Polynomial operator*(Polynomial a, const Rational& s) {
  for (auto& c : a.c_) c *= s;
  a.trim();
  return a;
}

std::string Polynomial::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    os << "(" << c_[i].get_str() << ")";
    if (i == 1) os << "*X";
    if (i > 1) os << "*X^" << i;
    first = false;
  }
  return os.str();
}

RationalFunctionX::RationalFunctionX(Polynomial num, Polynomial den, std::uint64_t base)
    : num_(std::move(num)), den_(std::move(den)), base_(base) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (base_ < 2) throw std::invalid_argument("rational function base must be >= 2");
}

RationalFunctionX RationalFunctionX::constant(const Rational& c, std::uint64_t base) {
  return RationalFunctionX(Polynomial{c}, Polynomial{1}, base);
}

RationalFunctionX RationalFunctionX::polynomial(Polynomial p, std::uint64_t base) {
  return RationalFunctionX(std::move(p), Polynomial{1}, base);
}

Rational RationalFunctionX::operator()(const Rational& x) const {
  Rational d = den_(x);
  if (d == 0) throw std::domain_error("rational function evaluated at a pole");
  Rational r = num_(x) / d;
  r.canonicalize();
  return r;
}

BigReal RationalFunctionX::eval_s(const BigReal& s) const {
  int digits = s.digits();
  BigReal x = exp(-s * log(BigReal(static_cast<long>(base_), digits)));
  return num_.eval(x) / den_.eval(x);
}

void RationalFunctionX::require_same_base(const RationalFunctionX& o) const {
  if (o.base_ != base_) throw std::invalid_argument("rational functions in different bases");
}

RationalFunctionX& RationalFunctionX::operator+=(const RationalFunctionX& o) {
  require_same_base(o);
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  return *this;
}

RationalFunctionX& RationalFunctionX::operator*=(const RationalFunctionX& o) {
  require_same_base(o);
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  return *this;
}

RationalFunctionX& RationalFunctionX::operator*=(const Rational& s) {
  num_ = num_ * s;
  return *this;
}

std::string RationalFunctionX::str() const {
  return "[" + num_.str() + "] / [" + den_.str() + "], X = " + std::to_string(base_) + "^(-s)";
}

LogLinearValue rf_log_derivative(const RationalFunctionX& f) {
  if (f.num().is_zero()) return LogLinearValue();
  auto [mn, gn] = f.num().split_root_one();
  auto [md, gd] = f.den().split_root_one();
  if (md > mn) {
    throw std::domain_error("pole at X = 1: denominator factor (1 - X)^" + std::to_string(md - mn) +
                            " is not cancelled by the numerator");
  }
  // f = (X - 1)^e * gn/gd with gn(1), gd(1) nonzero.
  int e = mn - md;
  Rational slope;
  if (e >= 2) {
    return LogLinearValue();
  } else if (e == 1) {
    slope = gn(1) / gd(1);
  } else {
    Rational n1 = gn(1), d1 = gd(1);
    slope = (gn.derivative()(1) * d1 - n1 * gd.derivative()(1)) / (d1 * d1);
  }
  slope.canonicalize();
  return LogLinearValue::log_term(f.base(), -slope);
}

}  // namespace colmez

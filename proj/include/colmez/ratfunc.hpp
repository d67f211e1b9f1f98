#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "colmez/bigreal.hpp"
#include "colmez/loglinear.hpp"

namespace colmez {

// Dense polynomial over Q, coefficient i multiplies X^i. Trailing zeros trimmed.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<Rational> coeffs);
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial monomial(const Rational& c, std::size_t degree);

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  Rational operator()(const Rational& x) const;
  BigReal eval(const BigReal& x) const;
  Polynomial derivative() const;
  // Multiplicity of the root X = 1 and the cofactor after dividing it out.
  std::pair<int, Polynomial> split_root_one() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& s);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  std::string str() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

// f(X) = num(X)/den(X) with X standing for N^(-s).
class RationalFunctionX {
 public:
  RationalFunctionX(Polynomial num, Polynomial den, std::uint64_t base);
  static RationalFunctionX constant(const Rational& c, std::uint64_t base);
  static RationalFunctionX polynomial(Polynomial p, std::uint64_t base);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  std::uint64_t base() const { return base_; }

  Rational operator()(const Rational& x) const;
  // f(N^(-s)) at real s.
  BigReal eval_s(const BigReal& s) const;

  RationalFunctionX& operator+=(const RationalFunctionX& o);
  RationalFunctionX& operator*=(const RationalFunctionX& o);
  friend RationalFunctionX operator+(RationalFunctionX a, const RationalFunctionX& b) { return a += b; }
  friend RationalFunctionX operator*(RationalFunctionX a, const RationalFunctionX& b) { return a *= b; }
  RationalFunctionX& operator*=(const Rational& s);

  std::string str() const;

 private:
  void require_same_base(const RationalFunctionX& o) const;
  Polynomial num_;
  Polynomial den_;
  std::uint64_t base_;
};

// d/ds f(N^(-s)) at s = 0, i.e. -log N * f'(1), exactly.
// Throws std::domain_error naming the (1 - X)^k denominator factor on a pole.
LogLinearValue rf_log_derivative(const RationalFunctionX& f);

}  // namespace colmez

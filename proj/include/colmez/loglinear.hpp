#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "colmez/bigreal.hpp"

namespace colmez {

// Exact value  constant + sum_b c_b * log(b)  with integer bases b >= 2 that
// are not perfect powers. Equality is structural.
class LogLinearValue {
 public:
  LogLinearValue() = default;
  explicit LogLinearValue(const Rational& constant);

  // coefficient * log(base); base >= 1, log 1 = 0.
  static LogLinearValue log_term(std::uint64_t base, const Rational& coefficient = 1);
  // log of a positive rational, split as log(num) - log(den).
  static LogLinearValue log_of(const Rational& x);

  const Rational& constant() const { return constant_; }
  const std::map<std::uint64_t, Rational>& terms() const { return terms_; }
  Rational coefficient(std::uint64_t base) const;
  bool is_zero() const { return constant_ == 0 && terms_.empty(); }

  LogLinearValue& operator+=(const LogLinearValue& o);
  LogLinearValue& operator-=(const LogLinearValue& o);
  LogLinearValue& operator*=(const Rational& s);
  friend LogLinearValue operator+(LogLinearValue a, const LogLinearValue& b) { return a += b; }
  friend LogLinearValue operator-(LogLinearValue a, const LogLinearValue& b) { return a -= b; }
  friend LogLinearValue operator*(LogLinearValue a, const Rational& s) { return a *= s; }
  friend LogLinearValue operator*(const Rational& s, LogLinearValue a) { return a *= s; }
  LogLinearValue operator-() const;

  friend bool operator==(const LogLinearValue& a, const LogLinearValue& b) {
    return a.constant_ == b.constant_ && a.terms_ == b.terms_;
  }

  BigReal evaluate(int digits) const;
  // e.g. "1/2 + 3/4*log(3)"; the zero value prints as "0".
  std::string str() const;

 private:
  void add_term(std::uint64_t base, const Rational& coefficient);

  Rational constant_ = 0;
  std::map<std::uint64_t, Rational> terms_;
};

// Smallest r with r^k = n; returns {r, k}.
std::pair<std::uint64_t, unsigned> primitive_root_power(std::uint64_t n);

}  // namespace colmez

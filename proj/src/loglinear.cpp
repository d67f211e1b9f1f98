#include "colmez/loglinear.hpp"

#include <sstream>
#include <stdexcept>

namespace colmez {

namespace {

// floor(n^(1/k)) computed exactly.
std::uint64_t integer_root(std::uint64_t n, unsigned k) {
  mpz_class z(std::to_string(n)), r;
  mpz_root(r.get_mpz_t(), z.get_mpz_t(), k);
  return r.get_ui();
}

bool is_exact_power(std::uint64_t r, unsigned k, std::uint64_t n) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), r, k);
  return p == mpz_class(std::to_string(n));
}

std::uint64_t to_u64(const mpz_class& z) {
  if (sgn(z) <= 0 || mpz_sizeinbase(z.get_mpz_t(), 2) > 64) {
    throw std::out_of_range("log base outside 64-bit range");
  }
  return std::stoull(z.get_str());
}

}  // namespace

std::pair<std::uint64_t, unsigned> primitive_root_power(std::uint64_t n) {
  if (n < 2) return {n, 1};
  unsigned bits = 64 - static_cast<unsigned>(__builtin_clzll(n));
  for (unsigned k = bits; k >= 2; --k) {
    std::uint64_t r = integer_root(n, k);
    if (r >= 2 && is_exact_power(r, k, n)) {
      auto inner = primitive_root_power(r);
      return {inner.first, inner.second * k};
    }
  }
  return {n, 1};
}

LogLinearValue::LogLinearValue(const Rational& constant) : constant_(constant) {
  constant_.canonicalize();
}

LogLinearValue LogLinearValue::log_term(std::uint64_t base, const Rational& coefficient) {
  if (base == 0) throw std::domain_error("log of zero");
  LogLinearValue v;
  v.add_term(base, coefficient);
  return v;
}

LogLinearValue LogLinearValue::log_of(const Rational& x) {
  if (sgn(x) <= 0) throw std::domain_error("log of non-positive rational");
  Rational c(x);
  c.canonicalize();
  LogLinearValue v;
  v.add_term(to_u64(c.get_num()), 1);
  v.add_term(to_u64(c.get_den()), -1);
  return v;
}

void LogLinearValue::add_term(std::uint64_t base, const Rational& coefficient) {
  if (base == 0) throw std::domain_error("log of zero");
  if (base == 1 || coefficient == 0) return;
  auto [root, power] = primitive_root_power(base);
  Rational& slot = terms_[root];
  slot += coefficient * power;
  slot.canonicalize();
  if (slot == 0) terms_.erase(root);
}

Rational LogLinearValue::coefficient(std::uint64_t base) const {
  auto [root, power] = primitive_root_power(base);
  auto it = terms_.find(root);
  if (it == terms_.end()) return 0;
  return it->second / power;
}

LogLinearValue& LogLinearValue::operator+=(const LogLinearValue& o) {
  constant_ += o.constant_;
  constant_.canonicalize();
  for (const auto& [b, c] : o.terms_) add_term(b, c);
  return *this;
}

LogLinearValue& LogLinearValue::operator-=(const LogLinearValue& o) {
  constant_ -= o.constant_;
  constant_.canonicalize();
  for (const auto& [b, c] : o.terms_) add_term(b, -c);
  return *this;
}

LogLinearValue& LogLinearValue::operator*=(const Rational& s) {
  constant_ *= s;
  constant_.canonicalize();
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [b, c] : terms_) {
    c *= s;
    c.canonicalize();
  }
  return *this;
}

LogLinearValue LogLinearValue::operator-() const {
  LogLinearValue r(*this);
  r *= -1;
  return r;
}

BigReal LogLinearValue::evaluate(int digits) const {
  BigReal sum(constant_, digits);
  for (const auto& [b, c] : terms_) {
    sum += BigReal(c, digits) * log(BigReal(static_cast<long>(b), digits));
  }
  return sum;
}

std::string LogLinearValue::str() const {
  std::ostringstream os;
  bool first = true;
  if (constant_ != 0) {
    os << constant_.get_str();
    first = false;
  }
  for (const auto& [b, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "log(" << b << ")";
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace colmez

#include "colmez/lfun.hpp"

#include <stdexcept>
#include <vector>

#include "colmez/quadfield.hpp"

namespace colmez {

namespace {

// B_2, B_4, ..., B_{2n}.
std::vector<Rational> even_bernoulli(int n) {
  // Akiyama-Tanigawa; only the even-index values are used.
  std::vector<Rational> a(2 * n + 1);
  std::vector<Rational> all(2 * n + 1);
  for (int m = 0; m <= 2 * n; ++m) {
    a[m] = Rational(1, m + 1);
    for (int j = m; j >= 1; --j) {
      a[j - 1] = j * (a[j - 1] - a[j]);
      a[j - 1].canonicalize();
    }
    all[m] = a[0];
  }
  std::vector<Rational> out;
  for (int j = 1; j <= n; ++j) out.push_back(all[2 * j]);
  return out;
}

Rational frac(long a, long m) {
  Rational r(a, m);
  r.canonicalize();
  return r;
}

}  // namespace

Rational l_at_zero_exact(long d) {
  require_fundamental(d);
  const long m = -d;
  mpz_class sum = 0;
  for (long a = 1; a < m; ++a) sum += a * kronecker(d, a);
  Rational r(-sum, mpz_class(m));
  r.canonicalize();
  return r;
}

BigReal l_at_zero(long d, int digits) { return BigReal(l_at_zero_exact(d), digits); }

BigReal l_prime_at_zero(long d, int digits) {
  require_fundamental(d);
  const long m = -d;
  const int work = digits + 10;
  BigReal sum(work);
  for (long a = 1; a < m; ++a) {
    int chi = kronecker(d, a);
    if (chi == 0) continue;
    BigReal lg = log_gamma(frac(a, m), work);
    if (chi > 0) {
      sum += lg;
    } else {
      sum -= lg;
    }
  }
  sum -= log(BigReal(m, work)) * BigReal(l_at_zero_exact(d), work);
  return sum.with_digits(digits);
}

LSeriesData l_series_data(long d, int digits) {
  LSeriesData out;
  out.d = d;
  out.digits = digits;
  out.L0_exact = l_at_zero_exact(d);
  out.L0 = BigReal(out.L0_exact, digits);
  out.L0prime = l_prime_at_zero(d, digits);
  out.ratio = out.L0prime / out.L0;
  return out;
}

BigReal hurwitz_zeta(const BigReal& s, const Rational& a, int digits) {
  if (a <= 0) throw std::domain_error("hurwitz_zeta: a must be positive");
  const int work = digits + 15;
  BigReal sw = s.with_digits(work);
  BigReal one(1L, work);
  if (sw == one) throw std::domain_error("hurwitz_zeta: pole at s = 1");
  const long M = 2L * digits + 10;
  const int J = digits / 2 + 10;
  BigReal aw(a, work);
  BigReal sum(work);
  for (long k = 0; k < M; ++k) sum += exp(-sw * log(aw + BigReal(k, work)));
  BigReal x = aw + BigReal(M, work);
  BigReal logx = log(x);
  sum += exp((one - sw) * logx) / (sw - one);
  BigReal xs = exp(-sw * logx);
  sum += xs / BigReal(2L, work);
  // Tail terms B_{2j}/(2j)! * s(s+1)...(s+2j-2) * x^{-s-2j+1}.
  auto bern = even_bernoulli(J);
  BigReal rising = sw;             // s(s+1)...(s+2j-2)
  BigReal xpow = xs / x;           // x^{-s-2j+1}
  BigReal x2inv = one / (x * x);
  mpz_class fact = 2;              // (2j)!
  for (int j = 1; j <= J; ++j) {
    sum += BigReal(Rational(bern[j - 1] / Rational(fact)), work) * rising * xpow;
    rising *= (sw + BigReal(2L * j - 1, work)) * (sw + BigReal(2L * j, work));
    xpow *= x2inv;
    fact *= (2 * j + 1) * (2 * j + 2);
  }
  return sum.with_digits(digits);
}

BigReal l_function(long d, const BigReal& s, int digits) {
  require_fundamental(d);
  const long m = -d;
  const int work = digits + 10;
  BigReal sum(work);
  for (long a = 1; a < m; ++a) {
    int chi = kronecker(d, a);
    if (chi == 0) continue;
    BigReal z = hurwitz_zeta(s, frac(a, m), work);
    if (chi > 0) {
      sum += z;
    } else {
      sum -= z;
    }
  }
  sum *= exp(-s.with_digits(work) * log(BigReal(m, work)));
  return sum.with_digits(digits);
}

BigReal l_at_one(long d, int digits) {
  require_fundamental(d);
  const long m = -d;
  const int work = digits + 10;
  BigReal sum(work);
  for (long a = 1; a < m; ++a) {
    int chi = kronecker(d, a);
    if (chi == 0) continue;
    BigReal psi = digamma(BigReal(frac(a, m), work));
    if (chi > 0) {
      sum += psi;
    } else {
      sum -= psi;
    }
  }
  return (-sum / BigReal(m, work)).with_digits(digits);
}

BigReal gamma_factor_logderiv(int m, int digits) {
  if (m < 1) throw std::invalid_argument("gamma_factor_logderiv: m must be >= 1");
  BigReal four_pi = const_pi(digits) * BigReal(4L, digits);
  return -BigReal(static_cast<long>(m), digits) / BigReal(2L, digits) * (const_euler(digits) + log(four_pi));
}

BigReal log_gamma_factor(const BigReal& s) {
  const int digits = s.digits();
  BigReal half_s1 = (s + BigReal(1L, digits)) / BigReal(2L, digits);
  return -half_s1 * log(const_pi(digits)) + log_gamma(half_s1);
}

ConstantReport constants_report(long d, int digits) {
  LSeriesData l = l_series_data(d, digits);
  ConstantReport r;
  r.d = d;
  r.m = 1;
  BigReal log_d = log(BigReal(-d, digits));
  BigReal two(2L, digits);
  r.finite_ratio = l.ratio;
  r.gamma_logderiv = gamma_factor_logderiv(1, digits);
  r.completed_ratio = r.finite_ratio + r.gamma_logderiv;
  r.c0 = two * r.completed_ratio + log_d;
  r.c1 = two * r.finite_ratio + log_d;
  r.identity_residual = r.c1 - r.c0 + two * r.gamma_logderiv;
  return r;
}

}  // namespace colmez

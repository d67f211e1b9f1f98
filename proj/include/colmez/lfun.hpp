#pragma once

#include "colmez/bigreal.hpp"

namespace colmez {

struct LSeriesData {
  long d = 0;
  Rational L0_exact;
  BigReal L0;
  BigReal L0prime;
  BigReal ratio;  // L0prime / L0
  int digits = kDefaultDigits;
};

struct ConstantReport {
  long d = 0;
  int m = 1;
  BigReal finite_ratio;     // L'_f(0) / L_f(0)
  BigReal gamma_logderiv;   // L'_inf(0) / L_inf(0)
  BigReal completed_ratio;  // finite_ratio + gamma_logderiv
  BigReal c0;
  BigReal c1;
  BigReal identity_residual;  // c1 - c0 + 2 gamma_logderiv
};

// -(1/|d|) sum_{a=1}^{|d|-1} a chi(a).
Rational l_at_zero_exact(long d);
BigReal l_at_zero(long d, int digits);

// sum_a chi(a) log Gamma(a/|d|) - log|d| L(0).
BigReal l_prime_at_zero(long d, int digits);

LSeriesData l_series_data(long d, int digits);

// Hurwitz zeta by Euler-Maclaurin summation; s = 1 is refused.
BigReal hurwitz_zeta(const BigReal& s, const Rational& a, int digits);

// L(s, chi_d) = |d|^{-s} sum_{a=1}^{|d|} chi(a) zeta(s, a/|d|), for s != 1.
BigReal l_function(long d, const BigReal& s, int digits);

// L(1, chi_d) = -(1/|d|) sum_a chi(a) psi(a/|d|).
BigReal l_at_one(long d, int digits);

// Log-derivative at s = 0 of (pi^{-(s+1)/2} Gamma((s+1)/2))^m, i.e. -(m/2)(gamma + log 4 pi).
BigReal gamma_factor_logderiv(int m, int digits);

// log of pi^{-(s+1)/2} Gamma((s+1)/2), the single-place gamma factor.
BigReal log_gamma_factor(const BigReal& s);

ConstantReport constants_report(long d, int digits);

}  // namespace colmez

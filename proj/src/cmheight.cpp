#include "colmez/cmheight.hpp"

#include <stdexcept>
#include <vector>

#include "colmez/lfun.hpp"
#include "colmez/quadfield.hpp"

namespace colmez {

BigComplex dedekind_eta(const BigComplex& tau, int digits) {
  if (tau.im.sign() <= 0) throw std::domain_error("dedekind_eta: Im tau must be positive");
  const int work = digits + 10;
  BigComplex t(tau.re.with_digits(work), tau.im.with_digits(work));
  BigReal pi = const_pi(work);
  BigComplex i_pi(BigReal(work), pi);
  BigComplex q = exp(i_pi * t * BigReal(2L, work));
  BigReal qabs = abs(q);
  BigReal cutoff = ten_to_minus(digits + 10, work);
  BigComplex prod(BigReal(1L, work), BigReal(work));
  BigComplex qn = q;
  BigReal qn_abs = qabs;
  while (qn_abs >= cutoff) {
    prod = prod * (BigComplex(BigReal(1L, work), BigReal(work)) - qn);
    qn = qn * q;
    qn_abs *= qabs;
  }
  BigComplex pref = exp(i_pi * t / BigComplex(BigReal(12L, work), BigReal(work)));
  BigComplex out = pref * prod;
  return BigComplex(out.re.with_digits(digits), out.im.with_digits(digits));
}

BigReal height_normalization(int digits) { return log(const_pi(digits)) / BigReal(2L, digits); }

BigReal cm_faltings_height_from_points(const std::vector<BigComplex>& taus, int digits) {
  if (taus.empty()) throw std::invalid_argument("cm_faltings_height: no points");
  const int work = digits + 10;
  BigReal two_pi_log = log(const_pi(work) * BigReal(2L, work));
  BigReal sum(work);
  for (const auto& tau : taus) {
    BigReal eta_abs = abs(dedekind_eta(tau, work));
    sum += BigReal(12L, work) * two_pi_log + BigReal(24L, work) * log(eta_abs) +
           BigReal(6L, work) * log(tau.im.with_digits(work));
  }
  BigReal count(static_cast<long>(taus.size()) * 12, work);
  return (-sum / count + height_normalization(work)).with_digits(digits);
}

BigReal cm_faltings_height(long d, int digits) {
  ClassGroupData g = class_group(d);
  std::vector<BigComplex> taus;
  for (const auto& f : g.forms) taus.push_back(heegner_point(d, f, digits + 10));
  return cm_faltings_height_from_points(taus, digits);
}

HeightReport colmez_check(long d, int digits) {
  ClassGroupData g = class_group(d);
  HeightReport r;
  r.d = d;
  r.h = g.h;
  r.w = g.w;
  r.digits = digits;
  r.lhs = cm_faltings_height(d, digits);
  LSeriesData l = l_series_data(d, digits + 10);
  BigReal rhs = -l.ratio / BigReal(2L, digits + 10) - log(BigReal(-d, digits + 10)) / BigReal(4L, digits + 10);
  r.rhs = rhs.with_digits(digits);
  r.diff = r.lhs - r.rhs;
  return r;
}

}  // namespace colmez

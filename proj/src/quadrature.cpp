#include "colmez/quadrature.hpp"

#include <stdexcept>

namespace colmez {

namespace {

constexpr int kGuardDigits = 12;
constexpr int kMaxLevels = 14;

struct HalfLineSum {
  const Integrand& integrand;
  int work;
  BigReal half_pi;
  BigReal eps;

  BigReal term(const BigReal& tau) const {
    BigReal t = half_pi * sinh(tau);
    BigReal y = exp(t);
    if (y.is_zero() || !y.is_finite()) return BigReal(work);
    BigReal fy = integrand.f(y);
    if (!fy.is_finite()) {
      throw std::domain_error("integrand not finite at sample point y = " + y.str(12));
    }
    return fy * y * half_pi * cosh(tau);
  }

  // Sum of term(k h) over k = start, start + stride, ... in one direction until
  // the terms fall below eps relative to the running total.
  BigReal run(const BigReal& h, long start, long stride, long direction, const BigReal& scale) const {
    BigReal sum(work);
    long quiet = 0;
    for (long k = start;; k += stride) {
      BigReal tau = h * BigReal(direction * k, work);
      if (abs(tau) > BigReal(8L, work)) break;
      BigReal v = term(tau);
      sum += v;
      if (abs(v) <= eps * max(abs(sum), scale)) {
        if (++quiet >= 3) break;
      } else {
        quiet = 0;
      }
    }
    return sum;
  }
};

}  // namespace

QuadratureResult integrate_semiinfinite_detailed(const Integrand& integrand, int digits) {
  if (integrand.decay == Decay::none) {
    throw std::domain_error("integrate_semiinfinite: integrand declared non-decaying, refused");
  }
  const int work = digits + kGuardDigits;
  HalfLineSum hs{integrand, work, const_pi(work) / BigReal(2L, work), ten_to_minus(work, work)};
  const BigReal tol = ten_to_minus(digits - 4, work);
  const BigReal one(1L, work);

  BigReal h(1L, work);
  // Level 0: all integer nodes.
  BigReal center = hs.term(BigReal(work));
  BigReal scale = abs(center) + one * ten_to_minus(work / 2, work);
  BigReal nodes = center + hs.run(h, 1, 1, 1, scale) + hs.run(h, 1, 1, -1, scale);
  BigReal estimate = nodes * h;
  for (int level = 1; level <= kMaxLevels; ++level) {
    h /= BigReal(2L, work);
    // New nodes are the odd multiples of the halved step.
    nodes += hs.run(h, 1, 2, 1, scale) + hs.run(h, 1, 2, -1, scale);
    BigReal next = nodes * h;
    BigReal diff = abs(next - estimate);
    estimate = next;
    // The trapezoid error roughly squares per level: a small difference bounds
    // the error of the newer estimate by far less than the difference itself.
    if (level >= 3 && diff < tol * ten_to_minus(2, work)) {
      return {estimate.with_digits(digits), diff.with_digits(digits), level};
    }
  }
  throw std::runtime_error("integrate_semiinfinite: no convergence within " +
                           std::to_string(kMaxLevels) + " halvings");
}

BigReal integrate_semiinfinite(const Integrand& integrand, int digits) {
  return integrate_semiinfinite_detailed(integrand, digits).value;
}

}  // namespace colmez

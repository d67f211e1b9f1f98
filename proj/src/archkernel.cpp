#include "colmez/archkernel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "colmez/quadrature.hpp"

namespace colmez {

namespace {

void require_above_one(const BigReal& t, const char* who) {
  if (t <= BigReal(1L, t.digits())) {
    throw std::domain_error(std::string(who) + ": t must exceed 1 (logarithmic singularity at t = 1), got " +
                            t.str(12));
  }
}

void require_upper(const UpperHalfPoint& z) {
  if (z.y.sign() <= 0) throw std::domain_error("point not in the upper half plane");
}

BigReal sq_dist(const UpperHalfPoint& a, const UpperHalfPoint& b) {
  BigReal dx = a.x - b.x, dy = a.y - b.y;
  return dx * dx + dy * dy;
}

}  // namespace

BigReal legendre_q(const BigReal& s, const BigReal& t, int digits) {
  require_above_one(t, "legendre_q");
  if (s.sign() < 0) throw std::domain_error("legendre_q: s must be >= 0");
  const int work = digits + 10;
  BigReal tw = t.with_digits(work);
  BigReal one(1L, work);
  BigReal root = sqrt(tw * tw - one);
  BigReal expo = -(one + s.with_digits(work));
  const bool integer_power = s.is_zero();
  Integrand f{[=](const BigReal& u) {
    BigReal base = tw + root * cosh(u);
    return integer_power ? one / base : exp(expo * log(base));
  }};
  return integrate_semiinfinite(f, digits);
}

BigReal legendre_q0_closed(const BigReal& t) {
  require_above_one(t, "legendre_q0_closed");
  BigReal one(1L, t.digits());
  return log((t + one) / (t - one)) / BigReal(2L, t.digits());
}

BigReal hyperbolic_cosh_distance(const UpperHalfPoint& z0, const UpperHalfPoint& z1) {
  require_upper(z0);
  require_upper(z1);
  const int digits = std::max(z0.y.digits(), z1.y.digits());
  return BigReal(1L, digits) + sq_dist(z0, z1) / (BigReal(2L, digits) * z0.y * z1.y);
}

BigReal green_ms(const BigReal& s, const UpperHalfPoint& z0, const UpperHalfPoint& z1, int digits) {
  if (z0.x == z1.x && z0.y == z1.y) throw std::domain_error("green_ms: z1 = z0 is the diagonal singularity");
  return legendre_q(s, hyperbolic_cosh_distance(z0, z1), digits);
}

AdjunctionReport adjunction_limit(const UpperHalfPoint& z0, const UpperHalfPoint& z1, int digits) {
  // The Green function sees only 1 + O(|z1 - z0|^2); carry enough digits for that gap.
  BigReal gap = sq_dist(z0, z1);
  if (gap.is_zero()) throw std::domain_error("adjunction_limit: z1 = z0");
  const int extra = std::max(0, static_cast<int>(-std::floor(std::log10(gap.to_double()))));
  const int work = digits + 10 + extra;
  UpperHalfPoint a{z0.x.with_digits(work), z0.y.with_digits(work)};
  UpperHalfPoint b{z1.x.with_digits(work), z1.y.with_digits(work)};
  BigReal two(2L, work), one(1L, work);
  BigReal dist = sqrt(sq_dist(a, b));
  BigReal m0 = green_ms(BigReal(work), a, b, work);
  AdjunctionReport r;
  r.composite = (m0 - log(two * b.y / dist)).with_digits(digits);
  BigReal simplified = log(one + sq_dist(a, b) / (BigReal(4L, work) * a.y * b.y)) / two - log(b.y / a.y) / two;
  r.simplified = simplified.with_digits(digits);
  return r;
}

}  // namespace colmez

#pragma once

#include <functional>

#include "colmez/bigreal.hpp"

namespace colmez {

enum class Decay { exponential, none };

struct Integrand {
  std::function<BigReal(const BigReal&)> f;
  Decay decay = Decay::exponential;
  // Declares an integrable (e.g. logarithmic) singularity at 0.
  bool singular_at_zero = false;
};

struct QuadratureResult {
  BigReal value;
  BigReal error_estimate;
  int levels = 0;
};

// Integral of f over (0, inf). Uses y = e^t with t = (pi/2) sinh(tau) and the
// trapezoid rule in tau, halving the step until successive levels agree.
// Target absolute error 10^(-digits+4). Refuses Decay::none.
QuadratureResult integrate_semiinfinite_detailed(const Integrand& integrand, int digits);
BigReal integrate_semiinfinite(const Integrand& integrand, int digits);

}  // namespace colmez

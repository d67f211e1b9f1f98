#pragma once

#include <vector>

#include "colmez/bigcomplex.hpp"

namespace colmez {

struct HeightReport {
  long d = 0;
  long h = 0;
  int w = 0;
  BigReal lhs;   // modular side
  BigReal rhs;   // L-function side
  BigReal diff;  // lhs - rhs
  int digits = kDefaultDigits;
};

// eta(tau) = e^{pi i tau/12} prod (1 - q^n); requires Im tau > 0.
BigComplex dedekind_eta(const BigComplex& tau, int digits);

// Offset between the (2 pi)^{-1}-normalized metric and the classical one.
BigReal height_normalization(int digits);

// -(1/(12h)) sum_j log((2 pi)^12 |eta(tau_j)|^24 (Im tau_j)^6) + normalization.
BigReal cm_faltings_height(long d, int digits);

// Same sum over caller-supplied Heegner points (any representatives).
BigReal cm_faltings_height_from_points(const std::vector<BigComplex>& taus, int digits);

HeightReport colmez_check(long d, int digits);

}  // namespace colmez

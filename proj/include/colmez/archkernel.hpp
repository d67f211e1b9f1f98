#pragma once

#include "colmez/bigreal.hpp"

namespace colmez {

struct UpperHalfPoint {
  BigReal x;
  BigReal y;  // > 0
};

// Q_s(t) = int_0^inf (t + sqrt(t^2 - 1) cosh u)^{-1-s} du by quadrature; t > 1, s >= 0.
BigReal legendre_q(const BigReal& s, const BigReal& t, int digits);

// (1/2) log((t + 1)/(t - 1)).
BigReal legendre_q0_closed(const BigReal& t);

// 1 + |z1 - z0|^2 / (2 Im z0 Im z1).
BigReal hyperbolic_cosh_distance(const UpperHalfPoint& z0, const UpperHalfPoint& z1);

// m_s(z0, z1) = Q_s(1 + |z1 - z0|^2 / (2 Im z0 Im z1)); refuses z1 = z0.
BigReal green_ms(const BigReal& s, const UpperHalfPoint& z0, const UpperHalfPoint& z1, int digits);

struct AdjunctionReport {
  BigReal composite;   // m_0(z0, z1) - log(2 Im z1 / |z1 - z0|), m_0 by quadrature
  BigReal simplified;  // (1/2) log(1 + |z1-z0|^2/(4 Im z0 Im z1)) - (1/2) log(Im z1 / Im z0)
};

AdjunctionReport adjunction_limit(const UpperHalfPoint& z0, const UpperHalfPoint& z1, int digits);

}  // namespace colmez

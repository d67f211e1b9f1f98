#include <cmath>

#include "colmez/archkernel.hpp"
#include "doctest.h"

using namespace colmez;

namespace {

bool close(const BigReal& a, const BigReal& b, int digits_tol) {
  return abs(a - b) < ten_to_minus(digits_tol, std::max(a.digits(), b.digits()));
}

UpperHalfPoint pt(const std::string& x, const std::string& y, int d) {
  return {BigReal::parse(x, d), BigReal::parse(y, d)};
}

}  // namespace

TEST_CASE("Q_0 closed form and quadrature") {
  const int d = 64;
  BigReal half_log2 = log(BigReal(2L, d)) / BigReal(2L, d);
  CHECK(close(legendre_q0_closed(BigReal(3L, d)), half_log2, 62));
  CHECK(close(legendre_q(BigReal(d), BigReal(3L, d), d), half_log2, d - 4));
  CHECK(close(legendre_q(BigReal(d), BigReal(3L, d), d), BigReal::parse("0.3465735903", d), 10));
  for (const char* t : {"1.01", "1.1", "2", "3", "10", "100"}) {
    BigReal tv = BigReal::parse(t, d);
    CHECK_MESSAGE(close(legendre_q(BigReal(d), tv, d), legendre_q0_closed(tv), d - 4), t);
  }
  // Log-spaced grid in (1, 10^3].
  for (int k = 0; k < 12; ++k) {
    BigReal tv = BigReal(1L, d) + pow(BigReal(10L, d), BigReal(-4.0 + 0.6 * k, d));
    CHECK(close(legendre_q(BigReal(d), tv, d), legendre_q0_closed(tv), d - 4));
  }
  CHECK(abs(legendre_q(BigReal(d), BigReal(1000000L, d), d)) < ten_to_minus(5, d));
}

TEST_CASE("Q_0 near t = 1") {
  const int d = 64;
  BigReal t = BigReal(1L, d) + ten_to_minus(6, d);
  BigReal q = legendre_q0_closed(t);
  BigReal asym = -log((t - BigReal(1L, d)) / BigReal(2L, d)) / BigReal(2L, d);
  // The next term is O(t - 1).
  CHECK(abs(q - asym) < ten_to_minus(6, d));
  CHECK_THROWS_AS(legendre_q0_closed(BigReal(1L, d)), std::domain_error);
  CHECK_THROWS_AS(legendre_q(BigReal(d), BigReal(0.5, d), d), std::domain_error);
}

TEST_CASE("Q_s for s > 0") {
  const int d = 64;
  // Q_1(t) = (t/2) log((t+1)/(t-1)) - 1.
  for (const char* t : {"1.5", "2", "7"}) {
    BigReal tv = BigReal::parse(t, d);
    BigReal closed = tv * legendre_q0_closed(tv) - BigReal(1L, d);
    CHECK(close(legendre_q(BigReal(1L, d), tv, d), closed, d - 4));
  }
  BigReal a = legendre_q(BigReal(0.5, d), BigReal(2L, d), d);
  BigReal b = legendre_q(BigReal(0.5, 2 * d), BigReal(2L, 2 * d), 2 * d);
  CHECK(close(a, b.with_digits(d), d - 4));
}

TEST_CASE("green function") {
  const int d = 64;
  auto z0 = pt("0", "1", d), z1 = pt("0", "2", d);
  BigReal nine_half_log = log(BigReal(9L, d)) / BigReal(2L, d);
  CHECK(close(green_ms(BigReal(d), z0, z1, d), nine_half_log, d - 4));
  CHECK_THROWS_AS(green_ms(BigReal(d), z0, z0, d), std::domain_error);

  auto a = pt("0.3", "0.7", d), b = pt("-1.2", "2.5", d);
  BigReal base = green_ms(BigReal(d), a, b, d);
  CHECK(close(base, green_ms(BigReal(d), b, a, d), d - 4));
  BigReal c = BigReal::parse("3.75", d);
  CHECK(close(base, green_ms(BigReal(d), {a.x + c, a.y}, {b.x + c, b.y}, d), d - 4));
  BigReal lam = BigReal::parse("0.37", d);
  CHECK(close(base, green_ms(BigReal(d), {a.x * lam, a.y * lam}, {b.x * lam, b.y * lam}, d), d - 4));
  CHECK(close(green_ms(BigReal(0.5, d), a, b, d), green_ms(BigReal(0.5, d), b, a, d), d - 4));
}

TEST_CASE("adjunction limit") {
  const int d = 64;
  auto z0 = pt("0", "1", d);
  auto r = adjunction_limit(z0, pt("0.1", "1", d), d);
  BigReal expected = log(BigReal::parse("1.0025", d)) / BigReal(2L, d);
  CHECK(close(r.simplified, expected, d - 4));
  CHECK(close(r.composite, expected, d - 6));
  CHECK(close(r.simplified, BigReal::parse("0.00124844", d), 8));

  // Vertical displacement: direct substitution.
  BigReal y = BigReal::parse("1.7", d), eps = BigReal::parse("0.03", d);
  auto v = adjunction_limit({BigReal(d), y}, {BigReal(d), y + eps}, d);
  BigReal one(1L, d), two(2L, d), four(4L, d);
  BigReal direct = log(one + eps * eps / (four * y * (y + eps))) / two - log(one + eps / y) / two;
  CHECK(close(v.simplified, direct, d - 4));
  CHECK(close(v.composite, direct, d - 6));

  // Approach along 8 rays: |value| / |z1 - z0| stays bounded.
  for (int k = 0; k < 8; ++k) {
    double phi = k * M_PI / 4;
    BigReal bound(d);
    for (int e = 3; e <= 9; e += 3) {
      BigReal rad = ten_to_minus(e, d);
      UpperHalfPoint z1{z0.x + rad * cos(BigReal(phi, d)), z0.y + rad * sin(BigReal(phi, d))};
      auto rep = adjunction_limit(z0, z1, d);
      CHECK(close(rep.composite, rep.simplified, d - 8));
      BigReal ratio = abs(rep.simplified) / rad;
      CHECK(ratio < BigReal(1L, d));
    }
  }
}

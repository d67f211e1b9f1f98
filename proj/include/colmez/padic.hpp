#pragma once

#include <climits>
#include <cstdint>
#include <string>

#include "colmez/bigreal.hpp"

namespace colmez {

inline constexpr int kInfiniteValuation = INT_MAX;

// p-adic valuation of a rational; kInfiniteValuation for zero.
int vp(const Rational& x, std::uint64_t p);

// Hilbert symbol (a, b)_p of nonzero rationals, p prime (p = 2 included).
int hilbert_symbol(const Rational& a, const Rational& b, std::uint64_t p);

enum class Ram { inert, ramified, split };
std::string ram_name(Ram r);

// Element x + y*w of a quadratic etale algebra over Q_p, coordinates exact.
struct LocalElement {
  Rational x = 0;
  Rational y = 0;
};

// O_E = Z_p[w] with w^2 = T*w - M0, so N(x + y w) = x^2 + T x y + M0 y^2.
// inert:    p odd w = sqrt(nu), nu the least non-residue; p = 2 w^2 = -w - 1.
// ramified: p odd w = sqrt(p) (v_D = 1); p = 2 w = sqrt(-1) (v_D = 2) or sqrt(2) (v_D = 3).
// split:    w idempotent, N = x (x + y); the two coordinates are (x + y, x).
struct QuadModel {
  std::uint64_t p = 0;
  Ram ram = Ram::inert;
  int v_D = 0;
  Rational T = 0;
  Rational M0 = 0;

  static QuadModel make(std::uint64_t p, Ram ram, int v_D);

  Rational norm(const LocalElement& e) const;
  Rational trace(const LocalElement& e) const;
  LocalElement conj(const LocalElement& e) const;
  LocalElement mul(const LocalElement& a, const LocalElement& b) const;
  bool integral(const LocalElement& e) const;
  // Membership in the inverse different, i.e. e * (w - conj w) integral.
  bool in_inverse_different(const LocalElement& e) const;
  Rational disc() const { return T * T - 4 * M0; }
  bool is_norm(const Rational& a) const;
  // Split model: element with coordinates (a, d).
  LocalElement split_element(const Rational& a, const Rational& d) const;
};

// Volume, with vol(O_E) = 1, of {t in t0 + p^e O_E : v(c N(t) - a) >= target}.
// Depth-first over residues of t mod p^k, pruning classes that already fail
// and closing a class once every lift is known to satisfy the condition.
Rational count_norm_condition(const QuadModel& m, const Rational& c, const Rational& a,
                              int target, const LocalElement& t0, int e);

// A value of valuation val not of the form c*N(t). Throws std::domain_error
// when every element of that valuation is represented (wrong parity when
// inert, split algebra).
Rational nonrepresented_value(const QuadModel& m, const Rational& c, int val);

}  // namespace colmez

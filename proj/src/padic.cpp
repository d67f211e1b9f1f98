#include "colmez/padic.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace colmez {

namespace {

using i128 = __int128;

Rational pow_p(std::uint64_t p, int e) {
  mpz_class b;
  mpz_ui_pow_ui(b.get_mpz_t(), p, static_cast<unsigned long>(e < 0 ? -e : e));
  Rational r = e < 0 ? Rational(1, 1) / Rational(b) : Rational(b);
  r.canonicalize();
  return r;
}

int vp_int(mpz_class n, std::uint64_t p) {
  int v = 0;
  mpz_class pp(static_cast<unsigned long>(p));
  while (n != 0 && mpz_divisible_p(n.get_mpz_t(), pp.get_mpz_t())) {
    n /= pp;
    ++v;
  }
  return v;
}

// x = p^v * u with u a p-adic unit; returns v and u mod p^k as an integer.
std::pair<int, long> unit_residue(const Rational& x, std::uint64_t p, unsigned long modulus) {
  int v = vp(x, p);
  Rational u = x / pow_p(p, v);
  mpz_class num = u.get_num(), den = u.get_den();
  mpz_class mod(modulus), inv;
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t()) == 0)
    throw std::logic_error("unit_residue: denominator not invertible");
  mpz_class r = num * inv;
  mpz_mod(r.get_mpz_t(), r.get_mpz_t(), mod.get_mpz_t());
  return {v, r.get_si()};
}

int legendre(long a, std::uint64_t p) {
  mpz_class A(a), P(static_cast<unsigned long>(p));
  return mpz_legendre(A.get_mpz_t(), P.get_mpz_t());
}

i128 mulmod(i128 a, i128 b, i128 m) { return (a % m) * (b % m) % m; }

i128 modp(i128 a, i128 m) {
  a %= m;
  return a < 0 ? a + m : a;
}

struct Counter {
  std::uint64_t p;
  int K;
  i128 P;
  i128 k0, kx, ky, q, T, M0;
  std::vector<i128> pk;

  i128 value(i128 sx, i128 sy) const {
    i128 v = k0 + mulmod(kx, sx, P) + mulmod(ky, sy, P);
    i128 quad = mulmod(sx, sx, P) + mulmod(mulmod(T, sx, P), sy, P) + mulmod(mulmod(M0, sy, P), sy, P);
    return modp(v + mulmod(q, quad, P), P);
  }

  bool lifts_constant(int k, i128 sx, i128 sy) const {
    if (k >= K) return true;
    i128 lx = modp(kx + mulmod(q, 2 * sx + mulmod(T, sy, P), P), P);
    i128 ly = modp(ky + mulmod(q, mulmod(T, sx, P) + 2 * mulmod(M0, sy, P), P), P);
    if (mulmod(pk[k], lx, P) != 0 || mulmod(pk[k], ly, P) != 0) return false;
    if (2 * k >= K) return true;
    i128 qq = mulmod(pk[2 * k], q, P);
    return qq == 0 && mulmod(qq, T, P) == 0 && mulmod(qq, M0, P) == 0;
  }

  // Number of classes mod p^K below this node that satisfy the condition.
  i128 run(int k, i128 sx, i128 sy) const {
    i128 g = value(sx, sy);
    if (lifts_constant(k, sx, sy)) return g == 0 ? pk[2 * (K - k)] : 0;
    if (g % pk[k] != 0) return 0;
    i128 total = 0;
    for (std::uint64_t dx = 0; dx < p; ++dx)
      for (std::uint64_t dy = 0; dy < p; ++dy)
        total += run(k + 1, sx + static_cast<i128>(dx) * pk[k], sy + static_cast<i128>(dy) * pk[k]);
    return total;
  }
};

Rational from_i128(i128 v) {
  mpz_class hi(static_cast<unsigned long>(static_cast<unsigned __int128>(v) >> 64));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(v)));
  mpz_class r = (hi << 64) + lo;
  return Rational(r);
}

}  // namespace

int vp(const Rational& x, std::uint64_t p) {
  if (x == 0) return kInfiniteValuation;
  return vp_int(x.get_num(), p) - vp_int(x.get_den(), p);
}

int hilbert_symbol(const Rational& a, const Rational& b, std::uint64_t p) {
  if (a == 0 || b == 0) throw std::domain_error("hilbert_symbol: zero argument");
  if (p == 2) {
    auto [al, u] = unit_residue(a, 2, 8);
    auto [be, w] = unit_residue(b, 2, 8);
    auto eps = [](long t) { return ((t - 1) / 2) % 2; };
    auto omg = [](long t) { return ((t * t - 1) / 8) % 2; };
    long e = eps(u) * eps(w) + al * omg(w) + be * omg(u);
    return (e % 2 == 0) ? 1 : -1;
  }
  auto [al, u] = unit_residue(a, p, static_cast<unsigned long>(p));
  auto [be, w] = unit_residue(b, p, static_cast<unsigned long>(p));
  long sign_exp = static_cast<long>(al) * be * static_cast<long>((p - 1) / 2);
  int s = (sign_exp % 2 == 0) ? 1 : -1;
  if (be % 2 != 0) s *= legendre(u, p);
  if (al % 2 != 0) s *= legendre(w, p);
  return s;
}

std::string ram_name(Ram r) {
  switch (r) {
    case Ram::inert: return "inert";
    case Ram::ramified: return "ramified";
    case Ram::split: return "split";
  }
  return "?";
}

QuadModel QuadModel::make(std::uint64_t p, Ram ram, int v_D) {
  QuadModel m;
  m.p = p;
  m.ram = ram;
  m.v_D = v_D;
  switch (ram) {
    case Ram::inert:
      if (v_D != 0) throw std::domain_error("inert model requires v_D = 0");
      if (p == 2) {
        m.T = -1;
        m.M0 = 1;
      } else {
        long nu = 2;
        while (legendre(nu, p) != -1) ++nu;
        m.T = 0;
        m.M0 = -nu;
      }
      break;
    case Ram::ramified:
      if (p != 2) {
        if (v_D != 1) throw std::domain_error("ramified model at odd p has v_D = 1");
        m.T = 0;
        m.M0 = -static_cast<long>(p);
      } else if (v_D == 2) {
        m.T = 0;
        m.M0 = 1;
      } else if (v_D == 3) {
        m.T = 0;
        m.M0 = -2;
      } else {
        throw std::domain_error("ramified model at p = 2 has v_D in {2, 3}");
      }
      break;
    case Ram::split:
      if (v_D != 0) throw std::domain_error("split model requires v_D = 0");
      m.T = 1;
      m.M0 = 0;
      break;
  }
  return m;
}

Rational QuadModel::norm(const LocalElement& e) const {
  Rational r = e.x * e.x + T * e.x * e.y + M0 * e.y * e.y;
  r.canonicalize();
  return r;
}

Rational QuadModel::trace(const LocalElement& e) const {
  Rational r = 2 * e.x + T * e.y;
  r.canonicalize();
  return r;
}

LocalElement QuadModel::conj(const LocalElement& e) const {
  // conj(w) = T - w.
  LocalElement c{e.x + T * e.y, -e.y};
  c.x.canonicalize();
  c.y.canonicalize();
  return c;
}

LocalElement QuadModel::mul(const LocalElement& a, const LocalElement& b) const {
  // w^2 = T w - M0.
  Rational yy = a.y * b.y;
  LocalElement r{a.x * b.x - M0 * yy, a.x * b.y + a.y * b.x + T * yy};
  r.x.canonicalize();
  r.y.canonicalize();
  return r;
}

bool QuadModel::integral(const LocalElement& e) const { return vp(e.x, p) >= 0 && vp(e.y, p) >= 0; }

bool QuadModel::in_inverse_different(const LocalElement& e) const {
  LocalElement w{0, 1};
  LocalElement diff{-conj(w).x, 1 - conj(w).y};
  return integral(mul(e, diff));
}

bool QuadModel::is_norm(const Rational& a) const {
  if (a == 0) return true;
  if (ram == Ram::split) return true;
  return hilbert_symbol(a, disc(), p) == 1;
}

LocalElement QuadModel::split_element(const Rational& a, const Rational& d) const {
  if (ram != Ram::split) throw std::logic_error("split_element on a non-split model");
  LocalElement e{d, a - d};
  e.y.canonicalize();
  return e;
}

Rational count_norm_condition(const QuadModel& m, const Rational& c, const Rational& a, int target,
                              const LocalElement& t0, int e) {
  const std::uint64_t p = m.p;
  Rational pe = pow_p(p, e);
  Rational k0 = c * m.norm(t0) - a;
  Rational kx = c * pe * (2 * t0.x + m.T * t0.y);
  Rational ky = c * pe * (m.T * t0.x + 2 * m.M0 * t0.y);
  Rational q = c * pe * pe;
  Rational full_volume = pow_p(p, -2 * e);

  int mmin = kInfiniteValuation;
  for (const Rational* r : {&k0, &kx, &ky, &q}) mmin = std::min(mmin, vp(*r, p));
  if (q != 0) {
    if (m.T != 0) mmin = std::min(mmin, vp(q * m.T, p));
    if (m.M0 != 0) mmin = std::min(mmin, vp(q * m.M0, p));
  }
  if (mmin == kInfiniteValuation) return full_volume;
  int K = target - mmin;
  if (K <= 0) return full_volume;
  if (K * std::log2(static_cast<double>(p)) > 62)
    throw std::domain_error("count_norm_condition: modulus p^" + std::to_string(K) + " too large");

  Counter ctr;
  ctr.p = p;
  ctr.K = K;
  ctr.pk.assign(2 * K + 1, 1);
  for (int i = 1; i <= 2 * K; ++i) ctr.pk[i] = ctr.pk[i - 1] * static_cast<i128>(p);
  ctr.P = ctr.pk[K];
  mpz_class Pz = from_i128(ctr.P).get_num();
  auto reduce = [&](const Rational& r) -> i128 {
    if (r == 0) return 0;
    Rational s = r / pow_p(p, mmin);
    mpz_class num = s.get_num(), den = s.get_den(), inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), Pz.get_mpz_t()) == 0)
      throw std::logic_error("count_norm_condition: non-integral coefficient");
    mpz_class v = num * inv;
    mpz_mod(v.get_mpz_t(), v.get_mpz_t(), Pz.get_mpz_t());
    mpz_class hi = v >> 64, lo = v - (hi << 64);
    return (static_cast<i128>(mpz_get_ui(hi.get_mpz_t())) << 64) + static_cast<i128>(mpz_get_ui(lo.get_mpz_t()));
  };
  ctr.k0 = reduce(k0);
  ctr.kx = reduce(kx);
  ctr.ky = reduce(ky);
  ctr.q = reduce(q);
  auto reduce_int = [&](const Rational& r) -> i128 {
    mpz_class num = r.get_num(), den = r.get_den(), inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), Pz.get_mpz_t());
    mpz_class v = num * inv;
    mpz_mod(v.get_mpz_t(), v.get_mpz_t(), Pz.get_mpz_t());
    return static_cast<i128>(mpz_get_ui(v.get_mpz_t()));
  };
  ctr.T = reduce_int(m.T);
  ctr.M0 = reduce_int(m.M0);

  i128 count = ctr.run(0, 0, 0);
  Rational vol = from_i128(count) / Rational(from_i128(ctr.pk[2 * K])) * full_volume;
  vol.canonicalize();
  return vol;
}

Rational nonrepresented_value(const QuadModel& m, const Rational& c, int val) {
  if (m.ram == Ram::split) throw std::domain_error("split algebra: every value is a norm");
  int shift = val - vp(c, m.p);
  if (m.ram == Ram::inert && shift % 2 == 0)
    throw std::domain_error("inert: valuation " + std::to_string(val) +
                            " has the parity of represented values");
  Rational base = c * pow_p(m.p, shift);
  for (long u = 1; u < 64; ++u) {
    for (long s : {u, -u}) {
      if (s % static_cast<long>(m.p) == 0) continue;
      Rational a = base * s;
      a.canonicalize();
      if (!m.is_norm(a / c)) return a;
    }
  }
  throw std::logic_error("nonrepresented_value: no candidate found");
}

}  // namespace colmez

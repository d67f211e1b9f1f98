#include "colmez/localkernel.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "colmez/multiplicity.hpp"

namespace colmez {

namespace {

Rational npow(std::uint64_t N, int e) {
  mpz_class b;
  mpz_ui_pow_ui(b.get_mpz_t(), N, static_cast<unsigned long>(e < 0 ? -e : e));
  Rational r = e < 0 ? Rational(1) / Rational(b) : Rational(b);
  r.canonicalize();
  return r;
}

int ceil_half(int x) { return x >= 0 ? (x + 1) / 2 : -((-x) / 2); }

// vol{t in O_E : v(N t) >= L} with vol(O_E) = 1.
Rational norm_ball_volume(Ram ram, std::uint64_t N, int L) {
  if (L <= 0) return 1;
  switch (ram) {
    case Ram::inert: return npow(N, -2 * ceil_half(L));
    case Ram::ramified: return npow(N, -L);
    case Ram::split: return npow(N, -L) * (1 + (1 - Rational(1, N)) * L);
  }
  return 0;
}

// Sum_{n < n0} head[n] X^n + Sum_{n >= n0} X^n (lin_a + lin_b n + alt (-1)^{n - n0}).
struct SeriesTerms {
  std::vector<Rational> head;
  Rational lin_a = 0, lin_b = 0, alt = 0;
};

RationalFunctionX series_rf(const SeriesTerms& s, std::uint64_t N) {
  const std::size_t n0 = s.head.size();
  RationalFunctionX f = RationalFunctionX::polynomial(Polynomial(s.head), N);
  Polynomial xn0 = Polynomial::monomial(1, n0);
  Polynomial one_minus_x{1, -1};
  if (s.lin_a != 0) f += RationalFunctionX(xn0 * s.lin_a, one_minus_x, N);
  if (s.lin_b != 0) {
    Polynomial top = xn0 * (Polynomial{Rational(static_cast<long>(n0)), Rational(1 - static_cast<long>(n0))});
    f += RationalFunctionX(top * s.lin_b, one_minus_x * one_minus_x, N);
  }
  if (s.alt != 0) f += RationalFunctionX(xn0 * s.alt, Polynomial{1, 1}, N);
  return f;
}

Rational split_coordinate_volume(std::uint64_t p, const Rational& Q, int e, int L) {
  // vol{(z1, z2) in (p^e Z_p)^2 : v(z1 z2) >= L, v(Q - z1 z2) = 0}, vol(Z_p^2) = 1.
  Rational Qs = Q * npow(p, -2 * e);
  int need = -2 * e;
  if (Qs != 0 && vp(Qs, p) < 0) return 0;
  int M = std::max({L - 2 * e, need + 1, 1});
  long mod = 1;
  for (int i = 0; i < M; ++i) mod *= static_cast<long>(p);
  long qres = 0;
  if (Qs != 0) {
    mpz_class num = Qs.get_num(), den = Qs.get_den(), inv, md(mod);
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), md.get_mpz_t());
    mpz_class r = num * inv;
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), md.get_mpz_t());
    qres = r.get_si();
  }
  auto val = [&](long x) {
    if (x % mod == 0) return M;
    int v = 0;
    while (x % static_cast<long>(p) == 0) {
      x /= static_cast<long>(p);
      ++v;
    }
    return v;
  };
  long count = 0;
  for (long a = 0; a < mod; ++a) {
    for (long b = 0; b < mod; ++b) {
      long prod = static_cast<long>((static_cast<__int128>(a) * b) % mod);
      if (val(prod) < L - 2 * e) continue;
      long diff = ((qres - prod) % mod + mod) % mod;
      if (val(diff) != need) continue;
      ++count;
    }
  }
  Rational vol = Rational(count) / (Rational(mod) * Rational(mod)) * npow(p, -2 * e);
  vol.canonicalize();
  return vol;
}

std::pair<Rational, Rational> split_coords(const LocalElement& y) {
  Rational a = y.x + y.y;
  a.canonicalize();
  return {a, y.x};
}

bool split_integral(const LocalElement& y, std::uint64_t p, int shift) {
  auto [a, d] = split_coords(y);
  return (a == 0 || vp(a, p) >= shift) && (d == 0 || vp(d, p) >= shift);
}

// One of the two pieces of the s2 function: level 0 is 1_{GL2(O)}, level 1
// is 1 of {g : p g integral, v(det p g) = 2}.
SeriesTerms s2_piece_terms(const LocalFieldData& f, const LocalElement& y, int level) {
  SeriesTerms s;
  const QuadModel m = f.model();
  Rational Q = m.norm(y);
  int e = -level;
  if (!split_integral(y, f.p, e)) {
    s.head = {0};
    return s;
  }
  for (int n = 0; n < 2; ++n) s.head.push_back(npow(f.N, n) * split_coordinate_volume(f.p, Q, e, n));
  if (Q != 0 && vp(Q, f.p) == 0) {
    // N^n vol = 1 + (1 - 1/N)(n + 2 level) once v(z1 z2) >= 1.
    s.lin_b = 1 - Rational(1, f.N);
    s.lin_a = 1 + s.lin_b * (2 * level);
  }
  return s;
}

LocalElement neg(const LocalElement& y) {
  LocalElement r{-y.x, -y.y};
  return r;
}

// Nonzero terms N^n I_n / |D|^{1/2} for x2 ranging over -y1 + O_E (ramified,
// y1 off the lattice) with D_n(a) cut out by v(q(j) N(t) - a) >= n - v_d.
std::vector<Rational> off_lattice_terms(const LocalFieldData& f, const LocalElement& y1, const Rational& a,
                                        int n_max) {
  std::vector<Rational> terms;
  const QuadModel m = f.model();
  if (!m.in_inverse_different(y1)) return terms;
  for (int n = 0; n <= n_max; ++n) {
    Rational v = count_norm_condition(m, f.q_j(), a, n - f.v_d, neg(y1), 0);
    terms.push_back(npow(f.N, n) * f.abs_dqj() * v);
  }
  return terms;
}

void require_point_model(const LocalFieldData& f) {
  if (f.N != f.p) throw std::domain_error("explicit local points need residue field F_p (N = p)");
}

}  // namespace

LocalFieldData LocalFieldData::make(std::uint64_t p, Ram ram, int v_d, int v_D, int v_qj) {
  LocalFieldData f;
  f.p = p;
  f.N = p;
  f.ram = ram;
  f.v_d = v_d;
  f.v_D = v_D;
  f.v_qj = v_qj;
  f.b_ram = v_qj == 1;
  f.validate();
  return f;
}

void LocalFieldData::validate() const {
  if (p < 2) throw std::domain_error("residue characteristic must be a prime");
  for (std::uint64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) throw std::domain_error("residue characteristic " + std::to_string(p) + " is not prime");
  std::uint64_t t = N;
  while (t > 1 && t % p == 0) t /= p;
  if (N < p || t != 1) throw std::domain_error("N must be a power of p");
  if (v_d < 0) throw std::domain_error("v_d must be >= 0");
  if (v_qj != 0 && v_qj != 1) throw std::domain_error("v_qj must be 0 or 1");
  if (b_ram != (v_qj == 1)) throw std::domain_error("v_qj = 1 exactly when B_v is nonsplit");
  switch (ram) {
    case Ram::inert:
      if (v_D != 0) throw std::domain_error("inert requires v_D = 0");
      break;
    case Ram::ramified:
      if (v_D < 1) throw std::domain_error("ramified requires v_D >= 1");
      if (v_D >= 2 && p != 2) throw std::domain_error("v_D >= 2 only when p = 2");
      if (v_qj != 0) throw std::domain_error("nonsplit B_v only with E_v inert");
      break;
    case Ram::split:
      if (v_D != 0 || v_qj != 0) throw std::domain_error("split requires v_D = 0 and v_qj = 0");
      break;
  }
}

std::string LocalFieldData::str() const {
  std::ostringstream os;
  os << ram_name(ram) << " N=" << N << " v_d=" << v_d << " v_D=" << v_D << " v_qj=" << v_qj;
  if (b_ram) os << " (B nonsplit)";
  return os.str();
}

QuadModel LocalFieldData::model() const {
  require_point_model(*this);
  return QuadModel::make(p, ram, v_D);
}

Rational LocalFieldData::q_j() const { return b_ram ? Rational(-static_cast<long>(p)) : Rational(-1); }

Rational LocalFieldData::abs_dqj() const { return npow(N, -(v_d + v_qj)); }

LogLinearValue LocalFieldData::log_N(const Rational& coefficient) const {
  return LogLinearValue::log_term(N, coefficient);
}

std::string case_name(SchwartzCase c) {
  switch (c) {
    case SchwartzCase::standard: return "standard";
    case SchwartzCase::unit: return "unit";
    case SchwartzCase::s2: return "s2";
  }
  return "?";
}

SchwartzCase default_case(const LocalFieldData& f) {
  return f.b_ram ? SchwartzCase::unit : SchwartzCase::standard;
}

void validate_case(const LocalFieldData& f, SchwartzCase c) {
  if (c == SchwartzCase::s2 && (f.ram != Ram::split || f.v_d != 0))
    throw std::domain_error("s2 needs E_v split and v_d = 0");
  if (c == SchwartzCase::unit && !f.b_ram) throw std::domain_error("unit case needs B_v nonsplit");
  if (c == SchwartzCase::standard && f.b_ram) throw std::domain_error("nonsplit B_v uses the unit case");
}

Y1Class classify_y1(const LocalFieldData& f, const LocalElement& y1) {
  const QuadModel m = f.model();
  if (m.integral(y1)) {
    Rational n = m.norm(y1);
    return (n != 0 && vp(n, f.p) == 0) ? Y1Class::unit : Y1Class::integral;
  }
  if (f.ram == Ram::ramified && m.in_inverse_different(y1)) return Y1Class::inverse_different;
  return Y1Class::outside;
}

bool realizable_vq_y2(const LocalFieldData& f, int vq_y2) {
  switch (f.ram) {
    case Ram::inert: return ((vq_y2 - f.v_qj) % 2 + 2) % 2 == 1;
    case Ram::ramified: return true;
    case Ram::split: return false;
  }
  return false;
}

Rational phi_on_E(const LocalFieldData& f, SchwartzCase c, const LocalElement& y, int u_val) {
  validate_case(f, c);
  if (u_val != 0) return 0;
  const QuadModel m = f.model();
  Rational n = m.norm(y);
  bool unit = m.integral(y) && n != 0 && vp(n, f.p) == 0;
  switch (c) {
    case SchwartzCase::standard: return m.integral(y) ? 1 : 0;
    case SchwartzCase::unit: return unit ? 1 : 0;
    case SchwartzCase::s2: {
      Rational r = unit ? 1 : 0;
      if (split_integral(y, f.p, -1) && n != 0 && vp(n, f.p) == 0) r -= Rational(1, 1 + f.N + f.N * f.N);
      r.canonicalize();
      return r;
    }
  }
  return 0;
}

std::optional<Rational> DnVolume::exact() const {
  if (v_D % 2 != 0) return std::nullopt;
  Rational r = over_sqrtD * npow(N, -v_D / 2);
  r.canonicalize();
  return r;
}

std::string DnVolume::str() const {
  const char* k = kind == Kind::empty ? "empty" : kind == Kind::full ? "full" : "window";
  std::string s = std::string(k) + " " + over_sqrtD.get_str();
  if (v_D != 0) s += " * |D|^(1/2)";
  return s;
}

DnVolume volume_Dn(const LocalFieldData& f, int n, int a_val) {
  f.validate();
  if (f.ram == Ram::split) throw std::domain_error("volume_Dn: unsupported for split E_v");
  DnVolume r;
  r.v_D = f.v_D;
  r.N = f.N;
  int ad = a_val + f.v_d;
  if (n <= ad) {
    r.kind = DnVolume::Kind::full;
    r.over_sqrtD = f.abs_dqj() * (f.ram == Ram::inert ? npow(f.N, -2 * ceil_half(n - f.v_d - f.v_qj))
                                                      : npow(f.N, -(n - f.v_d)));
  } else if (f.ram == Ram::ramified && n <= ad + f.v_D - 1) {
    r.kind = DnVolume::Kind::window;
    r.over_sqrtD = npow(f.N, -f.v_d) * npow(f.N, -a_val) * npow(f.N, ad - n);
  } else {
    r.kind = DnVolume::Kind::empty;
  }
  r.over_sqrtD.canonicalize();
  return r;
}

DnVolume volume_Dn_oracle(const LocalFieldData& f, int n, const Rational& a, int k) {
  f.validate();
  if (f.ram == Ram::split) throw std::domain_error("volume_Dn_oracle: unsupported for split E_v");
  int need = n + f.v_d + f.v_D + 2;
  if (k < need) throw std::domain_error("volume_Dn_oracle: precision k = " + std::to_string(k) +
                                        " too small, need k >= " + std::to_string(need));
  const QuadModel m = f.model();
  // Every solution has v(N t) >= -v_d - v_D + 1; the extra precision widens the box.
  auto radius = [&](int kk) { return (f.v_d + f.v_D + 1) / 2 + (kk - need); };
  auto at = [&](int kk) -> Rational {
    return count_norm_condition(m, f.q_j(), a, n - f.v_d, LocalElement{}, -radius(kk)) * f.abs_dqj();
  };
  Rational v = at(k);
  if (at(k + 1) != v)
    throw std::domain_error("volume_Dn_oracle: count not stable at k = " + std::to_string(k) + ", need k >= " +
                            std::to_string(k + 1));
  DnVolume r;
  r.v_D = f.v_D;
  r.N = f.N;
  r.over_sqrtD = v;
  if (v == 0) {
    r.kind = DnVolume::Kind::empty;
  } else {
    Rational full = count_norm_condition(m, f.q_j(), 0, n - f.v_d, LocalElement{}, -radius(k)) * f.abs_dqj();
    r.kind = v == full ? DnVolume::Kind::full : DnVolume::Kind::window;
  }
  return r;
}

RationalFunctionX whittaker_rf(const LocalFieldData& f, SchwartzCase c, const LocalPoint& pt) {
  f.validate();
  validate_case(f, c);
  const std::uint64_t N = f.N;
  const QuadModel m = f.model();
  const RationalFunctionX zero = RationalFunctionX::constant(0, N);
  const Polynomial one_minus_x{1, -1};

  if (pt.vq_y2) {
    if (f.ram == Ram::split) throw std::domain_error("whittaker_rf: split E_v has no y2 component");
    if (pt.u_val != 0) return zero;
    int a_val = *pt.vq_y2 + pt.u_val;
    std::vector<Rational> terms;
    Rational P;
    if (f.ram == Ram::inert) {
      P = Rational(N, N + 1);
      Rational phi1 = phi_on_E(f, c, pt.y1, 0);
      for (int n = 0; n <= a_val + f.v_d; ++n)
        terms.push_back(phi1 * npow(N, n) * f.abs_dqj() *
                        norm_ball_volume(Ram::inert, N, n - f.v_d - f.v_qj));
    } else {
      P = Rational(1, 2);
      if (m.integral(pt.y1)) {
        for (int n = 0; n <= a_val + f.v_d; ++n)
          terms.push_back(npow(N, n) * f.abs_dqj() * norm_ball_volume(Ram::ramified, N, n - f.v_d));
        for (int n = std::max(0, a_val + f.v_d + 1); n <= a_val + f.v_d + f.v_D - 1; ++n) {
          while (static_cast<int>(terms.size()) < n) terms.push_back(0);
          // The window volume lies on v(N t) = v(a), inside O_E iff v(a) >= 0.
          DnVolume w = volume_Dn(f, n, a_val);
          terms.push_back(a_val >= 0 ? npow(N, n) * w.over_sqrtD : Rational(0));
        }
      } else {
        Rational a = nonrepresented_value(m, f.q_j(), a_val);
        terms = off_lattice_terms(f, pt.y1, a, a_val + f.v_d + f.v_D - 1);
      }
    }
    if (terms.empty()) return zero;
    return RationalFunctionX(Polynomial(terms) * one_minus_x * P, Polynomial{1}, N);
  }

  // Constant-term series, y in E_v.
  if (pt.u_val != 0) return zero;
  Rational phi = phi_on_E(f, c, pt.y1, 0);
  SeriesTerms s;
  RationalFunctionX R = RationalFunctionX::constant(1, N);
  switch (f.ram) {
    case Ram::inert: {
      R = RationalFunctionX(Polynomial{1, 1}, Polynomial{1, Rational(1, N)}, N);
      int K = f.v_d + f.v_qj;
      for (int n = 0; n < K; ++n) s.head.push_back(phi * npow(N, n - K));
      s.lin_a = phi * (1 + Rational(1, N)) / 2;
      s.alt = phi * (1 - Rational(1, N)) / 2;
      break;
    }
    case Ram::ramified: {
      if (m.integral(pt.y1)) {
        for (int n = 0; n < f.v_d; ++n) s.head.push_back(npow(N, n - f.v_d));
        s.lin_a = 1;
      } else {
        s.head = off_lattice_terms(f, pt.y1, 0, f.v_d);
      }
      break;
    }
    case Ram::split: {
      R = RationalFunctionX(one_minus_x, Polynomial{1, -Rational(1, N)}, N);
      if (c == SchwartzCase::s2) {
        SeriesTerms s1 = s2_piece_terms(f, pt.y1, 0), s2 = s2_piece_terms(f, pt.y1, 1);
        Rational w = Rational(1, 1 + N + N * N);
        RationalFunctionX series = series_rf(s1, N);
        RationalFunctionX second = series_rf(s2, N);
        second *= -w;
        series += second;
        return R * RationalFunctionX::polynomial(one_minus_x, N) * series;
      }
      if (split_integral(pt.y1, f.p, 0)) {
        for (int n = 0; n < f.v_d; ++n) s.head.push_back(npow(N, n - f.v_d));
        s.lin_b = 1 - Rational(1, N);
        s.lin_a = 1 - s.lin_b * f.v_d;
      }
      break;
    }
  }
  return R * RationalFunctionX::polynomial(one_minus_x, N) * series_rf(s, N);
}

LogLinearValue inert_k_closed_form(std::uint64_t N, int v_d, int v_qj, int a_val) {
  Rational Ni = Rational(1, N);
  Rational pref = 1 / (1 + Ni);
  Rational dq = npow(N, -(v_d + v_qj));
  Rational bracket;
  if (a_val >= v_qj - 1) {
    bracket = (dq - 1) / Rational(1 - static_cast<long>(N)) + Rational(a_val - v_qj + 1, 2) * (1 + Ni);
  } else if (a_val >= -v_d) {
    bracket = (npow(N, a_val - v_qj + 1) - npow(N, -(v_d + v_qj))) / Rational(static_cast<long>(N) - 1);
  } else {
    return LogLinearValue();
  }
  Rational coef = pref * bracket;
  coef.canonicalize();
  return LogLinearValue::log_term(N, coef);
}

LogLinearValue ramified_k_closed_form(std::uint64_t N, int v_d, int v_D, int a_val) {
  Rational d = npow(N, -v_d);
  Rational coef;
  if (a_val >= 0) {
    coef = (d - 1) / Rational(2 * (1 - static_cast<long>(N))) + Rational(a_val + 1, 2) + Rational(v_D - 1, 2);
  } else if (a_val >= -v_d) {
    coef = (npow(N, a_val + 1) - d) / Rational(2 * (static_cast<long>(N) - 1));
  } else {
    return LogLinearValue();
  }
  coef.canonicalize();
  return LogLinearValue::log_term(N, coef);
}

LogLinearValue k_derivative(const LocalFieldData& f, const LocalPoint& pt) {
  f.validate();
  if (f.ram == Ram::split) throw std::domain_error("k_derivative: unsupported for split E_v");
  if (!pt.vq_y2) throw std::domain_error("k_derivative: needs y2 != 0");
  if (pt.u_val != 0) return LogLinearValue();
  int a_val = *pt.vq_y2;
  SchwartzCase c = default_case(f);
  if (f.ram == Ram::inert) return inert_k_closed_form(f.N, f.v_d, f.v_qj, a_val) * phi_on_E(f, c, pt.y1, 0);
  const QuadModel m = f.model();
  if (m.integral(pt.y1)) return ramified_k_closed_form(f.N, f.v_d, f.v_D, a_val);
  int v0 = vp(m.norm(pt.y1), f.p);
  if (a_val <= v0)
    throw std::domain_error("k_derivative: off-lattice closed form needs v(q(y2)) > v(q(y1)) = " +
                            std::to_string(v0));
  return alpha_v(f, pt.y1, 0) * Rational(1, 2);
}

LogLinearValue alpha_v(const LocalFieldData& f, const LocalElement& y1, int u_val) {
  f.validate();
  if (f.ram != Ram::ramified) throw std::domain_error("alpha_v: E_v must be ramified");
  const QuadModel m = f.model();
  if (u_val != 0 || m.integral(y1)) return LogLinearValue();
  Rational sum = 0;
  for (const Rational& t : off_lattice_terms(f, y1, 0, f.v_d)) sum += t;
  sum.canonicalize();
  return f.log_N(sum);
}

LogLinearValue c_derivative(const LocalFieldData& f, SchwartzCase c, const LocalElement& y, int u_val) {
  f.validate();
  validate_case(f, c);
  const long N = static_cast<long>(f.N);
  Rational phi = phi_on_E(f, c, y, u_val);
  Rational dq = f.abs_dqj();
  switch (f.ram) {
    case Ram::inert: {
      Rational br = -(f.v_d + f.v_qj) + 2 * (dq - 1) / ((1 + Rational(1, N)) * (1 - N));
      return f.log_N(phi * br);
    }
    case Ram::ramified: {
      Rational br = -f.v_d + (dq - 1) / Rational(1 - N);
      return f.log_N(phi * br) + alpha_v(f, y, u_val);
    }
    case Ram::split:
      if (c == SchwartzCase::s2) return LogLinearValue();
      return f.log_N(-phi * f.v_d);
  }
  return LogLinearValue();
}

LogLinearValue k_minus_m_on_E(const LocalFieldData& f, SchwartzCase c, const LocalElement& y, int u_val) {
  f.validate();
  validate_case(f, c);
  const long N = static_cast<long>(f.N);
  Rational phi = phi_on_E(f, c, y, u_val);
  Rational dq = f.abs_dqj();
  switch (f.ram) {
    case Ram::inert: return f.log_N(phi * (dq - 1) / ((1 + Rational(1, N)) * (1 - N)));
    case Ram::ramified:
      return f.log_N(phi * (dq - 1) / Rational(2 * (1 - N))) + alpha_v(f, y, u_val) * Rational(1, 2);
    case Ram::split: break;
  }
  throw std::domain_error("k_minus_m_on_E: split E_v has no y2 component");
}

LogLinearValue k_minus_m_on_E_series(const LocalFieldData& f, SchwartzCase c, const LocalElement& y,
                                     int u_val) {
  if (f.ram == Ram::split) throw std::domain_error("k_minus_m_on_E_series: split E_v has no y2 component");
  // Past these valuations both k and m are affine in v(q(y2)) with equal slope.
  int vq = f.ram == Ram::inert ? (f.v_qj == 0 ? 3 : 2) : 2;
  LocalPoint pt{y, vq, u_val};
  LogLinearValue k = rf_log_derivative(whittaker_rf(f, c, pt));
  return k - f.log_N(m_multiplicity(f, c, pt));
}

LogLinearValue d_combination(const LocalFieldData& f, SchwartzCase c, const LocalElement& y, int u_val) {
  const QuadModel m = f.model();
  Rational q = m.norm(y);
  if (q == 0) throw std::domain_error("d_combination: y must be invertible");
  Rational phi = phi_on_E(f, c, y, u_val);
  Rational n = n_multiplicity(f, c, y, u_val);
  int v = u_val + vp(q, f.p);
  return f.log_N(2 * n) - c_derivative(f, c, y, u_val) + f.log_N(-v * phi);
}

IdentityReport local_identity_check(const LocalFieldData& f, SchwartzCase c, const LocalElement& y, int u_val) {
  const QuadModel m = f.model();
  Rational q = m.norm(y);
  if (q == 0) throw std::domain_error("local_identity_check: y must be invertible");
  Rational phi = phi_on_E(f, c, y, u_val);
  int v = u_val + vp(q, f.p);
  IdentityReport r;
  r.rhs = f.log_N(phi * (f.v_d + f.v_qj));

  r.lhs = d_combination(f, c, y, u_val);
  Rational n_s = f.ram == Ram::split ? n_multiplicity_cosets(f, c, y, u_val) : n_multiplicity(f, c, y, u_val);
  LogLinearValue c_s = rf_log_derivative(whittaker_rf(f, c, LocalPoint{y, std::nullopt, u_val}));
  r.lhs_series = f.log_N(2 * n_s) - c_s + f.log_N(-v * phi);
  if (f.ram != Ram::split) {
    r.lhs += k_minus_m_on_E(f, c, y, u_val) * Rational(2);
    r.lhs_series += k_minus_m_on_E_series(f, c, y, u_val) * Rational(2);
  }
  r.pass = r.lhs == r.rhs && r.lhs_series == r.rhs;
  return r;
}

std::vector<LocalElement> sample_points(const LocalFieldData& f) {
  std::vector<LocalElement> pts;
  Rational p(static_cast<long>(f.p));
  if (f.ram == Ram::split) {
    const QuadModel m = f.model();
    for (int i = -2; i <= 2; ++i)
      for (int j = -2; j <= 2; ++j) pts.push_back(m.split_element(npow(f.p, i), npow(f.p, j)));
    return pts;
  }
  Rational ip = 1 / p;
  pts = {{1, 0}, {0, 1}, {1, 1}, {p, 0}, {0, p}, {p * p, 0}, {ip, 0}, {0, ip}, {ip, ip}, {ip * ip, 0}};
  return pts;
}

std::vector<IdentityCell> local_identity_grid() {
  std::vector<IdentityCell> cells;
  std::vector<LocalFieldData> fields;
  for (std::uint64_t p : {2, 3, 5, 7}) {
    for (int v_d = 0; v_d <= 2; ++v_d) {
      fields.push_back(LocalFieldData::make(p, Ram::inert, v_d, 0, 0));
      fields.push_back(LocalFieldData::make(p, Ram::inert, v_d, 0, 1));
      if (p == 2) {
        fields.push_back(LocalFieldData::make(p, Ram::ramified, v_d, 2, 0));
        fields.push_back(LocalFieldData::make(p, Ram::ramified, v_d, 3, 0));
      } else {
        fields.push_back(LocalFieldData::make(p, Ram::ramified, v_d, 1, 0));
      }
      fields.push_back(LocalFieldData::make(p, Ram::split, v_d, 0, 0));
    }
  }
  for (const auto& f : fields) {
    std::vector<SchwartzCase> cases{default_case(f)};
    if (f.ram == Ram::split && f.v_d == 0) cases.push_back(SchwartzCase::s2);
    for (SchwartzCase c : cases)
      for (const auto& y : sample_points(f))
        for (int u : {0, 1}) cells.push_back({f, c, y, u});
  }
  return cells;
}

}  // namespace colmez

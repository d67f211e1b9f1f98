#include "colmez/multiplicity.hpp"

#include <stdexcept>

namespace colmez {

namespace {

Rational npow(std::uint64_t N, int e) {
  mpz_class b;
  mpz_ui_pow_ui(b.get_mpz_t(), N, static_cast<unsigned long>(e < 0 ? -e : e));
  Rational r = e < 0 ? Rational(1) / Rational(b) : Rational(b);
  r.canonicalize();
  return r;
}

int vmin(std::initializer_list<Rational> xs, std::uint64_t p) {
  int v = kInfiniteValuation;
  for (const auto& x : xs) v = std::min(v, vp(x, p));
  return v;
}

// Schwartz function on a 2x2 matrix over Q_p (split B_v), u a unit.
Rational phi_matrix(const LocalFieldData& f, SchwartzCase c, const Rational g[2][2]) {
  int vent = vmin({g[0][0], g[0][1], g[1][0], g[1][1]}, f.p);
  Rational det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
  int vdet = vp(det, f.p);
  if (c == SchwartzCase::standard) return vent >= 0 ? 1 : 0;
  if (c != SchwartzCase::s2) throw std::domain_error("phi_matrix: B_v must be split");
  Rational r = (vent >= 0 && vdet == 0) ? 1 : 0;
  if (vent >= -1 && vdet == 0) r -= Rational(1, 1 + f.N + f.N * f.N);
  r.canonicalize();
  return r;
}

Rational half(int n) {
  Rational r(n, 2);
  r.canonicalize();
  return r;
}

}  // namespace

Rational m_multiplicity(const LocalFieldData& f, SchwartzCase c, const LocalPoint& pt) {
  f.validate();
  validate_case(f, c);
  if (f.ram == Ram::split) throw std::domain_error("m_multiplicity: split E_v is handled by n_multiplicity");
  if (!pt.vq_y2) throw std::domain_error("m_multiplicity: needs y2 != 0");
  if (pt.u_val != 0) return 0;
  int vq = *pt.vq_y2;
  Rational phi1 = phi_on_E(f, c, pt.y1, 0);
  if (phi1 == 0) return 0;
  if (f.b_ram) return vq >= 2 ? half(vq) : Rational(0);
  if (vq < 0) return 0;
  if (f.ram == Ram::inert) return half(vq + 1);
  return half(vq + f.v_D);
}

Rational n_multiplicity(const LocalFieldData& f, SchwartzCase c, const LocalElement& y, int u_val) {
  f.validate();
  validate_case(f, c);
  if (f.b_ram || c == SchwartzCase::s2) return 0;
  Rational q = f.model().norm(y);
  if (q == 0) throw std::domain_error("n_multiplicity: y must be invertible");
  Rational r = phi_on_E(f, c, y, u_val) * half(vp(q, f.p) + u_val);
  r.canonicalize();
  return r;
}

Rational n_multiplicity_cosets(const LocalFieldData& f, SchwartzCase c, const LocalElement& y, int u_val) {
  f.validate();
  validate_case(f, c);
  if (f.ram != Ram::split) throw std::domain_error("n_multiplicity_cosets: E_v must be split");
  if (u_val != 0) return 0;
  Rational ya = y.x + y.y, yd = y.x;
  ya.canonicalize();
  if (ya == 0 || yd == 0) throw std::domain_error("n_multiplicity_cosets: y must be invertible");
  Rational total = 0;
  for (int family = 0; family < 2; ++family) {
    const Rational& corner = family == 0 ? ya : yd;
    // Entries of y x beyond valuation -1 vanish from every case.
    int i_max = vp(corner, f.p) + 1;
    for (int i = 1; i <= i_max; ++i) {
      Rational b = npow(f.p, -i);
      Rational g[2][2] = {{ya, 0}, {0, yd}};
      if (family == 0) g[0][1] = ya * b;
      else g[1][0] = yd * b;
      Rational classes = npow(f.N, i) - npow(f.N, i - 1);
      total += classes * m_ordinary(-i, 0, f.N) * phi_matrix(f, c, g);
    }
  }
  total /= 2;
  total.canonicalize();
  return total;
}

Rational m_pair(const LocalFieldData& f, int b_lambda_val, int c) {
  if (c < 0) throw std::domain_error("m_pair: conductor must be >= 0");
  if (f.ram == Ram::split || f.b_ram) throw std::domain_error("m_pair: needs B_v split and E_v nonsplit");
  const long N = static_cast<long>(f.N);
  if (f.ram == Ram::inert) {
    if (c == 0) return half(b_lambda_val + 1);
    Rational r = npow(f.N, 1 - c) / Rational(N + 1);
    r.canonicalize();
    return r;
  }
  if (c == 0) return half(f.v_D + b_lambda_val);
  return npow(f.N, -c) / 2;
}

Rational m_cherednik(const LocalFieldData& f, const CherednikData& g) {
  if (!f.b_ram || f.ram != Ram::inert) throw std::domain_error("m_cherednik: needs B_v nonsplit and E_v inert");
  if (g.in_E) throw std::domain_error("m_cherednik: gamma in E^x is excluded");
  if (!g.in_support || !g.unit_product) return 0;
  return half(g.v_lambda);
}

Rational m_ordinary(int b_val, int r, std::uint64_t N) {
  if (b_val >= r) throw std::domain_error("m_ordinary: b_val >= r is the self-intersection regime, not defined");
  Rational m = Rational(1) / (npow(N, r - b_val - 1) * Rational(static_cast<long>(N) - 1));
  m.canonicalize();
  return m;
}

Rational ordinary_sum_check(int a_val, std::uint64_t N, int r) {
  Rational s = 0;
  for (int i = 1; i <= a_val; ++i) s += (npow(N, i) - npow(N, i - 1)) * m_ordinary(r - i, r, N);
  s.canonicalize();
  return s;
}

int lattice_conductor(const QuadModel& m, const Rational basis[2][2]) {
  // Multiplication by w in the basis 1, w.
  Rational W[2][2] = {{0, -m.M0}, {1, m.T}};
  Rational det = basis[0][0] * basis[1][1] - basis[0][1] * basis[1][0];
  if (det == 0) throw std::domain_error("lattice_conductor: degenerate basis");
  Rational inv[2][2] = {{basis[1][1] / det, -basis[0][1] / det}, {-basis[1][0] / det, basis[0][0] / det}};
  Rational WB[2][2], Y[2][2];
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) WB[i][j] = W[i][0] * basis[0][j] + W[i][1] * basis[1][j];
  int c = 0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Y[i][j] = inv[i][0] * WB[0][j] + inv[i][1] * WB[1][j];
      Y[i][j].canonicalize();
      if (Y[i][j] != 0) c = std::max(c, -vp(Y[i][j], m.p));
    }
  return c;
}

Rational m_coset_sum(const LocalFieldData& f, SchwartzCase c, const LocalPoint& pt) {
  f.validate();
  validate_case(f, c);
  if (f.ram == Ram::split) throw std::domain_error("m_coset_sum: E_v must be nonsplit");
  if (!pt.vq_y2) throw std::domain_error("m_coset_sum: needs y2 != 0");
  if (pt.u_val != 0) return 0;
  const QuadModel m = f.model();
  Rational a = nonrepresented_value(m, f.q_j(), *pt.vq_y2);
  Rational q = m.norm(pt.y1) + a;
  q.canonicalize();
  if (q == 0) throw std::domain_error("m_coset_sum: q(y) = 0");
  int w = vp(q, f.p);
  int v_lambda = *pt.vq_y2 - w;

  if (f.b_ram) {
    CherednikData g;
    Rational n1 = m.norm(pt.y1);
    g.in_E = false;
    g.in_support = n1 != 0 && *pt.vq_y2 - vp(n1, f.p) >= 2;
    g.unit_product = w == 0;
    g.v_lambda = v_lambda;
    return m_cherednik(f, g);
  }

  if (w < 0) return 0;
  if (w > 8) throw std::domain_error("m_coset_sum: index N^" + std::to_string(w) + " too large to enumerate");
  Rational total = 0;
  const long p = static_cast<long>(f.p);
  for (int e1 = 0; e1 <= w; ++e1) {
    long pe1 = 1;
    for (int i = 0; i < e1; ++i) pe1 *= p;
    for (long b = 0; b < pe1; ++b) {
      Rational basis[2][2] = {{Rational(pe1), Rational(b)}, {0, npow(f.p, w - e1)}};
      total += m_pair(f, v_lambda, lattice_conductor(m, basis));
    }
  }
  total.canonicalize();
  return total;
}

}  // namespace colmez

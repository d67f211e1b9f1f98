#include "colmez/pseudotheta.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <stdexcept>

namespace colmez {

namespace {

BigReal two_pi(int digits) { return const_pi(digits) * BigReal(2L, digits); }

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

BigReal parse_number(const std::string& text, int digits) {
  std::string t = trim(text);
  if (t.empty()) throw std::invalid_argument("empty number");
  auto slash = t.find('/');
  if (slash != std::string::npos)
    return parse_number(t.substr(0, slash), digits) / parse_number(t.substr(slash + 1), digits);
  BigReal r = BigReal::parse(t, digits);
  if (!r.is_finite()) throw std::invalid_argument("not a number: '" + t + "'");
  return r;
}

// "x", "p/q", "pi", "-pi/4", "2pi/3", "2*pi".
BigReal parse_argument(const std::string& text, int digits) {
  std::string t = trim(text);
  auto at = t.find("pi");
  if (at == std::string::npos) return parse_number(t, digits);
  std::string coef = trim(t.substr(0, at));
  if (!coef.empty() && coef.back() == '*') coef = trim(coef.substr(0, coef.size() - 1));
  BigReal c(1L, digits);
  if (coef == "-") c = BigReal(-1L, digits);
  else if (!coef.empty() && coef != "+") c = parse_number(coef, digits);
  std::string rest = trim(t.substr(at + 2));
  BigReal v = c * const_pi(digits);
  if (!rest.empty()) {
    if (rest[0] != '/') throw std::invalid_argument("cannot read '" + t + "'");
    v /= parse_number(rest.substr(1), digits);
  }
  return v;
}

using CMatrix = std::vector<std::vector<BigComplex>>;

// Gaussian elimination with partial pivoting; throws on a vanishing pivot.
std::vector<BigComplex> solve(CMatrix M, std::vector<BigComplex> r, int digits) {
  const std::size_t n = M.size();
  BigReal tiny = ten_to_minus(digits - 5, digits);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t i = col + 1; i < n; ++i)
      if (abs(M[i][col]) > abs(M[piv][col])) piv = i;
    if (abs(M[piv][col]) < tiny) throw std::domain_error("singular system");
    std::swap(M[piv], M[col]);
    std::swap(r[piv], r[col]);
    for (std::size_t i = col + 1; i < n; ++i) {
      BigComplex m = M[i][col] / M[col][col];
      for (std::size_t j = col; j < n; ++j) M[i][j] -= m * M[col][j];
      r[i] -= m * r[col];
    }
  }
  std::vector<BigComplex> x(n, BigComplex(digits));
  for (std::size_t i = n; i-- > 0;) {
    BigComplex s = r[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= M[i][j] * x[j];
    x[i] = s / M[i][i];
  }
  return x;
}

double inf_norm(const CMatrix& M) {
  double best = 0;
  for (const auto& row : M) {
    double s = 0;
    for (const auto& z : row) s += abs(z).to_double();
    best = std::max(best, s);
  }
  return best;
}

}  // namespace

GL2Real GL2Real::operator*(const GL2Real& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

GL2Real n_matrix(const BigReal& b) {
  int D = b.digits();
  return {BigReal(1L, D), b, BigReal(0L, D), BigReal(1L, D)};
}

GL2Real m_matrix(const BigReal& a) {
  if (a.sign() <= 0) throw std::domain_error("m(a) needs a > 0");
  int D = a.digits();
  return {a, BigReal(0L, D), BigReal(0L, D), BigReal(1L, D) / a};
}

GL2Real k_matrix(const BigReal& theta) {
  BigReal c = cos(theta), s = sin(theta);
  return {c, s, -s, c};
}

GL2Real g_N(long N, int digits) {
  return {BigReal(1L, digits), BigReal(0L, digits), BigReal(N, digits), BigReal(1L, digits)};
}

IwasawaData iwasawa(const GL2Real& g) {
  BigReal det = g.det();
  if (det.sign() <= 0) throw std::domain_error("iwasawa: needs det g > 0");
  IwasawaData r;
  r.d = sqrt(g.c * g.c + g.d * g.d);
  BigReal cs = g.d / r.d, sn = -g.c / r.d;
  r.theta = atan2(sn, cs);
  r.a = det / r.d;
  r.b = g.b * cs - g.a * sn;
  r.delta = sqrt(r.a / r.d);
  r.rho = BigComplex(cs, sn);
  return r;
}

NAK nak_decompose(const GL2Real& g) {
  BigReal det = g.det();
  int D = det.digits();
  if (abs(det - BigReal(1L, D)) > ten_to_minus(D - 10, D))
    throw std::domain_error("the Weil action is implemented on SL_2(R) = N A K only; det g = " + det.str(12));
  IwasawaData iw = iwasawa(g);
  return {iw.a * iw.b, iw.a, iw.theta};
}

GL2Real nak_matrix(const NAK& g) { return n_matrix(g.b) * m_matrix(g.a) * k_matrix(g.theta); }

GL2Real parse_group_word(const std::string& word, int digits) {
  GL2Real g = n_matrix(BigReal(0L, digits));
  std::size_t i = 0;
  while (i < word.size()) {
    char c = word[i];
    if (c == ' ' || c == '*') {
      ++i;
      continue;
    }
    if ((c != 'n' && c != 'm' && c != 'k') || i + 1 >= word.size() || word[i + 1] != '(')
      throw std::invalid_argument("group word: expected n(...), m(...) or k(...) at position " + std::to_string(i));
    auto close = word.find(')', i);
    if (close == std::string::npos) throw std::invalid_argument("group word: missing ')'");
    BigReal x = parse_argument(word.substr(i + 2, close - i - 2), digits);
    g = g * (c == 'n' ? n_matrix(x) : c == 'm' ? m_matrix(x) : k_matrix(x));
    i = close + 1;
  }
  return g;
}

BigComplex weil_gaussian(const NAK& g, const BigReal& q, int rank, const BigReal& u) {
  int D = std::max(g.a.digits(), q.digits());
  if (rank % 2 != 0) throw std::domain_error("weil_gaussian: rank must be even");
  if (u.sign() <= 0) return BigComplex(D);
  BigReal tp = two_pi(D);
  BigReal mod = exp(-(tp * u * g.a * g.a * q));
  for (int i = 0; i < rank / 2; ++i) mod *= g.a;
  BigReal phase = tp * g.b * u * q + BigReal(static_cast<long>(rank / 2), D) * g.theta;
  return unit_phase(phase) * mod;
}

Lattice::Lattice(std::vector<std::vector<long>> gram) : gram_(std::move(gram)) {
  const std::size_t n = gram_.size();
  for (const auto& row : gram_)
    if (row.size() != n) throw std::domain_error("Gram matrix must be square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (gram_[i][j] != gram_[j][i]) throw std::domain_error("Gram matrix must be symmetric");
  // Exact positive definiteness: every pivot of the symmetric elimination is > 0.
  std::vector<std::vector<Rational>> A(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) A[i][j] = gram_[i][j];
  for (std::size_t k = 0; k < n; ++k) {
    if (A[k][k] <= 0) throw std::domain_error("Gram matrix is not positive definite");
    for (std::size_t i = k + 1; i < n; ++i) {
      Rational m = A[i][k] / A[k][k];
      for (std::size_t j = k; j < n; ++j) A[i][j] -= m * A[k][j];
    }
  }
  if (n == 0) return;
  Eigen::MatrixXd G(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) G(i, j) = static_cast<double>(gram_[i][j]);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(G, Eigen::EigenvaluesOnly);
  // Relative safety margin against rounding in the eigenvalue solver.
  lambda_min_ = es.eigenvalues()(0) * (1 - 1e-9);
  Eigen::MatrixXd inv = G.inverse();
  for (std::size_t i = 0; i < n; ++i) inv_diag_.push_back(inv(i, i));
}

long Lattice::q(const std::vector<long>& x) const {
  if (x.size() != gram_.size()) throw std::domain_error("vector length does not match the rank");
  long s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) s += x[i] * gram_[i][j] * x[j];
  return s;
}

Lattice Lattice::restrict(const std::vector<int>& coords) const {
  std::vector<std::vector<long>> g;
  for (int i : coords) {
    if (i < 0 || i >= rank()) throw std::domain_error("coordinate index out of range");
    std::vector<long> row;
    for (int j : coords) row.push_back(gram_[i][j]);
    g.push_back(row);
  }
  return Lattice(g);
}

std::vector<std::vector<long>> Lattice::points(const Rational& bound) const {
  std::vector<std::vector<long>> out;
  const int n = rank();
  if (bound < 0) return out;
  // max x_i on the ellipsoid x^T G x <= B is sqrt(B (G^{-1})_{ii}).
  std::vector<long> box(n);
  for (int i = 0; i < n; ++i) box[i] = static_cast<long>(std::floor(std::sqrt(bound.get_d() * inv_diag_[i]))) + 1;
  std::vector<long> x(n);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      if (Rational(q(x)) <= bound) out.push_back(x);
      return;
    }
    for (long v = -box[i]; v <= box[i]; ++v) {
      x[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

BigComplex weil_action(const NAK& g, const std::vector<long>& x, const BigReal& u, const Lattice& L) {
  return weil_gaussian(g, BigReal(L.q(x), g.a.digits()), L.rank(), u);
}

double theta_tail_log10(const Lattice& L, int rank_weight, const BigReal& a, const Rational& R, double cmax) {
  // For q(x) > R^2: e^{-2 pi a^2 q} <= e^{-pi a^2 R^2} e^{-pi a^2 lambda |x|^2}, and
  // sum_n e^{-t n^2} <= 1 + 2 e^{-t} / (1 - e^{-t}).
  double ad = a.to_double();
  double R2 = Rational(R * R).get_d();
  double t = M_PI * ad * ad * L.min_eigenvalue();
  double per_axis = 1 + 2 * std::exp(-t) / -std::expm1(-t);
  double ln = std::log(std::max(cmax, 1e-300)) + 0.5 * rank_weight * std::log(ad) - M_PI * ad * ad * R2 +
              L.rank() * std::log(per_axis);
  return ln / std::log(10.0);
}

long required_radius(const Lattice& L, int rank_weight, const BigReal& a, int tail_digits, double cmax) {
  double ad = a.to_double();
  double at_zero = theta_tail_log10(L, rank_weight, a, 0, cmax);
  double R2 = (at_zero + tail_digits) * std::log(10.0) / (M_PI * ad * ad);
  long R = std::max(1L, static_cast<long>(std::ceil(std::sqrt(std::max(R2, 0.0)))));
  while (theta_tail_log10(L, rank_weight, a, R, cmax) >= -tail_digits) ++R;
  return R;
}

namespace {

void require_radius(const Lattice& L, int rank_weight, const NAK& g, const Rational& R, int tail_digits,
                    double cmax) {
  if (theta_tail_log10(L, rank_weight, g.a, R, cmax) >= -tail_digits)
    throw std::domain_error("truncation radius R = " + R.get_str() + " too small for tail 1e-" +
                            std::to_string(tail_digits) + ", need R >= " +
                            std::to_string(required_radius(L, rank_weight, g.a, tail_digits, cmax)));
}

// Gaussian term by q value; most lattice points share a few norms.
class TermCache {
 public:
  TermCache(const NAK& g, int rank, int digits) : g_(g), rank_(rank), digits_(digits) {}
  const BigComplex& at(long q) {
    auto it = cache_.find(q);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(q, weil_gaussian(g_, BigReal(q, digits_), rank_, BigReal(1L, digits_))).first->second;
  }

 private:
  NAK g_;
  int rank_;
  int digits_;
  std::map<long, BigComplex> cache_;
};

NAK at_digits(const NAK& g, int digits) {
  return {g.b.with_digits(digits), g.a.with_digits(digits), g.theta.with_digits(digits)};
}

}  // namespace

ThetaResult theta_series(const NAK& g0, const Lattice& L, const Rational& R, int tail_digits, int digits) {
  NAK g = at_digits(g0, digits);
  require_radius(L, L.rank(), g, R, tail_digits, 1);
  ThetaResult r;
  r.value = BigComplex(digits);
  TermCache terms(g, L.rank(), digits);
  for (const auto& x : L.points(R * R)) {
    r.value += terms.at(L.q(x));
    ++r.points;
  }
  r.tail_log10 = theta_tail_log10(L, L.rank(), g.a, R, 1);
  return r;
}

BigComplex ExactComplex::to_big(int digits) const { return BigComplex(BigReal(re, digits), BigReal(im, digits)); }

double ExactComplex::abs() const { return std::hypot(re.get_d(), im.get_d()); }

void PseudoThetaSpec::validate() const {
  Lattice L(gram);
  if (d() == 0 || d() % 2 || d1() % 2 || d0() % 2) throw std::domain_error("spec: ranks must be even and V nonzero");
  if (d1() == 0) throw std::domain_error("spec: V1 must be nonzero");
  std::set<int> s1(v1.begin(), v1.end()), s0(v0.begin(), v0.end());
  if (s1.size() != v1.size() || s0.size() != v0.size()) throw std::domain_error("spec: repeated coordinate index");
  for (int i : v1)
    if (i < 0 || i >= d()) throw std::domain_error("spec: V1 index " + std::to_string(i) + " out of range");
  for (int i : v0)
    if (!s1.count(i)) throw std::domain_error("spec: V0 index " + std::to_string(i) + " is not in V1");
  if (radius <= 0) throw std::domain_error("spec: radius must be positive");
  for (const auto& [x, v] : table)
    if (static_cast<int>(x.size()) != d1()) throw std::domain_error("spec: table point has the wrong length");
}

bool PseudoThetaSpec::in_v0(const std::vector<long>& x1) const {
  // Rank 0 encodes V0 empty, not the zero space.
  if (v0.empty()) return false;
  for (std::size_t j = 0; j < v1.size(); ++j)
    if (x1[j] != 0 && std::find(v0.begin(), v0.end(), v1[j]) == v0.end()) return false;
  return true;
}

ExactComplex PseudoThetaSpec::phi_prime(const std::vector<long>& x1) const {
  auto it = table.find(x1);
  if (it != table.end()) return it->second;
  return in_v0(x1) ? extension : default_value;
}

double PseudoThetaSpec::phi_bound() const {
  double m = std::max(default_value.abs(), extension.abs());
  for (const auto& [x, v] : table) m = std::max(m, v.abs());
  return m;
}

bool operator==(const PseudoThetaSpec& x, const PseudoThetaSpec& y) {
  return x.gram == y.gram && x.v1 == y.v1 && x.v0 == y.v0 && x.radius == y.radius &&
         x.default_value == y.default_value && x.extension == y.extension && x.table == y.table;
}

long spec_required_radius(const PseudoThetaSpec& s, const NAK& g, int tail_digits) {
  s.validate();
  double c = s.phi_bound();
  Lattice V(s.gram);
  Lattice L1 = V.restrict(s.v1);
  long R = std::max(required_radius(L1, s.d(), g.a, tail_digits, c), required_radius(L1, s.d1(), g.a, tail_digits, c));
  if (s.d0() > 0) R = std::max(R, required_radius(V.restrict(s.v0), s.d0(), g.a, tail_digits, c));
  return R;
}

double spec_tail_log10(const PseudoThetaSpec& s, const NAK& g, const Rational& R) {
  double c = s.phi_bound();
  Lattice V(s.gram);
  Lattice L1 = V.restrict(s.v1);
  double t = std::max(theta_tail_log10(L1, s.d(), g.a, R, c), theta_tail_log10(L1, s.d1(), g.a, R, c));
  if (s.d0() > 0) t = std::max(t, theta_tail_log10(V.restrict(s.v0), s.d0(), g.a, R, c));
  return t;
}

BigComplex pseudo_theta_eval(const PseudoThetaSpec& s, const NAK& g0, const Rational& R, int tail_digits,
                             int digits) {
  s.validate();
  NAK g = at_digits(g0, digits);
  Lattice L1 = Lattice(s.gram).restrict(s.v1);
  require_radius(L1, s.d(), g, R, tail_digits, s.phi_bound());
  TermCache terms(g, s.d(), digits);
  BigComplex sum(digits);
  for (const auto& x : L1.points(R * R)) {
    if (s.in_v0(x)) continue;
    sum += s.phi_prime(x).to_big(digits) * terms.at(L1.q(x));
  }
  return sum;
}

BigComplex outer_theta(const PseudoThetaSpec& s, const NAK& g0, const Rational& R, int tail_digits, int digits) {
  s.validate();
  NAK g = at_digits(g0, digits);
  Lattice L1 = Lattice(s.gram).restrict(s.v1);
  require_radius(L1, s.d1(), g, R, tail_digits, s.phi_bound());
  TermCache terms(g, s.d1(), digits);
  BigComplex sum(digits);
  for (const auto& x : L1.points(R * R)) sum += s.phi_prime(x).to_big(digits) * terms.at(L1.q(x));
  return sum;
}

BigComplex inner_theta(const PseudoThetaSpec& s, const NAK& g0, const Rational& R, int tail_digits, int digits) {
  s.validate();
  if (s.d0() == 0) return BigComplex(digits);
  NAK g = at_digits(g0, digits);
  Lattice L0 = Lattice(s.gram).restrict(s.v0);
  require_radius(L0, s.d0(), g, R, tail_digits, s.phi_bound());
  TermCache terms(g, s.d0(), digits);
  BigComplex sum(digits);
  for (const auto& y : L0.points(R * R)) {
    std::vector<long> x1(s.v1.size(), 0);
    for (std::size_t i = 0; i < s.v0.size(); ++i) {
      auto pos = std::find(s.v1.begin(), s.v1.end(), s.v0[i]) - s.v1.begin();
      x1[pos] = y[i];
    }
    sum += s.phi_prime(x1).to_big(digits) * terms.at(L0.q(y));
  }
  return sum;
}

ApproximationReport approximation_check(const PseudoThetaSpec& s, const GL2Real& g, int tail_digits, int digits,
                                        std::optional<Rational> R) {
  s.validate();
  NAK h = nak_decompose(g);
  IwasawaData iw = iwasawa(g);
  ApproximationReport rep;
  rep.radius = R ? *R : s.radius;
  rep.lhs = pseudo_theta_eval(s, h, rep.radius, tail_digits, digits);
  BigComplex t1 = outer_theta(s, h, rep.radius, tail_digits, digits);
  BigComplex t0 = inner_theta(s, h, rep.radius, tail_digits, digits);
  BigComplex rd = iw.rho * iw.delta;
  rep.rhs = pow_int(rd, (s.d() - s.d1()) / 2) * t1 - pow_int(rd, (s.d() - s.d0()) / 2) * t0;
  rep.abs_diff = abs(rep.lhs - rep.rhs);
  BigReal scale = abs(rep.lhs);
  rep.rel_error = scale.is_zero() ? rep.abs_diff : rep.abs_diff / scale;
  rep.tail_log10 = spec_tail_log10(s, h, rep.radius);
  return rep;
}

GNDemoReport gn_separation_demo(const std::vector<long>& N_list, const std::vector<BigComplex>& f, int digits) {
  const std::size_t n = N_list.size();
  if (n == 0 || f.size() != n) throw std::domain_error("gn demo: need as many values of N as coefficients f_k");
  if (std::set<long>(N_list.begin(), N_list.end()).size() != n)
    throw std::domain_error("gn demo: repeated N gives a singular Vandermonde system");
  GNDemoReport rep;
  rep.N = N_list;
  rep.iwasawa_error = BigReal(0L, digits);
  BigComplex one(BigReal(1L, digits));
  CMatrix M;
  for (long N : N_list) {
    BigComplex z = one / BigComplex(BigReal(1L, digits), BigReal(N, digits));
    IwasawaData iw = iwasawa(g_N(N, digits));
    rep.iwasawa_error = max(rep.iwasawa_error, abs(z - iw.rho * iw.delta));
    rep.z.push_back(z);
    std::vector<BigComplex> row;
    for (std::size_t k = 0; k < n; ++k) row.push_back(pow_int(z, static_cast<long>(k)));
    M.push_back(row);
  }
  std::vector<BigComplex> r;
  rep.residual = BigReal(0L, digits);
  for (std::size_t j = 0; j < n; ++j) {
    BigComplex s(digits);
    for (std::size_t k = 0; k < n; ++k) s += M[j][k] * f[k];
    rep.residual = max(rep.residual, abs(s));
    r.push_back(s);
  }
  std::vector<BigComplex> x = solve(M, r, digits);
  rep.recovery_error = BigReal(0L, digits);
  for (std::size_t k = 0; k < n; ++k) rep.recovery_error = max(rep.recovery_error, abs(x[k] - f[k]));
  CMatrix inv(n, std::vector<BigComplex>(n, BigComplex(digits)));
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<BigComplex> e(n, BigComplex(digits));
    e[c] = one;
    std::vector<BigComplex> col = solve(M, e, digits);
    for (std::size_t i = 0; i < n; ++i) inv[i][c] = col[i];
  }
  rep.condition = inf_norm(M) * inf_norm(inv);
  return rep;
}

}  // namespace colmez

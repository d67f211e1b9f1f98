#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "colmez/bigcomplex.hpp"

namespace colmez {

// [[a, b], [c, d]] over R.
struct GL2Real {
  BigReal a, b, c, d;
  BigReal det() const { return a * d - b * c; }
  GL2Real operator*(const GL2Real& o) const;
};

GL2Real n_matrix(const BigReal& b);
GL2Real m_matrix(const BigReal& a);  // diag(a, 1/a)
GL2Real k_matrix(const BigReal& theta);  // [[cos, sin], [-sin, cos]]
GL2Real g_N(long N, int digits);  // [[1, 0], [N, 1]]

// g = [[a, b], [0, d]] k(theta) with a > 0.
struct IwasawaData {
  BigReal a, b, d, theta;
  BigReal delta;   // |a/d|^{1/2}
  BigComplex rho;  // e^{i theta}
};
IwasawaData iwasawa(const GL2Real& g);

// g = n(b) m(a) k(theta) in SL_2(R).
struct NAK {
  BigReal b, a, theta;
};
NAK nak_decompose(const GL2Real& g);
GL2Real nak_matrix(const NAK& g);

// Words such as "n(1/2)m(2)k(pi/3)"; arguments are decimals, fractions or
// multiples of pi.
GL2Real parse_group_word(const std::string& word, int digits);

// r(g) applied to the standard Gaussian e^{-2 pi u q(x)} 1_{u > 0} on a
// space of even dimension rank, evaluated at a vector with q(x) = q.
BigComplex weil_gaussian(const NAK& g, const BigReal& q, int rank, const BigReal& u);

// Positive definite integral Gram matrix; q(x) = x^T G x.
class Lattice {
 public:
  explicit Lattice(std::vector<std::vector<long>> gram);
  int rank() const { return static_cast<int>(gram_.size()); }
  const std::vector<std::vector<long>>& gram() const { return gram_; }
  long q(const std::vector<long>& x) const;
  double min_eigenvalue() const { return lambda_min_; }
  Lattice restrict(const std::vector<int>& coords) const;
  // Every x with q(x) <= bound, the origin included.
  std::vector<std::vector<long>> points(const Rational& bound) const;

 private:
  std::vector<std::vector<long>> gram_;
  double lambda_min_ = 0;
  std::vector<double> inv_diag_;
};

BigComplex weil_action(const NAK& g, const std::vector<long>& x, const BigReal& u, const Lattice& L);

// log10 of a bound on the terms with q(x) > R^2, coefficients bounded by cmax.
double theta_tail_log10(const Lattice& L, int rank_weight, const BigReal& a, const Rational& R, double cmax);
// Smallest integer R whose tail bound is below 10^{-tail_digits}.
long required_radius(const Lattice& L, int rank_weight, const BigReal& a, int tail_digits, double cmax);

struct ThetaResult {
  BigComplex value;
  double tail_log10 = 0;
  std::size_t points = 0;
};
// Throws std::domain_error with the required radius if the tail bound at R
// exceeds 10^{-tail_digits}.
ThetaResult theta_series(const NAK& g, const Lattice& L, const Rational& R, int tail_digits, int digits);

struct ExactComplex {
  Rational re = 0;
  Rational im = 0;
  BigComplex to_big(int digits) const;
  double abs() const;
  friend bool operator==(const ExactComplex& x, const ExactComplex& y) { return x.re == y.re && x.im == y.im; }
};

// V0 in V1 in V as coordinate sublattices of one Gram matrix, and the
// function phi' at g = 1 on V1 lattice points: tabulated values, a default
// on the rest of V1 - V0, and the extension to V0.
struct PseudoThetaSpec {
  std::vector<std::vector<long>> gram;
  std::vector<int> v1;
  std::vector<int> v0;
  Rational radius = 0;
  ExactComplex default_value{1, 0};
  ExactComplex extension{1, 0};
  std::map<std::vector<long>, ExactComplex> table;  // keys in V1 coordinates

  void validate() const;
  int d() const { return static_cast<int>(gram.size()); }
  int d1() const { return static_cast<int>(v1.size()); }
  int d0() const { return static_cast<int>(v0.size()); }
  bool in_v0(const std::vector<long>& x1) const;
  ExactComplex phi_prime(const std::vector<long>& x1) const;
  double phi_bound() const;
  friend bool operator==(const PseudoThetaSpec& x, const PseudoThetaSpec& y);
};

// The radius needed for all three series at g, and the largest of their
// tail bounds at R.
long spec_required_radius(const PseudoThetaSpec& s, const NAK& g, int tail_digits);
double spec_tail_log10(const PseudoThetaSpec& s, const NAK& g, const Rational& R);

// Each throws std::domain_error naming the required radius when R is too small.
// A(g): phi' times r_V(g) phi summed over V1 - V0.
BigComplex pseudo_theta_eval(const PseudoThetaSpec& s, const NAK& g, const Rational& R, int tail_digits, int digits);
// Outer and inner series: r_{V1} over V1 and r_{V0} over V0 (0 when V0 is empty).
BigComplex outer_theta(const PseudoThetaSpec& s, const NAK& g, const Rational& R, int tail_digits, int digits);
BigComplex inner_theta(const PseudoThetaSpec& s, const NAK& g, const Rational& R, int tail_digits, int digits);

struct ApproximationReport {
  BigComplex lhs;
  BigComplex rhs;
  BigReal abs_diff;
  BigReal rel_error;
  double tail_log10 = 0;
  Rational radius;
};
// lhs = A(g); rhs = (rho delta)^{(d-d1)/2} theta_1(g) - (rho delta)^{(d-d0)/2} theta_0(g).
// R defaults to the spec radius; throws when it is below spec_required_radius.
ApproximationReport approximation_check(const PseudoThetaSpec& s, const GL2Real& g, int tail_digits, int digits,
                                        std::optional<Rational> R = std::nullopt);

// Solves sum_k z_j^k f_k = r_j with z_j = (1 + i N_j)^{-1}, r = M f.
struct GNDemoReport {
  std::vector<long> N;
  std::vector<BigComplex> z;
  BigReal iwasawa_error;   // max |z_j - rho(g_N) delta(g_N)|
  BigReal residual;        // max |(M f)_j|
  BigReal recovery_error;  // max |M^{-1}(M f) - f|
  double condition = 0;    // infinity-norm condition number of M
};
GNDemoReport gn_separation_demo(const std::vector<long>& N_list, const std::vector<BigComplex>& f, int digits);

}  // namespace colmez

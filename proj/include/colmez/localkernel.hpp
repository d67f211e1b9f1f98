#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "colmez/loglinear.hpp"
#include "colmez/padic.hpp"
#include "colmez/ratfunc.hpp"

namespace colmez {

// One place v of F together with the local quadratic algebra E_v and the
// quaternion algebra B_v = E_v + E_v j. Points are explicit in the model
// QuadModel::make(p, ram, v_D), so the residue field is F_p and N = p.
struct LocalFieldData {
  std::uint64_t p = 0;
  std::uint64_t N = 0;
  int v_d = 0;   // conductor exponent of the additive character
  int v_D = 0;   // discriminant exponent of E_v / F_v
  Ram ram = Ram::inert;
  int v_qj = 0;  // v(q(j)); 1 exactly when B_v is nonsplit
  bool b_ram = false;

  static LocalFieldData make(std::uint64_t p, Ram ram, int v_d, int v_D, int v_qj);
  void validate() const;
  std::string str() const;

  QuadModel model() const;
  // q(j) in the model: -1 when B_v splits, -p otherwise.
  Rational q_j() const;
  Rational abs_dqj() const;  // |d q(j)|
  LogLinearValue log_N(const Rational& coefficient = 1) const;
};

enum class SchwartzCase { standard, unit, s2 };
std::string case_name(SchwartzCase c);
// unit for nonsplit B_v, standard otherwise.
SchwartzCase default_case(const LocalFieldData& f);
void validate_case(const LocalFieldData& f, SchwartzCase c);

// y = y1 + y2 with y1 in E_v and y2 in E_v j' for the nearby algebra;
// only v(q(y2)) enters the closed forms. vq_y2 empty means y2 = 0.
struct LocalPoint {
  LocalElement y1;
  std::optional<int> vq_y2;
  int u_val = 0;
};

enum class Y1Class { unit, integral, inverse_different, outside };
Y1Class classify_y1(const LocalFieldData& f, const LocalElement& y1);

// Whether a y2 of this valuation exists in the nearby algebra. For E inert
// the values of q on E j' have valuation of parity opposite to v_qj.
bool realizable_vq_y2(const LocalFieldData& f, int vq_y2);

// Schwartz function restricted to E_v x F_v^x.
Rational phi_on_E(const LocalFieldData& f, SchwartzCase c, const LocalElement& y, int u_val);

// Volume of D_n(a) as a rational multiple of |D|^{1/2}.
struct DnVolume {
  enum class Kind { empty, full, window };
  Kind kind = Kind::empty;
  Rational over_sqrtD = 0;
  int v_D = 0;
  std::uint64_t N = 0;
  // Exact value when |D|^{1/2} is rational.
  std::optional<Rational> exact() const;
  std::string str() const;
};

DnVolume volume_Dn(const LocalFieldData& f, int n, int a_val);
// Enumerates t in p^{-r} O_E, r = ceil((v_d + v_D) / 2) + k - (n + v_d + v_D + 2),
// modulo high powers of p and rescales; the count is repeated at k + 1 and
// must agree. The kind is read off the value, so a window volume equal to
// vol(D_n) reports as full.
DnVolume volume_Dn_oracle(const LocalFieldData& f, int n, const Rational& a, int k);

// Series in X = N^{-s}: the Whittaker derivative series when y2 != 0 and the
// constant-term series when y2 = 0.
RationalFunctionX whittaker_rf(const LocalFieldData& f, SchwartzCase c, const LocalPoint& pt);

LogLinearValue inert_k_closed_form(std::uint64_t N, int v_d, int v_qj, int a_val);
LogLinearValue ramified_k_closed_form(std::uint64_t N, int v_d, int v_D, int a_val);
LogLinearValue k_derivative(const LocalFieldData& f, const LocalPoint& pt);

LogLinearValue alpha_v(const LocalFieldData& f, const LocalElement& y1, int u_val = 0);
LogLinearValue c_derivative(const LocalFieldData& f, SchwartzCase c, const LocalElement& y, int u_val);

// (k - m log N) restricted to E_v: closed form, and from the k series at a
// y2 valuation where the difference has stabilised.
LogLinearValue k_minus_m_on_E(const LocalFieldData& f, SchwartzCase c, const LocalElement& y, int u_val);
LogLinearValue k_minus_m_on_E_series(const LocalFieldData& f, SchwartzCase c, const LocalElement& y,
                                     int u_val);

LogLinearValue d_combination(const LocalFieldData& f, SchwartzCase c, const LocalElement& y, int u_val);

struct IdentityReport {
  LogLinearValue lhs;         // closed forms
  LogLinearValue lhs_series;  // series and coset sums
  LogLinearValue rhs;
  bool pass = false;
};
IdentityReport local_identity_check(const LocalFieldData& f, SchwartzCase c, const LocalElement& y, int u_val);

struct IdentityCell {
  LocalFieldData f;
  SchwartzCase c;
  LocalElement y;
  int u_val;
};
// N in {2, 3, 5, 7}, v_d in {0, 1, 2}, every ramification type and case.
std::vector<IdentityCell> local_identity_grid();
std::vector<LocalElement> sample_points(const LocalFieldData& f);

}  // namespace colmez

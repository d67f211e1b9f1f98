#pragma once

#include <cstdint>

#include "colmez/localkernel.hpp"

namespace colmez {

// Closed-form multiplicity of y = y1 + y2 off E_v (y2 != 0).
Rational m_multiplicity(const LocalFieldData& f, SchwartzCase c, const LocalPoint& pt);

// Closed-form multiplicity on E_v^x. Returns 0 for nonsplit B_v and for s2.
Rational n_multiplicity(const LocalFieldData& f, SchwartzCase c, const LocalElement& y, int u_val);
// Split E_v: the sum over the two unipotent coset families, each class of
// b with v(b) = -i weighted by its ordinary multiplicity.
Rational n_multiplicity_cosets(const LocalFieldData& f, SchwartzCase c, const LocalElement& y, int u_val);

// Pair multiplicity for B_v split, E_v nonsplit, by conductor c of the
// second lattice.
Rational m_pair(const LocalFieldData& f, int b_lambda_val, int c);

struct CherednikData {
  int v_lambda = 0;
  bool in_support = false;     // gamma in E^x (1 + O_E p j)
  bool unit_product = false;   // q(gamma) q(beta) a unit
  bool in_E = false;           // gamma in E^x itself; rejected
};
Rational m_cherednik(const LocalFieldData& f, const CherednikData& g);

// 1 / (N^{r - b_val - 1} (N - 1)); requires b_val <= r - 1.
Rational m_ordinary(int b_val, int r, std::uint64_t N);
Rational ordinary_sum_check(int a_val, std::uint64_t N, int r);

// Smallest c >= 0 with (O_F + p^c O_E) L in L, for L spanned by the columns
// of basis (coordinates in the basis 1, w of O_E).
int lattice_conductor(const QuadModel& m, const Rational basis[2][2]);

// m at y by summing pair multiplicities over all lattices of index
// N^{v(q(y))} (B_v split) or the Cherednik multiplicity over the single
// class of unit norm (B_v nonsplit). y2 is realised by an explicit value of
// q(y2) in the class not represented on E j.
Rational m_coset_sum(const LocalFieldData& f, SchwartzCase c, const LocalPoint& pt);

}  // namespace colmez

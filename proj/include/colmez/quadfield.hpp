#pragma once

#include <cstdint>
#include <vector>

#include "colmez/bigcomplex.hpp"

namespace colmez {

inline constexpr long kClassGroupBound = 1000000;

bool is_fundamental_discriminant(long d);
// Throws std::invalid_argument with a "not fundamental" message.
void require_fundamental(long d);

// Kronecker symbol (d/n) for a negative fundamental discriminant d and n >= 1.
int kronecker(long d, long n);

struct ReducedForm {
  long a, b, c;
  friend bool operator==(const ReducedForm&, const ReducedForm&) = default;
};

struct ClassGroupData {
  long d;
  long h;
  int w;
  std::vector<ReducedForm> forms;
};

ClassGroupData class_group(long d);
// tau = (-b + sqrt(d)) / (2a) in the upper half plane.
BigComplex heegner_point(long d, const ReducedForm& f, int digits);
bool is_reduced(const ReducedForm& f);

// Exact Gaussian rational a + b i, used as test roots for CM-type combinatorics.
struct GaussianRational {
  Rational re = 0;
  Rational im = 0;
  friend bool operator==(const GaussianRational& x, const GaussianRational& y) {
    return x.re == y.re && x.im == y.im;
  }
};
GaussianRational operator-(const GaussianRational& x, const GaussianRational& y);
GaussianRational operator*(const GaussianRational& x, const GaussianRational& y);

struct CMTypeData {
  // roots[i] and roots[i + g] are conjugate partners.
  std::vector<GaussianRational> roots;
  // 0-based indices, one from each pair.
  std::vector<int> phi;
};

void validate_cm_type(const CMTypeData& t);
// prod_{i<j in phi} (x_i - x_j)^2; 1 for g = 1.
GaussianRational cm_type_discriminant(const CMTypeData& t);

struct ProductIdentityReport {
  // Multiplicity of each unordered factor {i, j}, i < j, on each side.
  std::vector<std::vector<long>> lhs_multiplicity;
  std::vector<std::vector<long>> rhs_multiplicity;
  bool factors_equal = false;
  // The two sides multiplied out exactly.
  GaussianRational lhs_value;
  GaussianRational rhs_value;
  bool values_equal = false;
};

// prod over all 2^g CM types Phi of Delta(Phi) Delta(Phi^c) against
// (prod_{i<j}(x_i - x_j)^2 / prod_{i<=g}(x_i - x_{i+g})^2)^(2^(g-1)).
ProductIdentityReport cm_type_product_identity(const std::vector<GaussianRational>& roots);

}  // namespace colmez

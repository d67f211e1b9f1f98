#include "colmez/quadfield.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace colmez {

namespace {

bool squarefree(long m) {
  m = std::labs(m);
  for (long p = 2; p * p <= m; ++p) {
    if (m % (p * p) == 0) return false;
  }
  return true;
}

long mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

// Jacobi symbol (a/n) for odd n > 0.
int jacobi(long a, long n) {
  a = mod(a, n);
  int result = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      long r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

}  // namespace

bool is_fundamental_discriminant(long d) {
  if (d >= 0) return false;
  if (mod(d, 4) == 1) return squarefree(d);
  if (mod(d, 4) != 0) return false;
  long m = d / 4;
  long r = mod(m, 4);
  return (r == 2 || r == 3) && squarefree(m);
}

void require_fundamental(long d) {
  if (is_fundamental_discriminant(d)) return;
  std::string why;
  if (d >= 0) {
    why = "d must be negative";
  } else if (mod(d, 4) == 2 || mod(d, 4) == 3) {
    why = std::to_string(d) + " = " + std::to_string(mod(d, 4)) + " mod 4";
  } else {
    why = "square factor";
  }
  throw std::invalid_argument("discriminant " + std::to_string(d) + " is not fundamental (" + why + ")");
}

int kronecker(long d, long n) {
  require_fundamental(d);
  if (n < 1) throw std::invalid_argument("kronecker: n must be >= 1");
  int result = 1;
  while (n % 2 == 0) {
    n /= 2;
    if (d % 2 == 0) return 0;
    long r = mod(d, 8);
    if (r == 3 || r == 5) result = -result;
  }
  return result * jacobi(d, n);
}

bool is_reduced(const ReducedForm& f) {
  if (!(std::labs(f.b) <= f.a && f.a <= f.c)) return false;
  if ((std::labs(f.b) == f.a || f.a == f.c) && f.b < 0) return false;
  return std::gcd(std::gcd(f.a, std::labs(f.b)), f.c) == 1;
}

ClassGroupData class_group(long d) {
  require_fundamental(d);
  if (-d > kClassGroupBound) {
    throw std::invalid_argument("class_group: |d| exceeds the bound " + std::to_string(kClassGroupBound));
  }
  ClassGroupData out{d, 0, d == -3 ? 6 : (d == -4 ? 4 : 2), {}};
  for (long a = 1; 3 * a * a <= -d; ++a) {
    for (long b = -a + 1; b <= a; ++b) {
      long num = b * b - d;
      if (num % (4 * a) != 0) continue;
      ReducedForm f{a, b, num / (4 * a)};
      if (is_reduced(f)) out.forms.push_back(f);
    }
  }
  out.h = static_cast<long>(out.forms.size());
  return out;
}

BigComplex heegner_point(long d, const ReducedForm& f, int digits) {
  BigReal two_a(2 * f.a, digits);
  return BigComplex(BigReal(-f.b, digits) / two_a, sqrt(BigReal(-d, digits)) / two_a);
}

GaussianRational operator-(const GaussianRational& x, const GaussianRational& y) {
  GaussianRational r{x.re - y.re, x.im - y.im};
  r.re.canonicalize();
  r.im.canonicalize();
  return r;
}

GaussianRational operator*(const GaussianRational& x, const GaussianRational& y) {
  GaussianRational r{x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
  r.re.canonicalize();
  r.im.canonicalize();
  return r;
}

namespace {

void require_distinct(const std::vector<GaussianRational>& roots) {
  if (roots.empty() || roots.size() % 2 != 0) {
    throw std::invalid_argument("CM type needs 2g roots, g >= 1");
  }
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      if (roots[i] == roots[j]) {
        throw std::invalid_argument("repeated root at positions " + std::to_string(i) + " and " +
                                    std::to_string(j));
      }
    }
  }
}

GaussianRational one() { return GaussianRational{1, 0}; }

GaussianRational power(GaussianRational x, unsigned long e) {
  GaussianRational r = one();
  while (e > 0) {
    if (e & 1) r = r * x;
    x = x * x;
    e >>= 1;
  }
  return r;
}

}  // namespace

void validate_cm_type(const CMTypeData& t) {
  require_distinct(t.roots);
  const int g = static_cast<int>(t.roots.size() / 2);
  if (static_cast<int>(t.phi.size()) != g) throw std::invalid_argument("|phi| must equal g");
  std::vector<int> seen(g, 0);
  for (int i : t.phi) {
    if (i < 0 || i >= 2 * g) throw std::invalid_argument("phi index out of range");
    if (seen[i % g]++) throw std::invalid_argument("phi contains a conjugate pair");
  }
}

GaussianRational cm_type_discriminant(const CMTypeData& t) {
  validate_cm_type(t);
  GaussianRational acc = one();
  for (std::size_t a = 0; a < t.phi.size(); ++a) {
    for (std::size_t b = a + 1; b < t.phi.size(); ++b) {
      GaussianRational diff = t.roots[t.phi[a]] - t.roots[t.phi[b]];
      acc = acc * diff * diff;
    }
  }
  return acc;
}

ProductIdentityReport cm_type_product_identity(const std::vector<GaussianRational>& roots) {
  require_distinct(roots);
  const int g = static_cast<int>(roots.size() / 2);
  if (g > 6) throw std::invalid_argument("cm_type_product_identity supports g <= 6");
  const int n = 2 * g;
  ProductIdentityReport rep;
  rep.lhs_multiplicity.assign(n, std::vector<long>(n, 0));
  rep.rhs_multiplicity.assign(n, std::vector<long>(n, 0));

  // Left side: every CM type Phi and its complement, each pair inside a type
  // contributing a squared factor.
  for (unsigned mask = 0; mask < (1u << g); ++mask) {
    std::vector<int> phi, phic;
    for (int k = 0; k < g; ++k) {
      bool first = (mask >> k) & 1u;
      phi.push_back(first ? k : k + g);
      phic.push_back(first ? k + g : k);
    }
    for (const auto* type : {&phi, &phic}) {
      for (std::size_t a = 0; a < type->size(); ++a) {
        for (std::size_t b = a + 1; b < type->size(); ++b) {
          int i = std::min((*type)[a], (*type)[b]);
          int j = std::max((*type)[a], (*type)[b]);
          rep.lhs_multiplicity[i][j] += 2;
        }
      }
    }
  }
  // Right side: all pairs minus conjugate pairs, squared, to the power 2^(g-1).
  const long expo = 1L << (g - 1);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (j == i + g) continue;
      rep.rhs_multiplicity[i][j] = 2 * expo;
    }
  }
  rep.factors_equal = rep.lhs_multiplicity == rep.rhs_multiplicity;

  // Exact values; the division by conjugate pairs is moved to the left side.
  GaussianRational lhs = one();
  for (unsigned mask = 0; mask < (1u << g); ++mask) {
    CMTypeData t{roots, {}}, tc{roots, {}};
    for (int k = 0; k < g; ++k) {
      bool first = (mask >> k) & 1u;
      t.phi.push_back(first ? k : k + g);
      tc.phi.push_back(first ? k + g : k);
    }
    lhs = lhs * cm_type_discriminant(t) * cm_type_discriminant(tc);
  }
  GaussianRational all = one(), conj_pairs = one();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      GaussianRational diff = roots[i] - roots[j];
      all = all * diff * diff;
      if (j == i + g) conj_pairs = conj_pairs * diff * diff;
    }
  }
  rep.lhs_value = lhs * power(conj_pairs, static_cast<unsigned long>(expo));
  rep.rhs_value = power(all, static_cast<unsigned long>(expo));
  rep.values_equal = rep.lhs_value == rep.rhs_value;
  return rep;
}

}  // namespace colmez

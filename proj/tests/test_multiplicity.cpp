#include "colmez/multiplicity.hpp"
#include "doctest.h"

using namespace colmez;

namespace {

Rational rat(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

}  // namespace

TEST_CASE("multiplicity off E examples") {
  auto inert = LocalFieldData::make(3, Ram::inert, 0, 0, 0);
  CHECK(m_multiplicity(inert, SchwartzCase::standard, {{1, 0}, 0, 0}) == rat(1, 2));
  CHECK(m_multiplicity(inert, SchwartzCase::standard, {{1, 0}, 3, 0}) == 2);
  CHECK(m_multiplicity(inert, SchwartzCase::standard, {{1, 0}, 3, 1}) == 0);
  CHECK(m_multiplicity(inert, SchwartzCase::standard, {{rat(1, 3), 0}, 3, 0}) == 0);
  auto ram = LocalFieldData::make(3, Ram::ramified, 0, 1, 0);
  CHECK(m_multiplicity(ram, SchwartzCase::standard, {{1, 0}, 0, 0}) == rat(1, 2));
  auto nonsplit = LocalFieldData::make(3, Ram::inert, 0, 0, 1);
  // y2 = j has v(q(y2)) = 1, outside p O_E j.
  CHECK(m_multiplicity(nonsplit, SchwartzCase::unit, {{1, 0}, 1, 0}) == 0);
  CHECK(m_multiplicity(nonsplit, SchwartzCase::unit, {{1, 0}, 3, 0}) == rat(3, 2));
  CHECK_THROWS_AS(m_multiplicity(LocalFieldData::make(3, Ram::split, 0, 0, 0), SchwartzCase::standard,
                                 {{1, 0}, 0, 0}),
                  std::domain_error);
  CHECK_THROWS_AS(m_multiplicity(inert, SchwartzCase::standard, {{1, 0}, std::nullopt, 0}), std::domain_error);
}

TEST_CASE("multiplicity on E examples") {
  auto split = LocalFieldData::make(3, Ram::split, 0, 0, 0);
  QuadModel m = split.model();
  CHECK(n_multiplicity(split, SchwartzCase::standard, m.split_element(1, 1), 0) == 0);
  CHECK(n_multiplicity(split, SchwartzCase::standard, m.split_element(3, 3), 0) == 1);
  CHECK(n_multiplicity(split, SchwartzCase::standard, m.split_element(9, 1), 0) == 1);
  CHECK(n_multiplicity(split, SchwartzCase::s2, m.split_element(9, 1), 0) == 0);
  auto nonsplit = LocalFieldData::make(3, Ram::inert, 0, 0, 1);
  CHECK(n_multiplicity(nonsplit, SchwartzCase::unit, {3, 0}, 0) == 0);
  CHECK_THROWS_AS(n_multiplicity(split, SchwartzCase::standard, m.split_element(1, 0), 0), std::domain_error);
}

TEST_CASE("pair multiplicity table") {
  auto inert = LocalFieldData::make(3, Ram::inert, 0, 0, 0);
  auto ram = LocalFieldData::make(3, Ram::ramified, 0, 1, 0);
  CHECK(m_pair(inert, 0, 0) == rat(1, 2));
  CHECK(m_pair(inert, 1, 1) == rat(1, 4));
  CHECK(m_pair(ram, 0, 2) == rat(1, 18));
  CHECK(m_pair(ram, 1, 0) == 1);
  CHECK_THROWS_AS(m_pair(inert, 0, -1), std::domain_error);
  CHECK_THROWS_AS(m_pair(LocalFieldData::make(3, Ram::inert, 0, 0, 1), 0, 0), std::domain_error);
}

TEST_CASE("nonsplit multiplicity") {
  auto f = LocalFieldData::make(3, Ram::inert, 0, 0, 1);
  CherednikData g;
  g.v_lambda = 3;
  g.in_support = true;
  g.unit_product = true;
  CHECK(m_cherednik(f, g) == rat(3, 2));
  g.unit_product = false;
  CHECK(m_cherednik(f, g) == 0);
  g.unit_product = true;
  g.in_support = false;
  CHECK(m_cherednik(f, g) == 0);
  g.in_E = true;
  CHECK_THROWS_AS(m_cherednik(f, g), std::domain_error);
  CHECK_THROWS_AS(m_cherednik(LocalFieldData::make(3, Ram::inert, 0, 0, 0), CherednikData{}), std::domain_error);
}

TEST_CASE("ordinary multiplicity and its telescoping sum") {
  CHECK(m_ordinary(0, 1, 3) == rat(1, 2));
  CHECK(m_ordinary(-2, 1, 2) == rat(1, 4));
  CHECK_THROWS_AS(m_ordinary(1, 1, 3), std::domain_error);
  CHECK(ordinary_sum_check(4, 3, 1) == 4);
  for (std::uint64_t N : {2, 3, 4, 5, 7, 9})
    for (int r = -1; r <= 2; ++r) {
      CHECK(ordinary_sum_check(0, N, r) == 0);
      for (int a = 1; a <= 6; ++a) CHECK(ordinary_sum_check(a, N, r) == a);
    }
}

TEST_CASE("lattice conductor") {
  QuadModel m = QuadModel::make(3, Ram::inert, 0);
  Rational full[2][2] = {{1, 0}, {0, 1}};
  Rational order1[2][2] = {{1, 0}, {0, 3}};
  Rational order2[2][2] = {{1, 0}, {0, 9}};
  Rational scaled[2][2] = {{3, 0}, {0, 3}};
  CHECK(lattice_conductor(m, full) == 0);
  CHECK(lattice_conductor(m, order1) == 1);
  CHECK(lattice_conductor(m, order2) == 2);
  CHECK(lattice_conductor(m, scaled) == 0);
}

TEST_CASE("coset sums reproduce the closed multiplicity off E") {
  int checked = 0;
  for (const auto& cell : local_identity_grid()) {
    const auto& f = cell.f;
    if (f.ram == Ram::split || cell.u_val != 0 || !f.model().integral(cell.y)) continue;
    for (int vq = -1; vq <= 4; ++vq) {
      if (!realizable_vq_y2(f, vq)) continue;
      LocalPoint pt{cell.y, vq, 0};
      Rational q = f.model().norm(cell.y) + nonrepresented_value(f.model(), f.q_j(), vq);
      // q(y) = 0 is possible in the nearby algebra; such y are not in the domain.
      if (q == 0 || (!f.b_ram && vp(q, f.p) > 8)) continue;
      INFO(f.str(), " y1=(", cell.y.x.get_str(), ",", cell.y.y.get_str(), ") vq=", vq);
      CHECK(m_coset_sum(f, cell.c, pt) == m_multiplicity(f, cell.c, pt));
      ++checked;
    }
  }
  CHECK(checked > 900);
}

TEST_CASE("coset sums reproduce the closed multiplicity on split E") {
  for (std::uint64_t p : {2, 3, 5, 7})
    for (int v_d = 0; v_d <= 2; ++v_d) {
      auto f = LocalFieldData::make(p, Ram::split, v_d, 0, 0);
      for (const auto& y : sample_points(f))
        for (int u : {0, 1}) {
          INFO(f.str(), " y=(", y.x.get_str(), ",", y.y.get_str(), ") u=", u);
          CHECK(n_multiplicity_cosets(f, SchwartzCase::standard, y, u) ==
                n_multiplicity(f, SchwartzCase::standard, y, u));
        }
    }
  CHECK_THROWS_AS(n_multiplicity_cosets(LocalFieldData::make(3, Ram::inert, 0, 0, 0), SchwartzCase::standard,
                                        {1, 0}, 0),
                  std::domain_error);
}

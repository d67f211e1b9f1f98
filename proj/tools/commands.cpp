#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "colmez/archkernel.hpp"
#include "colmez/cmheight.hpp"
#include "colmez/localkernel.hpp"
#include "colmez/multiplicity.hpp"
#include "colmez/pseudotheta.hpp"
#include "colmez/ptheta_spec.hpp"
#include "colmez/quadfield.hpp"

namespace colmez::cli {

namespace {

const std::vector<long> kSuite = {-3, -4, -7, -8, -11, -15, -19, -20, -23, -24, -31, -163};

void require_prec(int prec) {
  if (prec < 24) throw std::invalid_argument("--prec must be at least 24");
}

std::string num(const BigReal& x, int prec) { return x.str(std::min(prec, 30)); }
std::string small(const BigReal& x) { return x.str(6); }

Rational exact(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("not an exact rational: '" + s + "'");
  r.canonicalize();
  return r;
}

Ram ram_from(const std::string& s) {
  if (s == "inert") return Ram::inert;
  if (s == "ramified") return Ram::ramified;
  if (s == "split") return Ram::split;
  throw std::invalid_argument("--ram must be inert, ramified or split, got '" + s + "'");
}

SchwartzCase case_from(const std::string& s) {
  if (s == "standard") return SchwartzCase::standard;
  if (s == "unit") return SchwartzCase::unit;
  if (s == "s2") return SchwartzCase::s2;
  throw std::invalid_argument("--case must be standard, unit or s2, got '" + s + "'");
}

// The oracle cannot tell a window from a full volume of the same size; compare values only.
std::string sqrtD(const DnVolume& v) { return v.over_sqrtD.get_str() + " |D|^(1/2)"; }

std::string point(const LocalElement& y) { return "(" + y.x.get_str() + ", " + y.y.get_str() + ")"; }

std::string csv_cell(const Json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

const std::vector<std::string> kLocalColumns = {"check", "field", "case", "point", "lhs", "series", "rhs", "pass"};

Json local_row(const std::string& check, const LocalFieldData& f, const std::string& c, const std::string& pt,
               const std::string& lhs, const std::string& series, const std::string& rhs, bool pass) {
  return Json{{"check", check}, {"field", f.str()}, {"case", c}, {"point", pt},
              {"lhs", lhs},     {"series", series}, {"rhs", rhs}, {"pass", pass}};
}

void identity_rows(Report& r, const std::vector<IdentityCell>& cells) {
  for (const auto& cell : cells) {
    IdentityReport p = local_identity_check(cell.f, cell.c, cell.y, cell.u_val);
    r.add(local_row("identity", cell.f, case_name(cell.c), point(cell.y) + " u=" + std::to_string(cell.u_val),
                    p.lhs.str(), p.lhs_series.str(), p.rhs.str(), p.pass));
  }
}

// Volumes against lattice enumeration, and multiplicities against coset sums.
void oracle_rows(Report& r, const std::vector<IdentityCell>& cells) {
  std::set<std::string> seen;
  for (const auto& cell : cells) {
    const LocalFieldData& f = cell.f;
    if (!seen.insert(f.str()).second || f.ram == Ram::split) continue;
    const int n_max = f.p == 2 || f.p == 3 ? 6 : f.p == 5 ? 3 : 2;
    for (int n = 0; n <= n_max; ++n)
      for (int a_val = -f.v_d - 1; a_val <= 3; ++a_val) {
        if (!realizable_vq_y2(f, a_val)) continue;
        Rational a = nonrepresented_value(f.model(), f.q_j(), a_val);
        DnVolume closed = volume_Dn(f, n, a_val);
        DnVolume brute = volume_Dn_oracle(f, n, a, n + f.v_d + f.v_D + 2);
        r.add(local_row("volume", f, "", "n=" + std::to_string(n) + " v(a)=" + std::to_string(a_val), sqrtD(closed),
                        sqrtD(brute), "", closed.over_sqrtD == brute.over_sqrtD));
      }
  }
  for (const auto& cell : cells) {
    const LocalFieldData& f = cell.f;
    if (f.ram == Ram::split) {
      if (cell.c != SchwartzCase::standard) continue;
      Rational closed = n_multiplicity(f, cell.c, cell.y, cell.u_val);
      Rational cosets = n_multiplicity_cosets(f, cell.c, cell.y, cell.u_val);
      r.add(local_row("cosets", f, case_name(cell.c), point(cell.y) + " u=" + std::to_string(cell.u_val),
                      closed.get_str(), cosets.get_str(), "", closed == cosets));
      continue;
    }
    if (cell.u_val != 0 || !f.model().integral(cell.y)) continue;
    for (int vq = -1; vq <= 4; ++vq) {
      if (!realizable_vq_y2(f, vq)) continue;
      Rational q = f.model().norm(cell.y) + nonrepresented_value(f.model(), f.q_j(), vq);
      if (q == 0 || (!f.b_ram && vp(q, f.p) > 8)) continue;
      LocalPoint pt{cell.y, vq, 0};
      Rational closed = m_multiplicity(f, cell.c, pt), cosets = m_coset_sum(f, cell.c, pt);
      r.add(local_row("cosets", f, case_name(cell.c), point(cell.y) + " v(q(y2))=" + std::to_string(vq),
                      closed.get_str(), cosets.get_str(), "", closed == cosets));
    }
  }
}

}  // namespace

void Report::add(Json row) {
  if (row.value("pass", true) == false) pass = false;
  rows.push_back(std::move(row));
}

std::string render(const Report& r, Format f) {
  std::ostringstream os;
  if (f == Format::json) {
    Json doc{{"command", r.command}, {"prec", r.prec}, {"pass", r.pass}, {"rows", r.rows}};
    os << doc.dump(2) << "\n";
  } else if (f == Format::csv) {
    for (std::size_t i = 0; i < r.columns.size(); ++i) os << (i ? "," : "") << r.columns[i];
    os << "\n";
    for (const auto& row : r.rows) {
      for (std::size_t i = 0; i < r.columns.size(); ++i) os << (i ? "," : "") << csv_cell(row.at(r.columns[i]));
      os << "\n";
    }
  } else {
    std::size_t passed = 0;
    for (const auto& row : r.rows) {
      for (std::size_t i = 0; i < r.columns.size(); ++i) {
        const Json& v = row.at(r.columns[i]);
        os << (i ? "  " : "") << r.columns[i] << "=" << (v.is_string() ? v.get<std::string>() : v.dump());
      }
      os << "\n";
      if (row.value("pass", true)) ++passed;
    }
    os << r.command << ": " << (r.pass ? "PASS" : "FAIL") << " (" << passed << "/" << r.rows.size() << ")\n";
  }
  return os.str();
}

Report cmd_colmez(const ColmezOptions& o) {
  require_prec(o.prec);
  if (o.suite == !o.discs.empty()) throw std::invalid_argument("give exactly one of --disc and --suite");
  const std::vector<long>& discs = o.suite ? kSuite : o.discs;
  for (long d : discs) require_fundamental(d);
  Report r{"colmez", o.prec, {"d", "h", "w", "lhs", "rhs", "diff", "tol", "pass"}, {}, true};
  BigReal tol = ten_to_minus(o.prec - 24, o.prec);
  for (long d : discs) {
    HeightReport h = colmez_check(d, o.prec);
    r.add(Json{{"d", d}, {"h", h.h}, {"w", h.w}, {"lhs", num(h.lhs, o.prec)}, {"rhs", num(h.rhs, o.prec)},
               {"diff", small(h.diff)}, {"tol", small(tol)}, {"pass", abs(h.diff) < tol}});
  }
  return r;
}

Report cmd_local(const LocalOptions& o) {
  require_prec(o.prec);
  Report r{"local", o.prec, kLocalColumns, {}, true};
  std::vector<IdentityCell> cells;
  if (o.y) {
    if (o.primes.size() != 1 || !o.ram) throw std::invalid_argument("a single cell needs one --p and --ram");
    auto f = LocalFieldData::make(static_cast<std::uint64_t>(o.primes[0]), ram_from(*o.ram), o.v_d.value_or(0),
                                  o.v_D.value_or(0), o.v_qj.value_or(0));
    SchwartzCase c = o.schwartz ? case_from(*o.schwartz) : default_case(f);
    validate_case(f, c);
    std::istringstream is(*o.y);
    std::string x, y;
    if (!(is >> x >> y)) throw std::invalid_argument("--y takes two exact coordinates, e.g. \"1 0\"");
    cells.push_back({f, c, {exact(x), exact(y)}, o.u});
  } else {
    const std::set<long> grid_primes = {2, 3, 5, 7};
    for (long p : o.primes)
      if (!grid_primes.count(p)) std::cerr << "warning: p = " << p << " is outside the grid {2, 3, 5, 7}; skipped\n";
    if (o.v_d && (*o.v_d < 0 || *o.v_d > 2))
      std::cerr << "warning: v_d = " << *o.v_d << " is outside the grid {0, 1, 2}; skipped\n";
    std::optional<Ram> ram = o.ram ? std::optional<Ram>(ram_from(*o.ram)) : std::nullopt;
    std::optional<SchwartzCase> sc = o.schwartz ? std::optional<SchwartzCase>(case_from(*o.schwartz)) : std::nullopt;
    for (const auto& cell : local_identity_grid()) {
      if (!o.primes.empty() &&
          std::find(o.primes.begin(), o.primes.end(), static_cast<long>(cell.f.p)) == o.primes.end())
        continue;
      if ((ram && cell.f.ram != *ram) || (o.v_d && cell.f.v_d != *o.v_d) || (sc && cell.c != *sc)) continue;
      cells.push_back(cell);
    }
    if (cells.empty()) throw std::invalid_argument("no grid cells match the filters");
  }
  identity_rows(r, cells);
  if (o.oracle) oracle_rows(r, cells);
  return r;
}

Report cmd_identity(bool oracle, int prec) {
  LocalOptions o;
  o.oracle = oracle;
  o.prec = prec;
  Report r = cmd_local(o);
  r.command = "identity";
  return r;
}

Report cmd_arch(const ArchOptions& o) {
  require_prec(o.prec);
  const int D = o.prec;
  if (o.check == "q0") {
    if (o.points < 2) throw std::invalid_argument("--points must be at least 2");
    Report r{"arch q0", D, {"t", "quadrature", "closed", "diff", "pass"}, {}, true};
    BigReal tol = ten_to_minus(D - 14, D), ln10 = log(BigReal(10L, D)), one(1L, D);
    // t - 1 log-spaced from 10^-3 to 999, so t runs over (1, 1000].
    for (int j = 0; j < o.points; ++j) {
      BigReal e = BigReal(-3L, D) + BigReal(static_cast<long>(j), D) * log(BigReal(999000L, D)) / ln10 /
                                        BigReal(static_cast<long>(o.points - 1), D);
      BigReal t = one + exp(e * ln10);
      BigReal quad = legendre_q(BigReal(D), t, D), closed = legendre_q0_closed(t);
      BigReal diff = abs(quad - closed);
      r.add(Json{{"t", t.str(12)}, {"quadrature", num(quad, D)}, {"closed", num(closed, D)}, {"diff", small(diff)},
                 {"pass", diff < tol}});
    }
    return r;
  }
  if (o.check == "limit") {
    if (o.rays < 1) throw std::invalid_argument("--rays must be positive");
    Report r{"arch limit", D, {"ray", "phi", "slope", "intercept", "gap", "pass"}, {}, true};
    BigReal tol = ten_to_minus(D - 19, D), gap_tol = ten_to_minus(D - 10, D);
    UpperHalfPoint z0{BigReal::parse("0.3", D), BigReal::parse("1.2", D)};
    // Radii j 10^-e keep the quadratic term below the intercept tolerance.
    const int e = 3 * D / 8;
    for (int k = 0; k < o.rays; ++k) {
      BigReal phi = const_pi(D) * BigReal(static_cast<long>(2 * k + 1), D) / BigReal(static_cast<long>(o.rays), D);
      BigReal sr(D), sv(D), srr(D), srv(D), gap(D);
      const int n = 3;
      for (int j = 1; j <= n; ++j) {
        BigReal rad = BigReal(static_cast<long>(j), D) * ten_to_minus(e, D);
        UpperHalfPoint z1{z0.x + rad * cos(phi), z0.y + rad * sin(phi)};
        BigReal dx = z1.x - z0.x, dy = z1.y - z0.y, dist = sqrt(dx * dx + dy * dy);
        AdjunctionReport a = adjunction_limit(z0, z1, D);
        sr += dist;
        sv += a.composite;
        srr += dist * dist;
        srv += dist * a.composite;
        gap = max(gap, abs(a.composite - a.simplified));
      }
      BigReal N(static_cast<long>(n), D);
      BigReal slope = (N * srv - sr * sv) / (N * srr - sr * sr);
      BigReal intercept = (sv - slope * sr) / N;
      r.add(Json{{"ray", k},
                 {"phi", phi.str(12)},
                 {"slope", slope.str(12)},
                 {"intercept", small(intercept)},
                 {"gap", small(gap)},
                 {"pass", abs(intercept) < tol && gap < gap_tol && slope.is_finite()}});
    }
    return r;
  }
  throw std::invalid_argument("--check must be q0 or limit, got '" + o.check + "'");
}

Report cmd_ptheta(const PthetaOptions& o) {
  require_prec(o.prec);
  const int D = o.prec;
  if (o.gn_demo > 0) {
    Report r{"ptheta gn-demo", D, {"N", "iwasawa_error", "residual", "recovery_error", "condition", "pass"}, {}, true};
    std::vector<long> Ns;
    std::vector<BigComplex> f;
    for (int k = 0; k < o.gn_demo; ++k) {
      Ns.push_back(k + 1);
      f.emplace_back(BigReal(Rational(1, k + 2), D), BigReal(Rational(k % 2 ? -1 : 1, k + 3), D));
    }
    GNDemoReport g = gn_separation_demo(Ns, f, D);
    std::string list;
    for (long N : g.N) list += (list.empty() ? "" : " ") + std::to_string(N);
    BigReal tol = ten_to_minus(D - 14, D);
    BigReal recovery_tol = tol * BigReal(std::max(1.0, g.condition), D);
    r.add(Json{{"N", list},
               {"iwasawa_error", small(g.iwasawa_error)},
               {"residual", small(g.residual)},
               {"recovery_error", small(g.recovery_error)},
               {"condition", BigReal(g.condition, 17).str(6)},
               {"pass", g.iwasawa_error < tol && g.recovery_error < recovery_tol}});
    return r;
  }
  if (o.spec.empty()) throw std::invalid_argument("ptheta needs --spec or --gn-demo");
  PseudoThetaSpec s = load_spec(o.spec);
  std::optional<Rational> R;
  if (o.radius) R = exact(*o.radius);
  Report r{"ptheta", D, {"g", "lhs", "rhs", "rel_error", "radius", "pass"}, {}, true};
  BigReal tol = ten_to_minus(8, D);
  for (const auto& word : o.g) {
    ApproximationReport a = approximation_check(s, parse_group_word(word, D), o.tail, D, R);
    r.add(Json{{"g", word.empty() ? "1" : word},
               {"lhs", num(a.lhs.re, D) + " " + num(a.lhs.im, D)},
               {"rhs", num(a.rhs.re, D) + " " + num(a.rhs.im, D)},
               {"rel_error", small(a.rel_error)},
               {"radius", a.radius.get_str()},
               {"pass", a.rel_error < tol}});
  }
  return r;
}

}  // namespace colmez::cli

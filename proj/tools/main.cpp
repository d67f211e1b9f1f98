#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "colmez/ptheta_spec.hpp"
#include "commands.hpp"

using namespace colmez::cli;

int main(int argc, char** argv) {
  CLI::App app{"Verification runs for heights of CM points and their local kernels"};
  app.set_config("--config", "", "plain key=value file; subcommand keys as sub.key or in a [sub] section");
  app.require_subcommand(1);
  app.fallthrough();

  int prec = 64;
  std::string format = "text";
  const std::map<std::string, Format> formats{{"json", Format::json}, {"csv", Format::csv}, {"text", Format::text}};
  app.add_option("--prec", prec, "working precision in decimal digits")->check(CLI::Range(24, 4000));
  app.add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));

  ColmezOptions colmez;
  auto* c = app.add_subcommand("colmez", "height of CM points against the L-function side");
  auto* disc = c->add_option("--disc", colmez.discs, "fundamental discriminant(s) d < 0")->allow_extra_args(false);
  c->add_flag("--suite", colmez.suite, "the twelve discriminants of the standard suite")->excludes(disc);

  LocalOptions local;
  auto* l = app.add_subcommand("local", "local identity on a slice of the grid, or at one point");
  l->add_option("--p", local.primes, "residue characteristic(s)");
  l->add_option("--ram", local.ram, "inert, ramified or split");
  l->add_option("--vd", local.v_d, "conductor exponent of the additive character");
  l->add_option("--case", local.schwartz, "standard, unit or s2");
  l->add_flag("--oracle", local.oracle, "also compare against p-adic enumeration");
  auto* y = l->add_option("--y", local.y, "one point \"x y\" in the model basis");
  l->add_option("--vD", local.v_D, "discriminant exponent (single point)")->needs(y);
  l->add_option("--vqj", local.v_qj, "v(q(j)) (single point)")->needs(y);
  l->add_option("--u", local.u, "v(u) (single point)")->needs(y);

  bool identity_oracle = false;
  auto* grid = app.add_subcommand("identity", "local identity over the full grid");
  grid->add_flag("--oracle", identity_oracle, "also compare against p-adic enumeration");

  ArchOptions arch;
  auto* a = app.add_subcommand("arch", "archimedean kernel checks");
  a->add_option("--check", arch.check, "q0 or limit")->check(CLI::IsMember({"q0", "limit"}));
  a->add_option("--points", arch.points, "grid size for q0");
  a->add_option("--rays", arch.rays, "number of rays for limit");

  PthetaOptions pt;
  auto* t = app.add_subcommand("ptheta", "pseudo-theta approximation");
  auto* spec = t->add_option("--spec", pt.spec, "spec file")->check(CLI::ExistingFile);
  t->add_option("--g", pt.g, "group word(s) such as \"n(1/2)m(2)k(pi/3)\"");
  t->add_option("--tail", pt.tail, "tail bound 10^-tail");
  t->add_option("--radius", pt.radius, "override the spec radius (exact)");
  t->add_option("--gn-demo", pt.gn_demo, "Vandermonde separation with N = 1..K")->excludes(spec);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Report r;
    if (*c) {
      colmez.prec = prec;
      r = cmd_colmez(colmez);
    } else if (*l) {
      local.prec = prec;
      r = cmd_local(local);
    } else if (*grid) {
      r = cmd_identity(identity_oracle, prec);
    } else if (*a) {
      arch.prec = prec;
      r = cmd_arch(arch);
    } else {
      pt.prec = prec;
      r = cmd_ptheta(pt);
    }
    std::cout << render(r, formats.at(format));
    if (!r.pass) std::cerr << r.command << ": some checks failed\n";
    return r.pass ? 0 : 1;
  } catch (const colmez::SpecParseError& e) {
    std::cerr << "error: spec file: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return 2;
}

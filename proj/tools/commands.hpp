#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace colmez::cli {

using Json = nlohmann::ordered_json;

enum class Format { json, csv, text };

// Every row carries exactly the listed columns, in that order.
struct Report {
  std::string command;
  int prec = 64;
  std::vector<std::string> columns;
  std::vector<Json> rows;
  bool pass = true;

  void add(Json row);
};

std::string render(const Report& r, Format f);

struct ColmezOptions {
  std::vector<long> discs;
  bool suite = false;
  int prec = 64;
};
Report cmd_colmez(const ColmezOptions& o);

struct LocalOptions {
  std::vector<long> primes;            // empty: all grid primes
  std::optional<std::string> ram;      // inert, ramified, split
  std::optional<int> v_d;
  std::optional<std::string> schwartz; // standard, unit, s2
  bool oracle = false;
  // A single cell instead of a grid slice.
  std::optional<int> v_D;
  std::optional<int> v_qj;
  std::optional<std::string> y;        // "x y" in the model basis, exact
  int u = 0;
  int prec = 64;
};
Report cmd_local(const LocalOptions& o);
Report cmd_identity(bool oracle, int prec);

struct ArchOptions {
  std::string check = "q0";
  int points = 30;
  int rays = 8;
  int prec = 64;
};
Report cmd_arch(const ArchOptions& o);

struct PthetaOptions {
  std::string spec;
  std::vector<std::string> g{""};
  int tail = 20;
  std::optional<std::string> radius;
  int gn_demo = 0;
  int prec = 64;
};
Report cmd_ptheta(const PthetaOptions& o);

}  // namespace colmez::cli

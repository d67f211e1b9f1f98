#include "colmez/ptheta_spec.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace colmez {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

bool all_digits(const std::string& s) {
  return !s.empty() && s.find_first_not_of("0123456789") == std::string::npos;
}

// Integer, fraction a/b or decimal, exactly.
Rational exact_number(const std::string& text, int line) {
  std::string t = text;
  bool neg = false;
  if (!t.empty() && (t[0] == '-' || t[0] == '+')) {
    neg = t[0] == '-';
    t = t.substr(1);
  }
  Rational r;
  auto slash = t.find('/');
  auto dot = t.find('.');
  if (slash != std::string::npos) {
    std::string a = t.substr(0, slash), b = t.substr(slash + 1);
    if (!all_digits(a) || !all_digits(b) || mpz_class(b) == 0)
      throw SpecParseError(line, "bad fraction '" + text + "'");
    r = Rational(mpz_class(a), mpz_class(b));
  } else if (dot != std::string::npos) {
    std::string a = t.substr(0, dot), b = t.substr(dot + 1);
    if ((!a.empty() && !all_digits(a)) || (!b.empty() && !all_digits(b)) || (a.empty() && b.empty()))
      throw SpecParseError(line, "bad decimal '" + text + "'");
    mpz_class den = 1;
    for (std::size_t i = 0; i < b.size(); ++i) den *= 10;
    r = Rational(mpz_class(a.empty() ? "0" : a) * den + mpz_class(b.empty() ? "0" : b), den);
  } else {
    if (!all_digits(t)) throw SpecParseError(line, "bad number '" + text + "'");
    r = Rational(mpz_class(t));
  }
  r.canonicalize();
  return neg ? Rational(-r) : r;
}

long exact_integer(const std::string& text, int line) {
  Rational r = exact_number(text, line);
  if (r.get_den() != 1 || !r.get_num().fits_slong_p()) throw SpecParseError(line, "expected an integer, got '" + text + "'");
  return r.get_num().get_si();
}

std::vector<long> integers(const std::string& s, int line) {
  std::vector<long> out;
  for (const auto& w : words(s)) out.push_back(exact_integer(w, line));
  return out;
}

ExactComplex complex_value(const std::string& s, int line) {
  auto w = words(s);
  if (w.size() != 2) throw SpecParseError(line, "expected a complex value 're im'");
  return {exact_number(w[0], line), exact_number(w[1], line)};
}

std::string join(const std::vector<long>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? " " : "") + std::to_string(xs[i]);
  return s;
}

std::string str(const ExactComplex& z) { return z.re.get_str() + " " + z.im.get_str(); }

}  // namespace

SpecParseError::SpecParseError(int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

PseudoThetaSpec parse_spec(const std::string& text) {
  PseudoThetaSpec s;
  std::istringstream is(text);
  std::string raw;
  int line = 0;
  std::set<std::string> seen;
  while (std::getline(is, raw)) {
    ++line;
    std::string t = trim(raw.substr(0, raw.find('#')));
    if (t.empty()) continue;
    auto eq = t.find('=');
    if (eq == std::string::npos) throw SpecParseError(line, "expected 'key = value'");
    std::string key = trim(t.substr(0, eq)), val = trim(t.substr(eq + 1));
    if (key != "value" && !seen.insert(key).second) throw SpecParseError(line, "duplicate key '" + key + "'");
    if (key == "gram") {
      std::istringstream rows(val);
      std::string row;
      while (std::getline(rows, row, ';')) s.gram.push_back(integers(row, line));
      if (s.gram.empty()) throw SpecParseError(line, "empty Gram matrix");
    } else if (key == "v1" || key == "v0") {
      std::vector<int> idx;
      for (long i : integers(val, line)) idx.push_back(static_cast<int>(i));
      (key == "v1" ? s.v1 : s.v0) = idx;
    } else if (key == "radius") {
      s.radius = exact_number(val, line);
    } else if (key == "default") {
      s.default_value = complex_value(val, line);
    } else if (key == "extension") {
      s.extension = complex_value(val, line);
    } else if (key == "value") {
      auto colon = val.find(':');
      if (colon == std::string::npos) throw SpecParseError(line, "expected 'value = point : re im'");
      std::vector<long> x = integers(val.substr(0, colon), line);
      if (!s.table.emplace(x, complex_value(val.substr(colon + 1), line)).second)
        throw SpecParseError(line, "repeated table point");
    } else {
      throw SpecParseError(line, "unknown key '" + key + "'");
    }
  }
  for (const char* k : {"gram", "v1", "radius"})
    if (!seen.count(k)) throw SpecParseError(line, std::string("missing key '") + k + "'");
  try {
    s.validate();
  } catch (const std::domain_error& e) {
    throw SpecParseError(line, e.what());
  }
  return s;
}

PseudoThetaSpec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open spec file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_spec(ss.str());
}

std::string serialize_spec(const PseudoThetaSpec& s) {
  std::ostringstream os;
  os << "gram = ";
  for (std::size_t i = 0; i < s.gram.size(); ++i) os << (i ? "; " : "") << join(s.gram[i]);
  std::vector<long> v1(s.v1.begin(), s.v1.end()), v0(s.v0.begin(), s.v0.end());
  os << "\nv1 = " << join(v1) << "\nv0 = " << join(v0) << "\nradius = " << s.radius.get_str()
     << "\ndefault = " << str(s.default_value) << "\nextension = " << str(s.extension) << "\n";
  for (const auto& [x, v] : s.table) os << "value = " << join(x) << " : " << str(v) << "\n";
  return os.str();
}

}  // namespace colmez

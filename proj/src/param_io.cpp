#include "nqh/param_io.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "nqh/error.hpp"

namespace nqh {

std::string write_parameters(const ParameterPoint& p) {
  std::ostringstream out;
  out << "M " << p.M() << "\nN " << p.N() << "\n";
  for (const auto& [idx, v] : p.values()) {
    out << (idx.family == Family::A ? "a " : "b ") << idx.k << " " << idx.i << " " << to_string(v) << "\n";
  }
  return out.str();
}

ParameterPoint read_parameters(std::string_view text) {
  std::optional<int> M, N;
  std::map<ParameterIndex, Rational> values;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& why) {
    throw InvalidInput("parameter text line " + std::to_string(lineno) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream fields(line);
    std::string key;
    if (!(fields >> key) || key.front() == '#') continue;
    if (key == "M" || key == "N") {
      int v = 0;
      if (!(fields >> v)) fail("expected an integer after " + key);
      (key == "M" ? M : N) = v;
    } else if (key == "a" || key == "b") {
      ParameterIndex idx{key == "a" ? Family::A : Family::B, 0, 0};
      std::string value;
      if (!(fields >> idx.k >> idx.i >> value)) fail("expected '<family> <k> <i> <num/den>'");
      if (!values.emplace(idx, parse_rational(value)).second) fail("duplicate entry " + to_string(idx));
    } else {
      fail("unknown key '" + key + "'");
    }
    std::string extra;
    if (fields >> extra) fail("trailing text '" + extra + "'");
  }
  if (!M || !N) throw InvalidInput("parameter text must define M and N");
  if (*M < 2 || *N < 2) throw InvalidInput("parameter text needs M >= 2 and N >= 2");
  return ParameterPoint(*M, *N, std::move(values));
}

ParameterPoint read_parameter_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open parameter file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return read_parameters(buf.str());
}

void write_parameter_file(const std::string& path, const ParameterPoint& p) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write parameter file " + path);
  out << write_parameters(p);
}

}  // namespace nqh

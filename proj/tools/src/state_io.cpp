#include "state_io.hpp"

#include <fstream>
#include <stdexcept>

namespace entkit::cli {

using nlohmann::json;

namespace {

Cx read_complex(const json& v) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
    return {v[0].get<double>(), v[1].get<double>()};
  throw std::invalid_argument("state file: expected a number or a [re, im] pair, got " + v.dump());
}

}  // namespace

DensityMatrix StateInput::as_density() const {
  if (density) return *density;
  return DensityMatrix::projector(*pure);
}

StateInput parse_state(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("state file: top level must be an object");
  if (!j.contains("modes") || !j["modes"].is_array()) throw std::invalid_argument("state file: missing \"modes\" array");
  StateInput in;
  in.structure = ModeStructure(j["modes"].get<std::vector<int>>());
  const int n = in.structure.n();

  std::string kind;
  if (j.contains("kind")) kind = j["kind"].get<std::string>();
  else if (j.contains("amplitudes")) kind = "pure";
  else if (j.contains("matrix")) kind = "density";
  else throw std::invalid_argument("state file: need \"amplitudes\" or \"matrix\"");

  if (kind == "pure") {
    const json& a = j.at("amplitudes");
    if (!a.is_array() || static_cast<int>(a.size()) != n)
      throw std::invalid_argument("state file: expected " + std::to_string(n) + " amplitudes");
    CVec v(n);
    for (int i = 0; i < n; ++i) v(i) = read_complex(a[i]);
    in.pure.emplace(in.structure, v);
  } else if (kind == "density") {
    const json& m = j.at("matrix");
    if (!m.is_array() || static_cast<int>(m.size()) != n)
      throw std::invalid_argument("state file: expected a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
    CMat rho(n, n);
    for (int r = 0; r < n; ++r) {
      if (!m[r].is_array() || static_cast<int>(m[r].size()) != n)
        throw std::invalid_argument("state file: matrix row " + std::to_string(r + 1) + " has the wrong length");
      for (int c = 0; c < n; ++c) rho(r, c) = read_complex(m[r][c]);
    }
    in.density.emplace(in.structure, rho);
  } else {
    throw std::invalid_argument("state file: unknown kind \"" + kind + "\"");
  }
  return in;
}

StateInput read_state_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open state file " + path);
  json j;
  try {
    f >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("state file " + path + ": " + e.what());
  }
  return parse_state(j);
}

json complex_to_json(Cx z) { return json::array({z.real(), z.imag()}); }

json state_to_json(const StateVector& psi) {
  json amps = json::array();
  for (int i = 0; i < psi.dim(); ++i) amps.push_back(complex_to_json(psi.amplitudes()(i)));
  return {{"modes", psi.structure().modes()}, {"kind", "pure"}, {"amplitudes", amps}};
}

json density_to_json(const DensityMatrix& rho) {
  json rows = json::array();
  for (int r = 0; r < rho.dim(); ++r) {
    json row = json::array();
    for (int c = 0; c < rho.dim(); ++c) row.push_back(complex_to_json(rho.entries()(r, c)));
    rows.push_back(row);
  }
  return {{"modes", rho.structure().modes()}, {"kind", "density"}, {"matrix", rows}};
}

}  // namespace entkit::cli

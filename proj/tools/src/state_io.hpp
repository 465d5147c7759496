// JSON state files:
//   {"modes": [2,2,3], "kind": "pure", "amplitudes": [[re,im], ...]}
//   {"modes": [2,2], "kind": "density", "matrix": [[[re,im], ...], ...]}
// Amplitudes run over levels 1..n. A bare number is read as a real entry.
#pragma once

#include <entkit/tensor_core.hpp>

#include <json.hpp>

#include <optional>
#include <string>

namespace entkit::cli {

struct StateInput {
  ModeStructure structure;
  std::optional<StateVector> pure;
  std::optional<DensityMatrix> density;

  // The density matrix for either kind of input.
  DensityMatrix as_density() const;
};

StateInput parse_state(const nlohmann::json& j);
StateInput read_state_file(const std::string& path);

nlohmann::json complex_to_json(Cx z);
nlohmann::json state_to_json(const StateVector& psi);
nlohmann::json density_to_json(const DensityMatrix& rho);

}  // namespace entkit::cli

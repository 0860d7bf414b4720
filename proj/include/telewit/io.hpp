#pragma once

#include <string>

#include "json.hpp"
#include "telewit/linalg.hpp"
#include "telewit/states.hpp"

namespace telewit {

using Json = nlohmann::ordered_json;

// State file: {"n": int, "matrix": n² rows of n² [re, im] pairs}.
// Unitary file: {"n": int, "matrix": n rows of n [re, im] pairs}.
// Values round-trip exactly; readers re-validate all invariants.

Json state_to_json(const DensityMatrix& rho);
DensityMatrix state_from_json(const Json& j);

Json unitary_to_json(const UnitaryMatrix& u);
UnitaryMatrix unitary_from_json(const Json& j);

void write_state_file(const DensityMatrix& rho, const std::string& path);
DensityMatrix read_state_file(const std::string& path);

void write_unitary_file(const UnitaryMatrix& u, const std::string& path);
UnitaryMatrix read_unitary_file(const std::string& path);

}  // namespace telewit

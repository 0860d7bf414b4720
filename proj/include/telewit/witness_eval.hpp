#pragma once

#include "telewit/generators.hpp"
#include "telewit/states.hpp"

namespace telewit {

// Outcome of testing one witness against one state. detected certifies that
// the state is a useful teleportation resource; not detected only means this
// particular Γ failed to show it.
struct WitnessVerdict {
  double expectation;
  double threshold;  // 1 plus the caller's margin
  bool detected;
  UnitaryMatrix defining_unitary;
};

/// ⟨Γ⟩_ρ = Tr(Γρ). Real within 1e-10 and inside [0, n] within 1e-9, both
/// enforced as consistency checks.
double expectation(const WitnessOperator& w, const DensityMatrix& rho);

WitnessVerdict decide(const WitnessOperator& w, const DensityMatrix& rho,
                      double margin = 0.0);

/// Two-qubit specialization ⟨A_z⊗σ_z + A_x⊗σ_x − A_y⊗σ_y⟩_ρ with
/// A_w = Uσ_wU†. Equals 2·expectation(witness(2,U), ρ) − 1.
double qubit_witness_value(const UnitaryMatrix& u, const DensityMatrix& rho);

/// Optimal teleportation fidelity n·F/(n+1) + 1/(n+1) for a resource with
/// fully entangled fraction F.
double fidelity_from_fef(double fef, int dim);

}  // namespace telewit

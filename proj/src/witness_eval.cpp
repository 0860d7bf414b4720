#include "telewit/witness_eval.hpp"

#include <cmath>
#include <string>

namespace telewit {

double expectation(const WitnessOperator& w, const DensityMatrix& rho) {
  if (w.dim != rho.local_dim()) {
    throw ValidationError("expectation: witness dimension " + std::to_string(w.dim) +
                          " does not match state local dimension " +
                          std::to_string(rho.local_dim()));
  }
  const Complex t = trace_product(w.matrix, rho.matrix());
  if (!(std::abs(t.imag()) <= 1e-10)) {
    throw ConsistencyError("expectation: Tr(Γρ) has imaginary part " +
                           std::to_string(t.imag()));
  }
  const double value = t.real();
  if (!(value >= -1e-9 && value <= w.dim + 1e-9)) {
    throw ConsistencyError("expectation: value " + std::to_string(value) +
                           " outside [0, " + std::to_string(w.dim) + "] envelope");
  }
  return value;
}

WitnessVerdict decide(const WitnessOperator& w, const DensityMatrix& rho,
                      double margin) {
  const double value = expectation(w, rho);
  const double threshold = 1.0 + margin;
  return WitnessVerdict{value, threshold, value > threshold, w.defining_unitary};
}

double qubit_witness_value(const UnitaryMatrix& u, const DensityMatrix& rho) {
  if (rho.local_dim() != 2) {
    throw ValidationError("qubit_witness_value: state local dimension must be 2, got " +
                          std::to_string(rho.local_dim()));
  }
  if (u.dim() != 2) {
    throw ValidationError("qubit_witness_value: unitary must be 2x2, got " +
                          std::to_string(u.dim()) + "x" + std::to_string(u.dim()));
  }
  const GeneratorSet& pauli = generators(2);
  const Matrix& sz = pauli.diagonal[0];
  const Matrix& sx = pauli.symmetric[0];
  const Matrix& sy = pauli.antisymmetric[0];
  const Matrix& um = u.matrix();
  const Matrix az = um * sz * um.adjoint();
  const Matrix ax = um * sx * um.adjoint();
  const Matrix ay = um * sy * um.adjoint();
  const Matrix observable = kron(az, sz) + kron(ax, sx) - kron(ay, sy);
  const Complex t = trace_product(observable, rho.matrix());
  if (!(std::abs(t.imag()) <= 1e-10)) {
    throw ConsistencyError("qubit_witness_value: imaginary part " +
                           std::to_string(t.imag()));
  }
  return t.real();
}

double fidelity_from_fef(double fef, int dim) {
  if (dim < 2) {
    throw ValidationError("fidelity_from_fef: dimension must be at least 2, got " +
                          std::to_string(dim));
  }
  if (!(fef >= 0.0 && fef <= 1.0)) {
    throw ValidationError("fidelity_from_fef: F = " + std::to_string(fef) +
                          " outside [0, 1]");
  }
  return dim * fef / (dim + 1) + 1.0 / (dim + 1);
}

}  // namespace telewit

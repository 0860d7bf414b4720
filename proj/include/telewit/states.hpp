#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "telewit/linalg.hpp"

namespace telewit {

// A bipartite n⊗n density matrix: Hermitian, unit trace and positive
// semidefinite within 1e-10, each checked on construction.
class DensityMatrix {
 public:
  DensityMatrix(Matrix m, int local_dim);

  int local_dim() const { return local_dim_; }
  const Matrix& matrix() const { return matrix_; }

 private:
  int local_dim_;
  Matrix matrix_;  // n²×n²
};

/// Checks all DensityMatrix invariants; the error names the violated one and
/// by how much.
DensityMatrix validate(const Matrix& m, int local_dim);

/// a|φ⟩⟨φ| + (1-a)|11⟩⟨11| with |φ⟩ = (|01⟩+|10⟩)/√2, 0 ≤ a ≤ 1.
DensityMatrix example_state(double a);

/// p|ψ+⟩⟨ψ+| + (1-p)·I/n², valid for -1/(n²-1) ≤ p ≤ 1.
DensityMatrix isotropic(int dim, double p);

/// p|ψ-⟩⟨ψ-| + (1-p)·I/4 with |ψ-⟩ = (|01⟩-|10⟩)/√2, 0 ≤ p ≤ 1.
DensityMatrix werner_qubit(double p);

/// Matrix of independent standard complex Gaussians.
Matrix ginibre(int rows, int cols, std::mt19937_64& rng);

/// G·G†/Tr(G·G†) with G a hilbert_dim×rank Ginibre matrix; rank n² draws
/// from the Hilbert-Schmidt measure.
Matrix random_density(int hilbert_dim, int rank, std::mt19937_64& rng);

/// Seeded bipartite mixed state on H_n⊗H_n, 1 ≤ rank ≤ n².
DensityMatrix random_mixed(int dim, int rank, std::uint64_t seed);

/// Haar-distributed unitary: QR of a Ginibre matrix with each Q column
/// rephased by the corresponding R diagonal phase, which removes the QR
/// phase ambiguity and makes the ensemble measure-correct.
UnitaryMatrix random_haar_unitary(int dim, std::uint64_t seed);

enum class StateFamily { example, isotropic, werner_qubit, pure, random_mixed };

StateFamily parse_family(const std::string& name);
const char* to_string(StateFamily family);

// One named state construction with its parameters; `pure` draws a Haar
// random pure bipartite state (Ginibre rank 1).
struct StateFamilySpec {
  StateFamily family = StateFamily::example;
  double a = 0.0;      // example
  double p = 0.0;      // isotropic, werner_qubit
  int dim = 2;         // isotropic, pure, random_mixed
  int rank = 1;        // random_mixed
  std::uint64_t seed = 0;
};

DensityMatrix make_state(const StateFamilySpec& spec);

}  // namespace telewit

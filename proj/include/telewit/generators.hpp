#pragma once

#include <vector>

#include "telewit/linalg.hpp"

namespace telewit {

// Traceless Hermitian operators spanning, together with the identity, all
// Hermitian n×n matrices. Every member has nonzero eigenvalues {+1, -1}.
struct GeneratorSet {
  int dim = 0;
  std::vector<Matrix> diagonal;       // |0><0| - |i><i|, i = 1..n-1
  std::vector<Matrix> symmetric;      // |k><l| + |l><k|, 0 <= k < l <= n-1
  std::vector<Matrix> antisymmetric;  // i(|k><l| - |l><k|), same pairs
};

/// Built once per dimension and cached immutably; the returned reference
/// stays valid for the lifetime of the program and is safe to share across
/// threads.
const GeneratorSet& generators(int dim);

/// (1/√n) Σ_i |ii⟩, with |ab⟩ at index a·n + b.
Vector max_entangled_state(int dim);

// Teleportation witness Γ for one choice of U. Its spectrum is {n, 0, ..., 0}
// and it equals n (U⊗I)|ψ+⟩⟨ψ+|(U†⊗I).
struct WitnessOperator {
  int dim;
  UnitaryMatrix defining_unitary;
  Matrix matrix;  // n²×n²
};

/// Assembles Γ term by term from the generator expansion:
///   (1/n)[I⊗I + n Σ_i A_i⊗λ_i − Σ_i Σ_j A_i⊗λ_j]
///   + (1/2) Σ_{k<l}(A_kl⊗λ_kl − A'_kl⊗λ'_kl),
/// with A = UλU†. The diagonal indices i, j run over 1..n-1 and the pair
/// indices over 0 <= k < l <= n-1; this index range is the one under which
/// the projector identity above holds, and the test suite enforces it.
WitnessOperator witness(int dim, const UnitaryMatrix& u);

struct LocalTerm {
  double coefficient;
  Matrix left;   // U·generator·U† on system 1
  Matrix right;  // generator on system 2
};

// Γ = constant·(I⊗I) + Σ_k c_k (A_k ⊗ B_k), the measurable form of the
// witness. Term order: diagonal pairs (i,j) lexicographic, then symmetric
// pairs, then antisymmetric pairs.
struct LocalTermDecomposition {
  int dim = 0;
  double constant = 0.0;
  std::vector<LocalTerm> terms;
};

LocalTermDecomposition local_term_decomposition(int dim, const UnitaryMatrix& u);

}  // namespace telewit

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "telewit/errors.hpp"

namespace telewit {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kUnitaryTol = 1e-10;

/// Largest entry magnitude, the max-norm used by every tolerance check here.
double max_abs(const Matrix& m);

/// ‖M − M†‖_max.
double hermiticity_defect(const Matrix& m);

/// Tr(a·b) without forming the product.
Complex trace_product(const Matrix& a, const Matrix& b);

struct EigResult {
  RealVector eigenvalues;  // ascending
  Matrix eigenvectors;     // orthonormal columns, same order
};

/// Eigendecomposition of a Hermitian matrix. Rejects non-square input and
/// input whose hermiticity defect exceeds `tol`.
EigResult hermitian_eig(const Matrix& m, double tol = kHermitianTol);

/// Kronecker product; block (i,j) of the result is a(i,j)·b.
Matrix kron(const Matrix& a, const Matrix& b);

// An n×n matrix satisfying ‖U†U − I‖_max ≤ 1e-10, checked on construction.
class UnitaryMatrix {
 public:
  explicit UnitaryMatrix(Matrix entries);

  static UnitaryMatrix identity(int dim);

  int dim() const { return static_cast<int>(entries_.rows()); }
  const Matrix& matrix() const { return entries_; }

 private:
  Matrix entries_;
};

// Coordinates for the exponential map onto U(n): exactly n² real numbers.
struct UnitaryParams {
  int dim = 0;
  RealVector theta;
};

// Hermitian basis of the n×n matrices used by unitary_from_params, in this
// fixed order:
//   [0, n-2]                        |0><0| - |i><i|,     i = 1..n-1
//   [n-1, n-1 + n(n-1)/2)           |k><l| + |l><k|,     k < l lexicographic
//   [.., .. + n(n-1)/2)             i(|k><l| - |l><k|),  same pair order
//   [n²-1]                          identity
// The ordering is part of the contract: optimizer runs are reproducible only
// if coefficient k always multiplies the same matrix.
std::vector<Matrix> hermitian_basis(int dim);

/// U = exp(iH) with H = Σ_k theta_k · hermitian_basis(dim)[k], computed by
/// eigendecomposition of H.
UnitaryMatrix unitary_from_params(const UnitaryParams& params);

}  // namespace telewit

#include "telewit/states.hpp"

#include <cmath>
#include <sstream>

#include "telewit/generators.hpp"

namespace telewit {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << std::scientific << v;
  return os.str();
}

constexpr double kStateTol = 1e-10;

}  // namespace

DensityMatrix::DensityMatrix(Matrix m, int local_dim)
    : local_dim_(local_dim), matrix_(std::move(m)) {
  if (local_dim_ < 2) {
    throw ValidationError("DensityMatrix: local dimension must be at least 2, got " +
                          std::to_string(local_dim_));
  }
  const long d2 = static_cast<long>(local_dim_) * local_dim_;
  if (matrix_.rows() != d2 || matrix_.cols() != d2) {
    throw ValidationError("DensityMatrix: expected " + std::to_string(d2) + "x" +
                          std::to_string(d2) + " matrix for local dimension " +
                          std::to_string(local_dim_) + ", got " +
                          std::to_string(matrix_.rows()) + "x" +
                          std::to_string(matrix_.cols()));
  }
  const double herm = hermiticity_defect(matrix_);
  if (!(herm <= kStateTol)) {
    throw ValidationError("DensityMatrix: not Hermitian, ‖ρ − ρ†‖_max = " +
                          fmt(herm) + " exceeds " + fmt(kStateTol));
  }
  const Complex tr = matrix_.trace();
  const double trace_defect = std::abs(tr - Complex(1.0, 0.0));
  if (!(trace_defect <= kStateTol)) {
    throw ValidationError("DensityMatrix: trace = " + fmt(tr.real()) +
                          (tr.imag() >= 0 ? "+" : "") + fmt(tr.imag()) +
                          "i, |trace − 1| = " + fmt(trace_defect) + " exceeds " +
                          fmt(kStateTol));
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(matrix_,
                                               Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw ConsistencyError("DensityMatrix: eigensolver failed to converge");
  }
  const double min_eig = solver.eigenvalues().minCoeff();
  if (!(min_eig >= -kStateTol)) {
    throw ValidationError("DensityMatrix: not positive semidefinite, minimum eigenvalue = " +
                          fmt(min_eig) + " below -" + fmt(kStateTol));
  }
}

DensityMatrix validate(const Matrix& m, int local_dim) {
  return DensityMatrix(m, local_dim);
}

DensityMatrix example_state(double a) {
  if (!(a >= 0.0 && a <= 1.0)) {
    throw ValidationError("example_state: a = " + std::to_string(a) +
                          " outside [0, 1]");
  }
  // |φ><φ| entries are exactly 1/2 on the middle block; building them
  // directly (rather than squaring a rounded 1/√2) keeps the detection
  // boundary at a = 1/2 exact.
  Matrix m = Matrix::Zero(4, 4);
  const double half_a = a / 2.0;
  m(1, 1) = half_a;
  m(1, 2) = half_a;
  m(2, 1) = half_a;
  m(2, 2) = half_a;
  m(3, 3) = 1.0 - a;  // |11><11|
  return DensityMatrix(std::move(m), 2);
}

DensityMatrix isotropic(int dim, double p) {
  if (dim < 2) {
    throw ValidationError("isotropic: dimension must be at least 2, got " +
                          std::to_string(dim));
  }
  const double lo = -1.0 / (static_cast<double>(dim) * dim - 1.0);
  if (!(p >= lo && p <= 1.0)) {
    throw ValidationError("isotropic: p = " + std::to_string(p) + " outside [" +
                          std::to_string(lo) + ", 1]");
  }
  const Vector psi = max_entangled_state(dim);
  const long d2 = static_cast<long>(dim) * dim;
  Matrix m = p * (psi * psi.adjoint());
  m += ((1.0 - p) / static_cast<double>(d2)) * Matrix::Identity(d2, d2);
  return DensityMatrix(std::move(m), dim);
}

DensityMatrix werner_qubit(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ValidationError("werner_qubit: p = " + std::to_string(p) +
                          " outside [0, 1]");
  }
  Vector psi_minus = Vector::Zero(4);
  psi_minus(1) = 1.0 / std::sqrt(2.0);
  psi_minus(2) = -1.0 / std::sqrt(2.0);
  Matrix m = p * (psi_minus * psi_minus.adjoint());
  m += ((1.0 - p) / 4.0) * Matrix::Identity(4, 4);
  return DensityMatrix(std::move(m), 2);
}

Matrix ginibre(int rows, int cols, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix g(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      g(i, j) = Complex(re, im);
    }
  }
  return g;
}

Matrix random_density(int hilbert_dim, int rank, std::mt19937_64& rng) {
  if (hilbert_dim < 1 || rank < 1 || rank > hilbert_dim) {
    throw ValidationError("random_density: rank " + std::to_string(rank) +
                          " outside [1, " + std::to_string(hilbert_dim) + "]");
  }
  const Matrix g = ginibre(hilbert_dim, rank, rng);
  Matrix m = g * g.adjoint();
  m /= m.trace().real();
  return m;
}

DensityMatrix random_mixed(int dim, int rank, std::uint64_t seed) {
  if (dim < 2) {
    throw ValidationError("random_mixed: dimension must be at least 2, got " +
                          std::to_string(dim));
  }
  const int d2 = dim * dim;
  if (rank < 1 || rank > d2) {
    throw ValidationError("random_mixed: rank = " + std::to_string(rank) +
                          " outside [1, " + std::to_string(d2) + "]");
  }
  std::mt19937_64 rng(seed);
  return DensityMatrix(random_density(d2, rank, rng), dim);
}

UnitaryMatrix random_haar_unitary(int dim, std::uint64_t seed) {
  if (dim < 1) {
    throw ValidationError("random_haar_unitary: dimension must be positive, got " +
                          std::to_string(dim));
  }
  std::mt19937_64 rng(seed);
  const Matrix g = ginibre(dim, dim, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    const Complex d = r(j, j);
    const double mag = std::abs(d);
    // Rephasing by the R diagonal fixes the QR gauge so the ensemble is
    // measure-correct and the draw is reproducible.
    const Complex phase = mag > 0.0 ? d / mag : Complex(1.0, 0.0);
    q.col(j) *= phase;
  }
  return UnitaryMatrix(std::move(q));
}

StateFamily parse_family(const std::string& name) {
  if (name == "example") return StateFamily::example;
  if (name == "isotropic") return StateFamily::isotropic;
  if (name == "werner_qubit") return StateFamily::werner_qubit;
  if (name == "pure") return StateFamily::pure;
  if (name == "random_mixed") return StateFamily::random_mixed;
  throw ValidationError("unknown state family '" + name +
                        "' (expected example, isotropic, werner_qubit, pure or "
                        "random_mixed)");
}

const char* to_string(StateFamily family) {
  switch (family) {
    case StateFamily::example: return "example";
    case StateFamily::isotropic: return "isotropic";
    case StateFamily::werner_qubit: return "werner_qubit";
    case StateFamily::pure: return "pure";
    case StateFamily::random_mixed: return "random_mixed";
  }
  return "unknown";
}

DensityMatrix make_state(const StateFamilySpec& spec) {
  switch (spec.family) {
    case StateFamily::example:
      return example_state(spec.a);
    case StateFamily::isotropic:
      return isotropic(spec.dim, spec.p);
    case StateFamily::werner_qubit:
      return werner_qubit(spec.p);
    case StateFamily::pure:
      return random_mixed(spec.dim, 1, spec.seed);
    case StateFamily::random_mixed:
      return random_mixed(spec.dim, spec.rank, spec.seed);
  }
  throw ValidationError("make_state: unknown family");
}

}  // namespace telewit

#include "telewit/linalg.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>
#include <sstream>

namespace telewit {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

}  // namespace

double max_abs(const Matrix& m) {
  if (m.size() == 0) {
    return 0.0;
  }
  return m.cwiseAbs().maxCoeff();
}

double hermiticity_defect(const Matrix& m) {
  return max_abs(m - m.adjoint());
}

Complex trace_product(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols()) {
    throw ValidationError("trace_product: incompatible shapes " +
                          std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                          " and " + std::to_string(b.rows()) + "x" +
                          std::to_string(b.cols()));
  }
  // Tr(ab) = Σ_ij a_ij b_ji
  return a.cwiseProduct(b.transpose()).sum();
}

EigResult hermitian_eig(const Matrix& m, double tol) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw ValidationError("hermitian_eig: matrix must be square and nonempty, got " +
                          std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  const double defect = hermiticity_defect(m);
  if (!(defect <= tol)) {
    throw ValidationError("hermitian_eig: hermiticity defect ‖M − M†‖_max = " +
                          fmt(defect) + " exceeds tolerance " + fmt(tol));
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
  if (solver.info() != Eigen::Success) {
    throw ConsistencyError("hermitian_eig: eigensolver failed to converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

Matrix kron(const Matrix& a, const Matrix& b) {
  return Eigen::kroneckerProduct(a, b);
}

UnitaryMatrix::UnitaryMatrix(Matrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() == 0) {
    throw ValidationError("UnitaryMatrix: matrix must be square and nonempty, got " +
                          std::to_string(entries_.rows()) + "x" +
                          std::to_string(entries_.cols()));
  }
  const auto n = entries_.rows();
  const double defect =
      max_abs(entries_.adjoint() * entries_ - Matrix::Identity(n, n));
  if (!(defect <= kUnitaryTol)) {
    throw ValidationError("UnitaryMatrix: ‖U†U − I‖_max = " + fmt(defect) +
                          " exceeds tolerance " + fmt(kUnitaryTol));
  }
}

UnitaryMatrix UnitaryMatrix::identity(int dim) {
  return UnitaryMatrix(Matrix::Identity(dim, dim));
}

std::vector<Matrix> hermitian_basis(int dim) {
  if (dim < 1) {
    throw ValidationError("hermitian_basis: dimension must be positive, got " +
                          std::to_string(dim));
  }
  std::vector<Matrix> basis;
  basis.reserve(static_cast<std::size_t>(dim) * dim);
  for (int i = 1; i < dim; ++i) {
    Matrix g = Matrix::Zero(dim, dim);
    g(0, 0) = 1.0;
    g(i, i) = -1.0;
    basis.push_back(std::move(g));
  }
  for (int k = 0; k < dim; ++k) {
    for (int l = k + 1; l < dim; ++l) {
      Matrix g = Matrix::Zero(dim, dim);
      g(k, l) = 1.0;
      g(l, k) = 1.0;
      basis.push_back(std::move(g));
    }
  }
  for (int k = 0; k < dim; ++k) {
    for (int l = k + 1; l < dim; ++l) {
      Matrix g = Matrix::Zero(dim, dim);
      g(k, l) = Complex(0.0, 1.0);
      g(l, k) = Complex(0.0, -1.0);
      basis.push_back(std::move(g));
    }
  }
  basis.push_back(Matrix::Identity(dim, dim));
  return basis;
}

UnitaryMatrix unitary_from_params(const UnitaryParams& params) {
  const int n = params.dim;
  if (n < 1) {
    throw ValidationError("unitary_from_params: dimension must be positive, got " +
                          std::to_string(n));
  }
  if (params.theta.size() != static_cast<long>(n) * n) {
    throw ValidationError("unitary_from_params: expected n² = " +
                          std::to_string(n * n) + " coefficients, got " +
                          std::to_string(params.theta.size()));
  }

  // H = Σ θ_k G_k accumulated entrywise in the hermitian_basis order; the
  // basis matrices themselves are never materialized on this hot path.
  Matrix h = Matrix::Zero(n, n);
  int idx = 0;
  for (int i = 1; i < n; ++i, ++idx) {
    const double t = params.theta(idx);
    h(0, 0) += t;
    h(i, i) -= t;
  }
  for (int k = 0; k < n; ++k) {
    for (int l = k + 1; l < n; ++l, ++idx) {
      const double t = params.theta(idx);
      h(k, l) += t;
      h(l, k) += t;
    }
  }
  for (int k = 0; k < n; ++k) {
    for (int l = k + 1; l < n; ++l, ++idx) {
      const double t = params.theta(idx);
      h(k, l) += Complex(0.0, t);
      h(l, k) += Complex(0.0, -t);
    }
  }
  const double t_id = params.theta(idx);
  for (int i = 0; i < n; ++i) {
    h(i, i) += t_id;
  }

  // exp(iH) through the spectral decomposition of H; exact to solver
  // tolerance at these sizes.
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  if (solver.info() != Eigen::Success) {
    throw ConsistencyError("unitary_from_params: eigensolver failed to converge");
  }
  Vector phases(n);
  for (int i = 0; i < n; ++i) {
    phases(i) = std::polar(1.0, solver.eigenvalues()(i));
  }
  Matrix u = solver.eigenvectors() * phases.asDiagonal() *
             solver.eigenvectors().adjoint();
  return UnitaryMatrix(std::move(u));
}

}  // namespace telewit

#include <cmath>

#include "doctest.h"
#include "telewit/generators.hpp"
#include "telewit/states.hpp"

using namespace telewit;

namespace {

// n (U⊗I)|ψ+⟩⟨ψ+|(U†⊗I), the projector form the assembled witness must match.
Matrix rotated_projector(int n, const UnitaryMatrix& u) {
  const Vector psi = max_entangled_state(n);
  const Vector v = kron(u.matrix(), Matrix::Identity(n, n)) * psi;
  return Matrix(static_cast<double>(n) * (v * v.adjoint()));
}

}  // namespace

TEST_CASE("generators at n=2 are the Pauli matrices") {
  const GeneratorSet& g = generators(2);
  REQUIRE(g.diagonal.size() == 1);
  REQUIRE(g.symmetric.size() == 1);
  REQUIRE(g.antisymmetric.size() == 1);

  Matrix sz(2, 2), sx(2, 2), sy(2, 2);
  sz << 1, 0, 0, -1;
  sx << 0, 1, 1, 0;
  sy << 0, Complex(0, 1), Complex(0, -1), 0;  // i(|0><1| - |1><0|)
  CHECK(max_abs(g.diagonal[0] - sz) == 0.0);
  CHECK(max_abs(g.symmetric[0] - sx) == 0.0);
  CHECK(max_abs(g.antisymmetric[0] - sy) == 0.0);
}

TEST_CASE("generator counts, hermiticity and spectra") {
  for (int n : {2, 3, 4, 5}) {
    const GeneratorSet& g = generators(n);
    CHECK(static_cast<int>(g.diagonal.size()) == n - 1);
    CHECK(static_cast<int>(g.symmetric.size()) == n * (n - 1) / 2);
    CHECK(static_cast<int>(g.antisymmetric.size()) == n * (n - 1) / 2);

    auto check_member = [n](const Matrix& m) {
      CHECK(hermiticity_defect(m) <= 1e-14);
      CHECK(std::abs(m.trace()) <= 1e-14);
      // nonzero eigenvalues are exactly ±1
      const EigResult e = hermitian_eig(m);
      for (int i = 0; i < n; ++i) {
        const double v = e.eigenvalues(i);
        CHECK((std::abs(v) <= 1e-12 || std::abs(std::abs(v) - 1.0) <= 1e-12));
      }
      CHECK(std::abs(e.eigenvalues.minCoeff() + 1.0) <= 1e-12);
      CHECK(std::abs(e.eigenvalues.maxCoeff() - 1.0) <= 1e-12);
    };
    for (const Matrix& m : g.diagonal) check_member(m);
    for (const Matrix& m : g.symmetric) check_member(m);
    for (const Matrix& m : g.antisymmetric) check_member(m);
  }
  CHECK_THROWS_AS(generators(1), ValidationError);
}

TEST_CASE("generators plus identity span the Hermitian matrices") {
  std::mt19937_64 rng(71);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int n : {2, 3}) {
    const GeneratorSet& g = generators(n);
    std::vector<Matrix> basis;
    basis.push_back(Matrix::Identity(n, n));
    for (const Matrix& m : g.diagonal) basis.push_back(m);
    for (const Matrix& m : g.symmetric) basis.push_back(m);
    for (const Matrix& m : g.antisymmetric) basis.push_back(m);
    REQUIRE(static_cast<int>(basis.size()) == n * n);

    // Solve for real coefficients by least squares over stacked (Re, Im).
    Eigen::MatrixXd design(2 * n * n, n * n);
    for (std::size_t c = 0; c < basis.size(); ++c) {
      long r = 0;
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          design(r++, static_cast<long>(c)) = basis[c](i, j).real();
          design(r++, static_cast<long>(c)) = basis[c](i, j).imag();
        }
      }
    }
    const auto solver = design.colPivHouseholderQr();
    for (int trial = 0; trial < 20; ++trial) {
      Matrix h(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) h(i, j) = Complex(gauss(rng), gauss(rng));
      h = Matrix((h + h.adjoint()) / 2.0);
      Eigen::VectorXd target(2 * n * n);
      long r = 0;
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          target(r++) = h(i, j).real();
          target(r++) = h(i, j).imag();
        }
      }
      const Eigen::VectorXd coeff = solver.solve(target);
      Matrix rebuilt = Matrix::Zero(n, n);
      for (std::size_t c = 0; c < basis.size(); ++c) {
        rebuilt += coeff(static_cast<long>(c)) * basis[c];
      }
      CHECK(max_abs(rebuilt - h) <= 1e-10);
    }
  }
}

TEST_CASE("max_entangled_state is the uniform diagonal superposition") {
  const Vector psi2 = max_entangled_state(2);
  CHECK(std::abs(psi2(0) - Complex(1.0 / std::sqrt(2.0), 0)) <= 1e-15);
  CHECK(std::abs(psi2(1)) == 0.0);
  CHECK(std::abs(psi2(2)) == 0.0);
  CHECK(std::abs(psi2(3) - Complex(1.0 / std::sqrt(2.0), 0)) <= 1e-15);

  for (int n = 2; n <= 8; ++n) {
    const Vector psi = max_entangled_state(n);
    CHECK(std::abs(psi.squaredNorm() - 1.0) <= 1e-12);
  }
  CHECK_THROWS_AS(max_entangled_state(1), ValidationError);
}

TEST_CASE("witness at n=2, U=I is twice the Bell projector") {
  const WitnessOperator w = witness(2, UnitaryMatrix::identity(2));
  const Vector psi = max_entangled_state(2);
  const Matrix expected = 2.0 * (psi * psi.adjoint());
  CHECK(max_abs(w.matrix - expected) <= 1e-14);
}

TEST_CASE("witness at n=2, U=sigma_x projects onto the flipped Bell state") {
  Matrix sx(2, 2);
  sx << 0, 1, 1, 0;
  const WitnessOperator w = witness(2, UnitaryMatrix(sx));
  Vector phi = Vector::Zero(4);
  phi(1) = 1.0 / std::sqrt(2.0);
  phi(2) = 1.0 / std::sqrt(2.0);
  CHECK(max_abs(w.matrix - Matrix(2.0 * (phi * phi.adjoint()))) <= 1e-14);
}

TEST_CASE("witness equals the rotated projector for random unitaries") {
  for (int n : {2, 3, 4}) {
    for (int trial = 0; trial < 5; ++trial) {
      const UnitaryMatrix u = random_haar_unitary(n, 100 * n + trial);
      const WitnessOperator w = witness(n, u);
      CHECK(max_abs(w.matrix - rotated_projector(n, u)) <= 1e-10);
    }
  }
}

TEST_CASE("witness spectrum is {n, 0, ..., 0}") {
  for (int n : {2, 3, 4}) {
    const UnitaryMatrix u = random_haar_unitary(n, 555 + n);
    const EigResult e = hermitian_eig(witness(n, u).matrix);
    CHECK(std::abs(e.eigenvalues.maxCoeff() - n) <= 1e-9);
    for (int i = 0; i + 1 < n * n; ++i) {
      CHECK(std::abs(e.eigenvalues(i)) <= 1e-9);
    }
  }
}

TEST_CASE("witness covariance under left multiplication") {
  for (int n : {2, 3}) {
    const UnitaryMatrix u = random_haar_unitary(n, 91 + n);
    const UnitaryMatrix v = random_haar_unitary(n, 191 + n);
    const UnitaryMatrix vu = UnitaryMatrix(Matrix(v.matrix() * u.matrix()));
    const Matrix vi = kron(v.matrix(), Matrix::Identity(n, n));
    const Matrix expected = vi * witness(n, u).matrix * vi.adjoint();
    CHECK(max_abs(witness(n, vu).matrix - expected) <= 1e-10);
  }
}

TEST_CASE("witness rejects mismatched dimensions") {
  CHECK_THROWS_AS(witness(3, UnitaryMatrix::identity(2)), ValidationError);
  CHECK_THROWS_AS(witness(1, UnitaryMatrix::identity(1)), ValidationError);
}

TEST_CASE("local terms at n=2, U=I carry the Pauli coefficients") {
  const LocalTermDecomposition dec = local_term_decomposition(2, UnitaryMatrix::identity(2));
  CHECK(dec.constant == 0.5);
  REQUIRE(dec.terms.size() == 3);
  CHECK(dec.terms[0].coefficient == 0.5);   // σ_z ⊗ σ_z
  CHECK(dec.terms[1].coefficient == 0.5);   // σ_x ⊗ σ_x
  CHECK(dec.terms[2].coefficient == -0.5);  // σ_y ⊗ σ_y
  const GeneratorSet& g = generators(2);
  CHECK(max_abs(dec.terms[0].left - g.diagonal[0]) <= 1e-15);
  CHECK(max_abs(dec.terms[0].right - g.diagonal[0]) == 0.0);
  CHECK(max_abs(dec.terms[1].left - g.symmetric[0]) <= 1e-15);
  CHECK(max_abs(dec.terms[2].left - g.antisymmetric[0]) <= 1e-15);
}

TEST_CASE("local terms at n=3, U=I show the delta-minus-1/n pattern") {
  const LocalTermDecomposition dec = local_term_decomposition(3, UnitaryMatrix::identity(3));
  // 4 diagonal pairs + 3 symmetric + 3 antisymmetric
  REQUIRE(dec.terms.size() == 10);
  CHECK(dec.constant == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  int diag_equal = 0;
  int diag_cross = 0;
  for (int k = 0; k < 4; ++k) {
    const double c = dec.terms[static_cast<std::size_t>(k)].coefficient;
    if (std::abs(c - 2.0 / 3.0) <= 1e-15) ++diag_equal;
    if (std::abs(c + 1.0 / 3.0) <= 1e-15) ++diag_cross;
  }
  CHECK(diag_equal == 2);
  CHECK(diag_cross == 2);
  for (int k = 4; k < 7; ++k) {
    CHECK(dec.terms[static_cast<std::size_t>(k)].coefficient == 0.5);
  }
  for (int k = 7; k < 10; ++k) {
    CHECK(dec.terms[static_cast<std::size_t>(k)].coefficient == -0.5);
  }
}

TEST_CASE("local term decomposition reconstructs the witness") {
  for (int n : {2, 3, 4}) {
    const UnitaryMatrix u = random_haar_unitary(n, 7000 + n);
    const WitnessOperator w = witness(n, u);
    const LocalTermDecomposition dec = local_term_decomposition(n, u);
    CHECK(static_cast<int>(dec.terms.size()) + 1 ==
          (n - 1) * (n - 1) + n * (n - 1) + 1);

    const long d2 = static_cast<long>(n) * n;
    Matrix rebuilt = dec.constant * Matrix::Identity(d2, d2);
    for (const LocalTerm& term : dec.terms) {
      rebuilt += term.coefficient * kron(term.left, term.right);
    }
    CHECK(max_abs(rebuilt - w.matrix) <= 1e-10);

    // every left observable is a rotated generator and every right one plain
    const Matrix& um = u.matrix();
    const GeneratorSet& g = generators(n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < g.diagonal.size(); ++i) {
      for (std::size_t j = 0; j < g.diagonal.size(); ++j, ++k) {
        CHECK(max_abs(dec.terms[k].left -
                      Matrix(um * g.diagonal[i] * um.adjoint())) <= 1e-12);
        CHECK(max_abs(dec.terms[k].right - g.diagonal[j]) == 0.0);
      }
    }
    for (std::size_t p = 0; p < g.symmetric.size(); ++p, ++k) {
      CHECK(max_abs(dec.terms[k].left -
                    Matrix(um * g.symmetric[p] * um.adjoint())) <= 1e-12);
      CHECK(max_abs(dec.terms[k].right - g.symmetric[p]) == 0.0);
    }
    for (std::size_t p = 0; p < g.antisymmetric.size(); ++p, ++k) {
      CHECK(max_abs(dec.terms[k].left -
                    Matrix(um * g.antisymmetric[p] * um.adjoint())) <= 1e-12);
      CHECK(max_abs(dec.terms[k].right - g.antisymmetric[p]) == 0.0);
    }
  }
}

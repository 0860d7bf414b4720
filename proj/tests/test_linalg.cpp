#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "telewit/linalg.hpp"

using namespace telewit;

namespace {

Matrix random_hermitian(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix g(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      g(i, j) = Complex(gauss(rng), gauss(rng));
    }
  }
  return Matrix((g + g.adjoint()) / 2.0);
}

Matrix pauli_x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Matrix pauli_z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

}  // namespace

TEST_CASE("hermitian_eig on diagonal matrices") {
  const EigResult e2 = hermitian_eig(pauli_z());
  CHECK(e2.eigenvalues(0) == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(e2.eigenvalues(1) == doctest::Approx(1.0).epsilon(1e-14));

  Matrix d3 = Matrix::Zero(3, 3);
  d3(0, 0) = 1.0;
  d3(1, 1) = -1.0;
  const EigResult e3 = hermitian_eig(d3);
  CHECK(e3.eigenvalues(0) == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(e3.eigenvalues(1) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(e3.eigenvalues(2) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("hermitian_eig reconstruction and orthonormality") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix m = random_hermitian(4, rng);
    const EigResult e = hermitian_eig(m);
    const Matrix rebuilt = e.eigenvectors *
                           e.eigenvalues.cast<Complex>().asDiagonal() *
                           e.eigenvectors.adjoint();
    CHECK(max_abs(rebuilt - m) <= 1e-9);
    CHECK(max_abs(e.eigenvectors.adjoint() * e.eigenvectors - Matrix::Identity(4, 4)) <=
          1e-10);
    for (int i = 1; i < 4; ++i) {
      CHECK(e.eigenvalues(i) >= e.eigenvalues(i - 1));
    }
  }
}

TEST_CASE("hermitian_eig rejects bad input") {
  CHECK_THROWS_AS(hermitian_eig(Matrix::Zero(2, 3)), ValidationError);

  Matrix skew(2, 2);
  skew << 0, 1, -1, 0;  // antisymmetric real, not Hermitian
  CHECK_THROWS_WITH_AS(hermitian_eig(skew),
                       doctest::Contains("hermiticity defect"), ValidationError);
}

TEST_CASE("kron identities and block structure") {
  const Matrix i2 = Matrix::Identity(2, 2);
  CHECK(max_abs(kron(i2, i2) - Matrix::Identity(4, 4)) == 0.0);

  const Matrix zz = kron(pauli_z(), pauli_z());
  Matrix expected_zz = Matrix::Zero(4, 4);
  expected_zz(0, 0) = 1;
  expected_zz(1, 1) = -1;
  expected_zz(2, 2) = -1;
  expected_zz(3, 3) = 1;
  CHECK(max_abs(zz - expected_zz) == 0.0);

  // σ_x⊗σ_z has σ_z in the off-diagonal blocks.
  const Matrix xz = kron(pauli_x(), pauli_z());
  Matrix expected_xz = Matrix::Zero(4, 4);
  expected_xz.block(0, 2, 2, 2) = pauli_z();
  expected_xz.block(2, 0, 2, 2) = pauli_z();
  CHECK(max_abs(xz - expected_xz) == 0.0);
}

TEST_CASE("kron is bilinear") {
  std::mt19937_64 rng(23);
  std::normal_distribution<double> gauss(0.0, 1.0);
  auto random3 = [&]() {
    Matrix m(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m(i, j) = Complex(gauss(rng), gauss(rng));
    return m;
  };
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix a = random3();
    const Matrix b = random3();
    const Matrix c = random3();
    CHECK(max_abs(kron(a + b, c) - (kron(a, c) + kron(b, c))) <= 1e-12);
    CHECK(max_abs(kron(a, b + c) - (kron(a, b) + kron(a, c))) <= 1e-12);
  }
}

TEST_CASE("UnitaryMatrix validates its invariant") {
  CHECK_NOTHROW(UnitaryMatrix::identity(3));
  Matrix not_unitary = Matrix::Identity(2, 2);
  not_unitary(0, 0) = 1.5;
  CHECK_THROWS_AS(UnitaryMatrix{not_unitary}, ValidationError);
  CHECK_THROWS_AS(UnitaryMatrix{Matrix::Zero(2, 3)}, ValidationError);
}

TEST_CASE("hermitian_basis has n² Hermitian members in the documented order") {
  for (int n : {2, 3, 4}) {
    const auto basis = hermitian_basis(n);
    REQUIRE(static_cast<int>(basis.size()) == n * n);
    for (const Matrix& g : basis) {
      CHECK(hermiticity_defect(g) == 0.0);
    }
    // first block: |0><0| - |i><i|
    CHECK(basis[0](0, 0) == Complex(1, 0));
    CHECK(basis[0](1, 1) == Complex(-1, 0));
    // last member is the identity
    CHECK(max_abs(basis.back() - Matrix::Identity(n, n)) == 0.0);
  }
}

TEST_CASE("unitary_from_params maps zero to the identity") {
  for (int n : {2, 3, 5}) {
    UnitaryParams p{n, RealVector::Zero(n * n)};
    const UnitaryMatrix u = unitary_from_params(p);
    CHECK(max_abs(u.matrix() - Matrix::Identity(n, n)) <= 1e-14);
  }
}

TEST_CASE("unitary_from_params matches the closed form on the sigma_x axis") {
  // basis order at n = 2: [σ_z, σ_x, σ_y, I]; index 1 drives σ_x.
  UnitaryParams p{2, RealVector::Zero(4)};
  p.theta(1) = std::numbers::pi / 2.0;
  const UnitaryMatrix u = unitary_from_params(p);
  const Matrix expected = Complex(0.0, 1.0) * pauli_x();  // cos(π/2)I + i sin(π/2)σ_x
  CHECK(max_abs(u.matrix() - expected) <= 1e-12);
}

TEST_CASE("unitary_from_params agrees with a basis-built exponential") {
  std::mt19937_64 rng(37);
  std::uniform_real_distribution<double> uniform(-std::numbers::pi, std::numbers::pi);
  const int n = 3;
  const auto basis = hermitian_basis(n);
  for (int trial = 0; trial < 5; ++trial) {
    UnitaryParams p{n, RealVector::Zero(n * n)};
    Matrix h = Matrix::Zero(n, n);
    for (int k = 0; k < n * n; ++k) {
      p.theta(k) = uniform(rng);
      h += p.theta(k) * basis[static_cast<std::size_t>(k)];
    }
    const EigResult e = hermitian_eig(h);
    Vector phases(n);
    for (int i = 0; i < n; ++i) phases(i) = std::polar(1.0, e.eigenvalues(i));
    const Matrix expected = e.eigenvectors * phases.asDiagonal() * e.eigenvectors.adjoint();
    CHECK(max_abs(unitary_from_params(p).matrix() - expected) <= 1e-12);
  }
}

TEST_CASE("unitary_from_params output is always unitary") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> uniform(-std::numbers::pi, std::numbers::pi);
  for (int trial = 0; trial < 100; ++trial) {
    UnitaryParams p{3, RealVector::Zero(9)};
    for (int k = 0; k < 9; ++k) {
      p.theta(k) = uniform(rng);
    }
    const UnitaryMatrix u = unitary_from_params(p);  // ctor enforces the invariant
    CHECK(max_abs(u.matrix().adjoint() * u.matrix() - Matrix::Identity(3, 3)) <= 1e-10);
  }
}

TEST_CASE("unitary_from_params rejects a wrong coefficient count") {
  CHECK_THROWS_AS(unitary_from_params(UnitaryParams{2, RealVector::Zero(3)}),
                  ValidationError);
  CHECK_THROWS_AS(unitary_from_params(UnitaryParams{0, RealVector::Zero(0)}),
                  ValidationError);
}

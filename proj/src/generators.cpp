#include "telewit/generators.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <string>

namespace telewit {

namespace {

GeneratorSet build_generators(int dim) {
  GeneratorSet set;
  set.dim = dim;
  set.diagonal.reserve(static_cast<std::size_t>(dim) - 1);
  for (int i = 1; i < dim; ++i) {
    Matrix g = Matrix::Zero(dim, dim);
    g(0, 0) = 1.0;
    g(i, i) = -1.0;
    set.diagonal.push_back(std::move(g));
  }
  const std::size_t pairs = static_cast<std::size_t>(dim) * (dim - 1) / 2;
  set.symmetric.reserve(pairs);
  set.antisymmetric.reserve(pairs);
  for (int k = 0; k < dim; ++k) {
    for (int l = k + 1; l < dim; ++l) {
      Matrix s = Matrix::Zero(dim, dim);
      s(k, l) = 1.0;
      s(l, k) = 1.0;
      set.symmetric.push_back(std::move(s));
      Matrix a = Matrix::Zero(dim, dim);
      a(k, l) = Complex(0.0, 1.0);
      a(l, k) = Complex(0.0, -1.0);
      set.antisymmetric.push_back(std::move(a));
    }
  }
  return set;
}

}  // namespace

const GeneratorSet& generators(int dim) {
  if (dim < 2) {
    throw ValidationError("generators: dimension must be at least 2, got " +
                          std::to_string(dim));
  }
  // Built once per dimension; map nodes are stable, so handing out
  // references to the cached immutable sets is safe.
  static std::mutex cache_mutex;
  static std::map<int, GeneratorSet> cache;
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto it = cache.find(dim);
  if (it == cache.end()) {
    it = cache.emplace(dim, build_generators(dim)).first;
  }
  return it->second;
}

Vector max_entangled_state(int dim) {
  if (dim < 2) {
    throw ValidationError("max_entangled_state: dimension must be at least 2, got " +
                          std::to_string(dim));
  }
  Vector psi = Vector::Zero(static_cast<long>(dim) * dim);
  const double amp = 1.0 / std::sqrt(static_cast<double>(dim));
  for (int i = 0; i < dim; ++i) {
    psi(static_cast<long>(i) * dim + i) = amp;
  }
  return psi;
}

WitnessOperator witness(int dim, const UnitaryMatrix& u) {
  if (dim < 2) {
    throw ValidationError("witness: dimension must be at least 2, got " +
                          std::to_string(dim));
  }
  if (u.dim() != dim) {
    throw ValidationError("witness: unitary is " + std::to_string(u.dim()) + "x" +
                          std::to_string(u.dim()) + " but the requested dimension is " +
                          std::to_string(dim));
  }

  const GeneratorSet& gen = generators(dim);
  const Matrix& um = u.matrix();
  auto rotate = [&um](const Matrix& g) { return Matrix(um * g * um.adjoint()); };

  std::vector<Matrix> a_diag;
  a_diag.reserve(gen.diagonal.size());
  for (const Matrix& g : gen.diagonal) {
    a_diag.push_back(rotate(g));
  }

  const long d2 = static_cast<long>(dim) * dim;
  Matrix w = Matrix::Identity(d2, d2);
  for (std::size_t i = 0; i < gen.diagonal.size(); ++i) {
    w += static_cast<double>(dim) * kron(a_diag[i], gen.diagonal[i]);
  }
  for (std::size_t i = 0; i < gen.diagonal.size(); ++i) {
    for (std::size_t j = 0; j < gen.diagonal.size(); ++j) {
      w -= kron(a_diag[i], gen.diagonal[j]);
    }
  }
  w /= static_cast<double>(dim);
  for (std::size_t p = 0; p < gen.symmetric.size(); ++p) {
    w += 0.5 * kron(rotate(gen.symmetric[p]), gen.symmetric[p]);
    w -= 0.5 * kron(rotate(gen.antisymmetric[p]), gen.antisymmetric[p]);
  }

  const double defect = hermiticity_defect(w);
  if (!(defect <= 1e-12)) {
    throw ConsistencyError("witness: assembled operator has hermiticity defect " +
                           std::to_string(defect));
  }
  return WitnessOperator{dim, u, std::move(w)};
}

LocalTermDecomposition local_term_decomposition(int dim, const UnitaryMatrix& u) {
  if (dim < 2) {
    throw ValidationError("local_term_decomposition: dimension must be at least 2, got " +
                          std::to_string(dim));
  }
  if (u.dim() != dim) {
    throw ValidationError("local_term_decomposition: unitary is " +
                          std::to_string(u.dim()) + "x" + std::to_string(u.dim()) +
                          " but the requested dimension is " + std::to_string(dim));
  }

  const GeneratorSet& gen = generators(dim);
  const Matrix& um = u.matrix();
  auto rotate = [&um](const Matrix& g) { return Matrix(um * g * um.adjoint()); };

  LocalTermDecomposition dec;
  dec.dim = dim;
  dec.constant = 1.0 / dim;
  dec.terms.reserve((gen.diagonal.size() * gen.diagonal.size()) +
                    2 * gen.symmetric.size());

  // Coefficient on A_i⊗λ_j is δ_ij − 1/n; pair terms carry ±1/2.
  std::vector<Matrix> a_diag;
  a_diag.reserve(gen.diagonal.size());
  for (const Matrix& g : gen.diagonal) {
    a_diag.push_back(rotate(g));
  }
  for (std::size_t i = 0; i < gen.diagonal.size(); ++i) {
    for (std::size_t j = 0; j < gen.diagonal.size(); ++j) {
      const double c = (i == j ? 1.0 : 0.0) - 1.0 / dim;
      dec.terms.push_back(LocalTerm{c, a_diag[i], gen.diagonal[j]});
    }
  }
  for (std::size_t p = 0; p < gen.symmetric.size(); ++p) {
    dec.terms.push_back(LocalTerm{0.5, rotate(gen.symmetric[p]), gen.symmetric[p]});
  }
  for (std::size_t p = 0; p < gen.antisymmetric.size(); ++p) {
    dec.terms.push_back(
        LocalTerm{-0.5, rotate(gen.antisymmetric[p]), gen.antisymmetric[p]});
  }
  return dec;
}

}  // namespace telewit

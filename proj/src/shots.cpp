#include "telewit/shots.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "telewit/util.hpp"

namespace telewit {

namespace {

constexpr double kClusterTol = 1e-9;

struct SpectralOutcomes {
  std::vector<double> values;      // one per distinct eigenvalue
  std::vector<Matrix> projectors;  // aggregated over the degenerate subspace
};

// Groups the ascending eigenvalues into distinct outcomes; generators at
// n >= 3 carry a degenerate 0 eigenvalue that must map to a single outcome.
SpectralOutcomes spectral_outcomes(const Matrix& observable) {
  const EigResult eig = hermitian_eig(observable);
  const int n = static_cast<int>(eig.eigenvalues.size());
  SpectralOutcomes out;
  int start = 0;
  while (start < n) {
    int stop = start + 1;
    while (stop < n && eig.eigenvalues(stop) - eig.eigenvalues(stop - 1) <= kClusterTol) {
      ++stop;
    }
    double value = 0.0;
    Matrix projector = Matrix::Zero(observable.rows(), observable.cols());
    for (int i = start; i < stop; ++i) {
      value += eig.eigenvalues(i);
      projector += eig.eigenvectors.col(i) * eig.eigenvectors.col(i).adjoint();
    }
    out.values.push_back(value / (stop - start));
    out.projectors.push_back(std::move(projector));
    start = stop;
  }
  return out;
}

}  // namespace

Allocation parse_allocation(const std::string& name) {
  if (name == "uniform") return Allocation::uniform;
  if (name == "proportional") return Allocation::proportional;
  throw ValidationError("unknown allocation '" + name +
                        "' (expected uniform or proportional)");
}

const char* to_string(Allocation allocation) {
  switch (allocation) {
    case Allocation::uniform: return "uniform";
    case Allocation::proportional: return "proportional";
  }
  return "unknown";
}

PairSample measure_pair(const Matrix& a, const Matrix& b,
                        const DensityMatrix& rho, long shots,
                        std::uint64_t seed) {
  const int n = rho.local_dim();
  if (a.rows() != n || a.cols() != n || b.rows() != n || b.cols() != n) {
    throw ValidationError("measure_pair: observables must be " + std::to_string(n) +
                          "x" + std::to_string(n) + " to match the state");
  }
  if (shots < 1) {
    throw ValidationError("measure_pair: shots must be at least 1, got " +
                          std::to_string(shots));
  }
  const SpectralOutcomes oa = spectral_outcomes(a);
  const SpectralOutcomes ob = spectral_outcomes(b);

  std::vector<double> products;
  std::vector<double> probabilities;
  products.reserve(oa.values.size() * ob.values.size());
  probabilities.reserve(products.capacity());
  for (std::size_t i = 0; i < oa.values.size(); ++i) {
    for (std::size_t j = 0; j < ob.values.size(); ++j) {
      const Complex p =
          trace_product(kron(oa.projectors[i], ob.projectors[j]), rho.matrix());
      if (!(p.real() >= -1e-9)) {
        throw ConsistencyError("measure_pair: outcome probability " +
                               std::to_string(p.real()) + " is negative");
      }
      products.push_back(oa.values[i] * ob.values[j]);
      probabilities.push_back(std::max(p.real(), 0.0));
    }
  }
  const double total =
      std::accumulate(probabilities.begin(), probabilities.end(), 0.0);
  if (!(std::abs(total - 1.0) <= 1e-9)) {
    throw ConsistencyError("measure_pair: outcome probabilities sum to " +
                           std::to_string(total) + ", expected 1 within 1e-9");
  }

  std::vector<double> cumulative(probabilities.size());
  std::partial_sum(probabilities.begin(), probabilities.end(), cumulative.begin());
  cumulative.back() = total;  // guards the upper_bound against roundoff

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(0.0, total);
  double sum = 0.0;
  double sum_sq = 0.0;
  for (long s = 0; s < shots; ++s) {
    const double u = uniform(rng);
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    const std::size_t idx = std::min<std::size_t>(
        static_cast<std::size_t>(it - cumulative.begin()), products.size() - 1);
    const double x = products[idx];
    sum += x;
    sum_sq += x * x;
  }
  const double mean = sum / static_cast<double>(shots);
  double variance = 0.0;
  if (shots > 1) {
    variance = (sum_sq - static_cast<double>(shots) * mean * mean) /
               static_cast<double>(shots - 1);
    variance = std::max(variance, 0.0);
  }
  return PairSample{mean, variance};
}

namespace {

// Splits plan.total_shots across the terms: uniform, or proportional to
// |coefficient| on top of a per-term floor of 100 shots (less when the
// budget cannot cover it). Largest-remainder rounding keeps the sum exact.
std::vector<long> allocate_shots(const LocalTermDecomposition& dec,
                                 const ShotPlan& plan) {
  const long terms = static_cast<long>(dec.terms.size());
  if (plan.total_shots < terms) {
    throw ValidationError("ShotPlan: total_shots = " +
                          std::to_string(plan.total_shots) +
                          " cannot cover the " + std::to_string(terms) +
                          " decomposition terms");
  }
  std::vector<long> shots(dec.terms.size(), 0);
  if (plan.allocation == Allocation::uniform) {
    const long base = plan.total_shots / terms;
    const long remainder = plan.total_shots % terms;
    for (long k = 0; k < terms; ++k) {
      shots[static_cast<std::size_t>(k)] = base + (k < remainder ? 1 : 0);
    }
    return shots;
  }

  const long floor_shots = std::max<long>(1, std::min<long>(100, plan.total_shots / terms));
  long remaining = plan.total_shots - floor_shots * terms;
  double weight_sum = 0.0;
  for (const LocalTerm& term : dec.terms) {
    weight_sum += std::abs(term.coefficient);
  }
  std::vector<double> fractional(dec.terms.size(), 0.0);
  long assigned = 0;
  for (std::size_t k = 0; k < dec.terms.size(); ++k) {
    const double ideal =
        weight_sum > 0.0
            ? remaining * std::abs(dec.terms[k].coefficient) / weight_sum
            : static_cast<double>(remaining) / terms;
    const long whole = static_cast<long>(std::floor(ideal));
    shots[k] = floor_shots + whole;
    fractional[k] = ideal - static_cast<double>(whole);
    assigned += whole;
  }
  long leftover = remaining - assigned;
  std::vector<std::size_t> order(dec.terms.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return fractional[i] > fractional[j];
  });
  for (std::size_t k = 0; leftover > 0; k = (k + 1) % order.size(), --leftover) {
    ++shots[order[k]];
  }
  return shots;
}

}  // namespace

EstimationResult estimate_witness_mean(int dim, const UnitaryMatrix& u,
                                       const DensityMatrix& rho,
                                       const ShotPlan& plan) {
  if (rho.local_dim() != dim) {
    throw ValidationError("estimate_witness_mean: state local dimension " +
                          std::to_string(rho.local_dim()) +
                          " does not match requested dimension " +
                          std::to_string(dim));
  }
  const LocalTermDecomposition dec = local_term_decomposition(dim, u);
  const std::vector<long> shots = allocate_shots(dec, plan);

  std::vector<TermStats> per_term(dec.terms.size());
  run_indexed(static_cast<int>(dec.terms.size()), env_worker_count(), [&](int k) {
    const auto ku = static_cast<std::size_t>(k);
    const PairSample sample =
        measure_pair(dec.terms[ku].left, dec.terms[ku].right, rho, shots[ku],
                     mix_seed(plan.seed, static_cast<std::uint64_t>(k)));
    per_term[ku] = TermStats{dec.terms[ku].coefficient, sample.mean, shots[ku],
                             sample.variance};
  });

  double mean = dec.constant;
  double se_sq = 0.0;
  for (const TermStats& term : per_term) {
    mean += term.coefficient * term.mean;
    se_sq += term.coefficient * term.coefficient * term.variance /
             static_cast<double>(term.shots);
  }
  return EstimationResult{mean, std::sqrt(se_sq), std::move(per_term)};
}

const char* to_string(Confidence verdict) {
  switch (verdict) {
    case Confidence::detected: return "detected";
    case Confidence::inconclusive: return "inconclusive";
    case Confidence::below_threshold: return "below_threshold";
  }
  return "unknown";
}

Confidence detect_with_confidence(const EstimationResult& result, double sigmas) {
  if (!(sigmas > 0.0)) {
    throw ValidationError("detect_with_confidence: sigmas must be positive");
  }
  if (result.mean - sigmas * result.standard_error > 1.0) {
    return Confidence::detected;
  }
  if (result.mean + sigmas * result.standard_error < 1.0) {
    return Confidence::below_threshold;
  }
  return Confidence::inconclusive;
}

}  // namespace telewit

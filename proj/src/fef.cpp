#include "telewit/fef.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "telewit/nelder_mead.hpp"
#include "telewit/util.hpp"

namespace telewit {

const char* to_string(Usefulness verdict) {
  switch (verdict) {
    case Usefulness::certified_useful: return "certified_useful";
    case Usefulness::not_detected: return "not_detected";
  }
  return "unknown";
}

double objective(const DensityMatrix& rho, const UnitaryMatrix& u) {
  const int n = rho.local_dim();
  if (u.dim() != n) {
    throw ValidationError("objective: unitary dimension " + std::to_string(u.dim()) +
                          " does not match state local dimension " +
                          std::to_string(n));
  }
  // (U⊗I)|ψ+⟩ has component U(a,b)/√n at |ab⟩, so the overlap is a plain
  // quadratic form in the vectorized unitary.
  const double amp = 1.0 / std::sqrt(static_cast<double>(n));
  Vector v(static_cast<long>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      v(static_cast<long>(a) * n + b) = u.matrix()(a, b) * amp;
    }
  }
  const Complex val = v.dot(rho.matrix() * v);
  if (!(std::abs(val.imag()) <= 1e-10)) {
    throw ConsistencyError("objective: overlap has imaginary part " +
                           std::to_string(val.imag()));
  }
  if (!(val.real() >= -1e-9 && val.real() <= 1.0 + 1e-9)) {
    throw ConsistencyError("objective: overlap " + std::to_string(val.real()) +
                           " outside [0, 1] envelope");
  }
  return val.real();
}

namespace {

struct RestartOutcome {
  double value = 0.0;
  RealVector theta;
  long evaluations = 0;
  bool converged = false;
};

}  // namespace

FefEstimate estimate_fef(const DensityMatrix& rho, const OptimizerConfig& cfg) {
  if (cfg.restarts < 1) {
    throw ValidationError("estimate_fef: restarts must be positive, got " +
                          std::to_string(cfg.restarts));
  }
  if (cfg.max_evaluations < 1) {
    throw ValidationError("estimate_fef: max_evaluations must be positive, got " +
                          std::to_string(cfg.max_evaluations));
  }
  if (!(cfg.step_tolerance > 0.0)) {
    throw ValidationError("estimate_fef: step_tolerance must be positive");
  }

  const int n = rho.local_dim();
  const int pdim = n * n;

  auto negated = [&rho, n](const RealVector& theta) {
    return -objective(rho, unitary_from_params(UnitaryParams{n, theta}));
  };

  std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(cfg.restarts));
  run_indexed(cfg.restarts, env_worker_count(), [&](int r) {
    std::mt19937_64 rng(mix_seed(cfg.seed, static_cast<std::uint64_t>(r)));
    std::uniform_real_distribution<double> uniform(-std::numbers::pi,
                                                   std::numbers::pi);
    RealVector theta0(pdim);
    for (int k = 0; k < pdim; ++k) {
      theta0(k) = uniform(rng);
    }

    // Coarse pass from the random start, then a refinement pass from its
    // result with a small fresh simplex; restarting the simplex recovers the
    // accuracy lost when the first one collapses early.
    const long budget = cfg.max_evaluations;
    SimplexOptions coarse{0.5, cfg.step_tolerance, (budget + 1) / 2};
    SimplexResult stage = nelder_mead_minimize(negated, theta0, coarse);
    long used = stage.evaluations;
    const long remaining = budget - used;
    if (remaining >= pdim + 2) {
      SimplexOptions fine{0.05, cfg.step_tolerance, remaining};
      const SimplexResult refined = nelder_mead_minimize(negated, stage.x, fine);
      used += refined.evaluations;
      if (refined.fx <= stage.fx) {
        stage = refined;
      }
    }
    outcomes[static_cast<std::size_t>(r)] =
        RestartOutcome{-stage.fx, stage.x, used, stage.converged};
  });

  // Deterministic reduction: strictly better value wins, ties keep the
  // lowest restart index.
  std::size_t winner = 0;
  long total_evals = 0;
  for (std::size_t r = 0; r < outcomes.size(); ++r) {
    total_evals += outcomes[r].evaluations;
    if (outcomes[r].value > outcomes[winner].value) {
      winner = r;
    }
  }

  UnitaryMatrix certificate =
      unitary_from_params(UnitaryParams{n, outcomes[winner].theta});
  const double value = objective(rho, certificate);
  ++total_evals;

  return FefEstimate{value, std::move(certificate), cfg.restarts, total_evals,
                     outcomes[winner].converged};
}

std::pair<Usefulness, FefEstimate> is_useful(const DensityMatrix& rho,
                                             const OptimizerConfig& cfg) {
  FefEstimate estimate = estimate_fef(rho, cfg);
  const double threshold = 1.0 / rho.local_dim() + cfg.usefulness_margin;
  const Usefulness verdict = estimate.value > threshold
                                 ? Usefulness::certified_useful
                                 : Usefulness::not_detected;
  return {verdict, std::move(estimate)};
}

}  // namespace telewit

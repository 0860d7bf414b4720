#pragma once

#include <cstdint>
#include <utility>

#include "telewit/generators.hpp"
#include "telewit/states.hpp"

namespace telewit {

struct OptimizerConfig {
  int restarts = 20;
  int max_evaluations = 5000;  // per restart
  double step_tolerance = 1e-9;
  std::uint64_t seed = 0;
  double usefulness_margin = 1e-9;
};

// Best fully-entangled-fraction value found, with the unitary that attains
// it. The value is a certified lower bound on F(ρ): it is re-evaluated from
// the certificate, never extrapolated.
struct FefEstimate {
  double value;
  UnitaryMatrix certificate;
  int restarts_used;
  long evaluations;  // objective calls across all restarts, final check included
  bool converged;    // winning restart terminated by tolerance
};

enum class Usefulness { certified_useful, not_detected };

const char* to_string(Usefulness verdict);

/// ⟨ψ+|(U†⊗I)ρ(U⊗I)|ψ+⟩, the overlap maximized by the FEF. Equals ⟨Γ⟩/n for
/// the witness built from the same U.
double objective(const DensityMatrix& rho, const UnitaryMatrix& u);

/// Multi-start simplex maximization of `objective` in exponential-map
/// coordinates: each restart draws θ uniformly from [-π, π]^{n²} with its own
/// sub-seed, runs a coarse pass and a refinement pass from the coarse result,
/// and the best restart wins (ties to the lowest index). Deterministic given
/// cfg.seed; restarts may execute in parallel (TELEWIT_THREADS).
FefEstimate estimate_fef(const DensityMatrix& rho,
                         const OptimizerConfig& cfg = {});

/// certified_useful iff the estimate exceeds 1/n + margin, in which case the
/// certificate's witness has ⟨Γ⟩ > 1. not_detected is not a proof of
/// uselessness: the search is one-sided.
std::pair<Usefulness, FefEstimate> is_useful(const DensityMatrix& rho,
                                             const OptimizerConfig& cfg = {});

}  // namespace telewit

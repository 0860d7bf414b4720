#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "telewit/generators.hpp"
#include "telewit/states.hpp"

namespace telewit {

enum class Allocation { uniform, proportional };

Allocation parse_allocation(const std::string& name);
const char* to_string(Allocation allocation);

struct ShotPlan {
  long total_shots = 0;
  Allocation allocation = Allocation::proportional;
  std::uint64_t seed = 0;
};

struct PairSample {
  double mean;      // sample mean of eigenvalue products
  double variance;  // unbiased sample variance (0 when shots == 1)
};

/// Simulates `shots` projective measurements of A on system 1 and B on
/// system 2. Projectors are aggregated per distinct eigenvalue (cluster
/// tolerance 1e-9), so degenerate spectra produce one outcome per level, as
/// a real device would. The mean is an unbiased estimate of Tr[ρ(A⊗B)].
PairSample measure_pair(const Matrix& a, const Matrix& b,
                        const DensityMatrix& rho, long shots,
                        std::uint64_t seed);

struct TermStats {
  double coefficient;
  double mean;
  long shots;
  double variance;
};

struct EstimationResult {
  double mean;            // constant + Σ c_k · term mean
  double standard_error;  // sqrt(Σ c_k² · var_k / N_k)
  std::vector<TermStats> per_term;
};

/// Estimates ⟨Γ⟩ term by term through its local decomposition. Every term
/// must receive at least one shot; term k samples with sub-seed
/// mix_seed(plan.seed, k), so the result is seed-deterministic regardless of
/// scheduling.
EstimationResult estimate_witness_mean(int dim, const UnitaryMatrix& u,
                                       const DensityMatrix& rho,
                                       const ShotPlan& plan);

enum class Confidence { detected, inconclusive, below_threshold };

const char* to_string(Confidence verdict);

/// detected when mean − sigmas·SE > 1, below_threshold when
/// mean + sigmas·SE < 1, inconclusive otherwise.
Confidence detect_with_confidence(const EstimationResult& result,
                                  double sigmas);

}  // namespace telewit

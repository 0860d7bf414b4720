#pragma once

#include <functional>

#include "telewit/linalg.hpp"

namespace telewit {

struct SimplexOptions {
  double initial_step = 0.5;
  double f_tolerance = 1e-9;    // converged when f_worst - f_best <= this
  long max_evaluations = 5000;  // hard cap, honored exactly
};

struct SimplexResult {
  RealVector x;  // best point ever evaluated
  double fx;
  long evaluations;
  bool converged;  // terminated by tolerance rather than budget
};

/// Direct-search simplex minimization (reflection/expansion/contraction/
/// shrink with the standard coefficients 1, 2, 1/2, 1/2). Returns the best
/// point seen, which is never worse than the start.
SimplexResult nelder_mead_minimize(
    const std::function<double(const RealVector&)>& f, const RealVector& start,
    const SimplexOptions& opts);

}  // namespace telewit

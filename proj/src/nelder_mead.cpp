#include "telewit/nelder_mead.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace telewit {

SimplexResult nelder_mead_minimize(
    const std::function<double(const RealVector&)>& f, const RealVector& start,
    const SimplexOptions& opts) {
  const int dim = static_cast<int>(start.size());
  if (dim < 1) {
    throw ValidationError("nelder_mead_minimize: empty start point");
  }
  if (!(opts.f_tolerance > 0.0)) {
    throw ValidationError("nelder_mead_minimize: tolerance must be positive");
  }
  if (opts.max_evaluations < 1) {
    throw ValidationError("nelder_mead_minimize: evaluation budget must be positive");
  }

  constexpr double kReflect = 1.0;
  constexpr double kExpand = 2.0;
  constexpr double kContract = 0.5;
  constexpr double kShrink = 0.5;

  long evals = 0;
  RealVector best_x = start;
  double best_f = std::numeric_limits<double>::infinity();
  bool best_valid = false;

  auto evaluate = [&](const RealVector& x) {
    ++evals;
    const double v = f(x);
    if (!best_valid || v < best_f) {
      best_f = v;
      best_x = x;
      best_valid = true;
    }
    return v;
  };
  auto budget_left = [&]() { return evals < opts.max_evaluations; };

  std::vector<RealVector> pts(static_cast<std::size_t>(dim) + 1);
  std::vector<double> fv(static_cast<std::size_t>(dim) + 1,
                         std::numeric_limits<double>::infinity());

  pts[0] = start;
  if (budget_left()) {
    fv[0] = evaluate(pts[0]);
  }
  for (int j = 0; j < dim; ++j) {
    pts[static_cast<std::size_t>(j) + 1] = start;
    pts[static_cast<std::size_t>(j) + 1](j) += opts.initial_step;
    if (!budget_left()) {
      return {best_x, best_valid ? best_f : f(best_x), evals, false};
    }
    fv[static_cast<std::size_t>(j) + 1] = evaluate(pts[static_cast<std::size_t>(j) + 1]);
  }

  std::vector<int> order(static_cast<std::size_t>(dim) + 1);
  std::iota(order.begin(), order.end(), 0);

  bool converged = false;
  while (true) {
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return fv[a] < fv[b]; });
    const int i_best = order.front();
    const int i_worst = order.back();
    const int i_second = order[order.size() - 2];

    if (fv[i_worst] - fv[i_best] <= opts.f_tolerance) {
      converged = true;
      break;
    }
    if (!budget_left()) {
      break;
    }

    RealVector centroid = RealVector::Zero(dim);
    for (int i = 0; i <= dim; ++i) {
      if (i != i_worst) {
        centroid += pts[i];
      }
    }
    centroid /= static_cast<double>(dim);

    const RealVector reflected = centroid + kReflect * (centroid - pts[i_worst]);
    const double f_reflected = evaluate(reflected);

    if (f_reflected < fv[i_best]) {
      if (budget_left()) {
        const RealVector expanded = centroid + kExpand * (reflected - centroid);
        const double f_expanded = evaluate(expanded);
        if (f_expanded < f_reflected) {
          pts[i_worst] = expanded;
          fv[i_worst] = f_expanded;
          continue;
        }
      }
      pts[i_worst] = reflected;
      fv[i_worst] = f_reflected;
      continue;
    }
    if (f_reflected < fv[i_second]) {
      pts[i_worst] = reflected;
      fv[i_worst] = f_reflected;
      continue;
    }

    // Contraction, outside when the reflection improved on the worst vertex.
    if (!budget_left()) {
      break;
    }
    if (f_reflected < fv[i_worst]) {
      const RealVector contracted = centroid + kContract * (reflected - centroid);
      const double f_contracted = evaluate(contracted);
      if (f_contracted <= f_reflected) {
        pts[i_worst] = contracted;
        fv[i_worst] = f_contracted;
        continue;
      }
    } else {
      const RealVector contracted = centroid + kContract * (pts[i_worst] - centroid);
      const double f_contracted = evaluate(contracted);
      if (f_contracted < fv[i_worst]) {
        pts[i_worst] = contracted;
        fv[i_worst] = f_contracted;
        continue;
      }
    }

    // Shrink toward the best vertex.
    for (int i = 0; i <= dim; ++i) {
      if (i == i_best) {
        continue;
      }
      pts[i] = pts[i_best] + kShrink * (pts[i] - pts[i_best]);
      if (!budget_left()) {
        return {best_x, best_f, evals, false};
      }
      fv[i] = evaluate(pts[i]);
    }
  }

  return {best_x, best_f, evals, converged};
}

}  // namespace telewit

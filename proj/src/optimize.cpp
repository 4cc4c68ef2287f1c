#include "dimerqi/optimize.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace dimerqi::optimize {

namespace {

Minimum single_pass(const std::function<double(const Eigen::VectorXd&)>& objective,
                    const Eigen::VectorXd& start, const NelderMeadOptions& options) {
  const int n = static_cast<int>(start.size());
  std::vector<Eigen::VectorXd> simplex(n + 1, start);
  std::vector<double> values(n + 1);
  for (int i = 0; i < n; ++i) simplex[i + 1](i) += options.initial_step;
  int evals = 0;
  auto eval = [&](const Eigen::VectorXd& p) {
    ++evals;
    return objective(p);
  };
  for (int i = 0; i <= n; ++i) values[i] = eval(simplex[i]);

  std::vector<int> order(n + 1);
  while (evals < options.max_evaluations) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return values[a] < values[b]; });
    const int best = order.front();
    const int worst = order.back();
    const int second = order[n - 1];
    if (values[worst] - values[best] <= options.value_tolerance) break;

    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
    for (int i = 0; i <= n; ++i)
      if (i != worst) centroid += simplex[i];
    centroid /= n;

    const Eigen::VectorXd reflected = centroid + (centroid - simplex[worst]);
    const double f_reflected = eval(reflected);
    if (f_reflected < values[best]) {
      const Eigen::VectorXd expanded = centroid + 2.0 * (centroid - simplex[worst]);
      const double f_expanded = eval(expanded);
      if (f_expanded < f_reflected) {
        simplex[worst] = expanded;
        values[worst] = f_expanded;
      } else {
        simplex[worst] = reflected;
        values[worst] = f_reflected;
      }
      continue;
    }
    if (f_reflected < values[second]) {
      simplex[worst] = reflected;
      values[worst] = f_reflected;
      continue;
    }
    const bool outside = f_reflected < values[worst];
    const Eigen::VectorXd contracted = outside ? centroid + 0.5 * (reflected - centroid)
                                               : centroid + 0.5 * (simplex[worst] - centroid);
    const double f_contracted = eval(contracted);
    if (f_contracted < std::min(f_reflected, values[worst])) {
      simplex[worst] = contracted;
      values[worst] = f_contracted;
      continue;
    }
    // Shrink toward the best vertex.
    for (int i = 0; i <= n; ++i) {
      if (i == best) continue;
      simplex[i] = simplex[best] + 0.5 * (simplex[i] - simplex[best]);
      values[i] = eval(simplex[i]);
    }
  }
  const int best = static_cast<int>(std::min_element(values.begin(), values.end()) - values.begin());
  return {simplex[best], values[best], evals};
}

}  // namespace

Minimum nelder_mead(const std::function<double(const Eigen::VectorXd&)>& objective,
                    const Eigen::VectorXd& start, const NelderMeadOptions& options) {
  Minimum result = single_pass(objective, start, options);
  NelderMeadOptions pass = options;
  for (int r = 0; r < options.max_restarts; ++r) {
    pass.initial_step = std::max(pass.initial_step * 0.5, 1e-7);
    Minimum next = single_pass(objective, result.point, pass);
    next.evaluations += result.evaluations;
    const bool improved = next.value < result.value - options.value_tolerance;
    if (next.value < result.value) result = next;
    else result.evaluations = next.evaluations;
    if (!improved) break;
  }
  return result;
}

}  // namespace dimerqi::optimize

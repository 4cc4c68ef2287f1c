#pragma once

#include <functional>

#include <Eigen/Dense>

namespace dimerqi::optimize {

struct Minimum {
  Eigen::VectorXd point;
  double value = 0.0;
  int evaluations = 0;
};

struct NelderMeadOptions {
  double initial_step = 0.1;
  /// Stop once the spread of simplex values falls below this.
  double value_tolerance = 1e-13;
  int max_evaluations = 20000;
  /// Restart from the current best with a fresh simplex until a restart
  /// fails to improve by more than value_tolerance.
  int max_restarts = 8;
};

/// Derivative-free simplex minimization. Deterministic for a given start.
Minimum nelder_mead(const std::function<double(const Eigen::VectorXd&)>& objective,
                    const Eigen::VectorXd& start, const NelderMeadOptions& options = {});

}  // namespace dimerqi::optimize

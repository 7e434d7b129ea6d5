#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <vector>

#include "vqr/rng.hpp"

namespace vqr {

using Objective = std::function<double(const Eigen::VectorXd&)>;

enum class OptimizerKind { SPSA, COBYLA, NelderMead };

// Settings for the derivative-free minimizers.  max_iterations = 0 is the
// documented no-op budget: the start point is evaluated once and returned.
//
// SPSA gains follow a_k = a / (A + k + 1)^alpha, c_k = c / (k + 1)^gamma.
// spsa_a = 0 requests auto-calibration: 10 probe pairs around x0 estimate the
// objective's magnitude response and `a` is set so the first step moves about
// 0.1 radians.  spsa_big_a < 0 resolves to 0.1 * max_iterations.
//
// Evaluation budgets (upper bounds, d = dimension):
//   SPSA         1 + 2*iterations, plus 20 calibration probes when spsa_a = 0
//   Nelder-Mead  1 + (d+1) + iterations * (2d + 2)
//   COBYLA       1 + d + iterations * (d + 1)
struct OptimizerSpec {
  OptimizerKind kind = OptimizerKind::SPSA;
  int max_iterations = 100;
  double f_tolerance = 1e-6;
  double x_tolerance = 1e-6;
  std::uint64_t seed = 0;

  double spsa_a = 0.0;
  double spsa_c = 0.1;
  double spsa_big_a = -1.0;
  double spsa_alpha = 0.602;
  double spsa_gamma = 0.101;

  double cobyla_rho_begin = 1.0;
  double cobyla_rho_end = 1e-6;

  void validate() const;
  double resolved_big_a() const {
    return spsa_big_a < 0.0 ? 0.1 * max_iterations : spsa_big_a;
  }
};

struct OptimizationTrace {
  Eigen::VectorXd best_x;
  double best_f = 0.0;
  long evaluations = 0;
  int iterations = 0;
  std::vector<double> history;  // best-so-far objective after each iteration
};

// Minimizes `objective` from `x0`.  Stops at max_iterations, at the method's
// native criterion (simplex spread, final trust radius), or when the best
// value improves by less than f_tolerance for 10 consecutive iterations.
// best_f never exceeds objective(x0); deterministic for a fixed seed.
OptimizationTrace minimize(const Objective& objective, const Eigen::VectorXd& x0,
                           const OptimizerSpec& spec);

// One SPSA update from iteration k: a Rademacher perturbation drawn from
// `rng` and exactly two objective evaluations.  Requires an explicit gain
// (spec.spsa_a > 0); minimize() resolves auto-calibration before stepping.
Eigen::VectorXd spsa_step(const Objective& objective, const Eigen::VectorXd& x,
                          int k, const OptimizerSpec& spec, Rng& rng);

// Trust-region minimization over linear interpolation models (the COBYLA
// construction restricted to unconstrained objectives).
OptimizationTrace cobyla_minimize(const Objective& objective,
                                  const Eigen::VectorXd& x0,
                                  const OptimizerSpec& spec);

}  // namespace vqr

#include "vqr/optimize.hpp"

#include <cmath>
#include <stdexcept>

#include "optimize_impl.hpp"

namespace vqr {

void OptimizerSpec::validate() const {
  if (max_iterations < 0) {
    throw std::invalid_argument("max_iterations must be >= 0");
  }
  if (f_tolerance <= 0.0 || x_tolerance <= 0.0) {
    throw std::invalid_argument("tolerances must be positive");
  }
  if (spsa_a < 0.0 || spsa_c <= 0.0) {
    throw std::invalid_argument("SPSA gains must be positive (a = 0 requests "
                                "auto-calibration)");
  }
  if (cobyla_rho_begin <= 0.0 || cobyla_rho_end <= 0.0 ||
      cobyla_rho_end > cobyla_rho_begin) {
    throw std::invalid_argument(
        "COBYLA trust radii need 0 < rho_end <= rho_begin");
  }
}

OptimizationTrace minimize(const Objective& objective, const Eigen::VectorXd& x0,
                           const OptimizerSpec& spec) {
  spec.validate();
  if (x0.size() == 0) {
    throw std::invalid_argument("initial point is empty");
  }
  if (!x0.allFinite()) {
    throw std::invalid_argument("initial point has non-finite entries");
  }

  detail::ObjectiveTracker tracker(objective);
  tracker(x0);  // seeds best-so-far; also rejects a non-finite start value

  OptimizationTrace trace;
  if (spec.max_iterations > 0) {
    switch (spec.kind) {
      case OptimizerKind::SPSA:
        detail::run_spsa(tracker, x0, spec, trace);
        break;
      case OptimizerKind::NelderMead:
        detail::run_nelder_mead(tracker, x0, spec, trace);
        break;
      case OptimizerKind::COBYLA:
        detail::run_cobyla(tracker, x0, spec, trace);
        break;
    }
  }

  trace.best_x = tracker.best_x();
  trace.best_f = tracker.best_f();
  trace.evaluations = tracker.evaluations();
  trace.iterations = static_cast<int>(trace.history.size());
  return trace;
}

OptimizationTrace cobyla_minimize(const Objective& objective,
                                  const Eigen::VectorXd& x0,
                                  const OptimizerSpec& spec) {
  OptimizerSpec cobyla = spec;
  cobyla.kind = OptimizerKind::COBYLA;
  return minimize(objective, x0, cobyla);
}

}  // namespace vqr

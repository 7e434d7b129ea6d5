#include <cmath>
#include <stdexcept>

#include "optimize_impl.hpp"
#include "vqr/optimize.hpp"

namespace vqr {

namespace {

Eigen::VectorXd rademacher_vector(Eigen::Index d, Rng& rng) {
  Eigen::VectorXd delta(d);
  for (Eigen::Index i = 0; i < d; ++i) {
    delta[i] = rng.rademacher();
  }
  return delta;
}

double gain_c(const OptimizerSpec& spec, int k) {
  return spec.spsa_c / std::pow(k + 1.0, spec.spsa_gamma);
}

double gain_a(const OptimizerSpec& spec, int k) {
  return spec.spsa_a / std::pow(spec.resolved_big_a() + k + 1.0, spec.spsa_alpha);
}

template <typename Callable>
Eigen::VectorXd step_impl(Callable& f, const Eigen::VectorXd& x, int k,
                          const OptimizerSpec& spec, Rng& rng) {
  const double ck = gain_c(spec, k);
  const double ak = gain_a(spec, k);
  const Eigen::VectorXd delta = rademacher_vector(x.size(), rng);
  const double y_plus = f(x + ck * delta);
  const double y_minus = f(x - ck * delta);
  // Rademacher entries are their own reciprocals, so the per-component
  // estimate (y+ - y-) / (2 ck delta_i) is a single scaled vector.
  const Eigen::VectorXd gradient = ((y_plus - y_minus) / (2.0 * ck)) * delta;
  return x - ak * gradient;
}

}  // namespace

Eigen::VectorXd spsa_step(const Objective& objective, const Eigen::VectorXd& x,
                          int k, const OptimizerSpec& spec, Rng& rng) {
  spec.validate();
  if (k < 0) {
    throw std::invalid_argument("iteration index must be >= 0");
  }
  if (spec.spsa_a <= 0.0) {
    throw std::invalid_argument(
        "spsa_step needs an explicit gain constant a; auto-calibration is "
        "performed by minimize()");
  }
  auto checked = [&](const Eigen::VectorXd& p) {
    const double v = objective(p);
    if (!std::isfinite(v)) {
      throw std::runtime_error("objective returned a non-finite value");
    }
    return v;
  };
  return step_impl(checked, x, k, spec, rng);
}

namespace detail {

void run_spsa(ObjectiveTracker& f, Eigen::VectorXd x, const OptimizerSpec& spec,
              OptimizationTrace& trace) {
  Rng rng(spec.seed);
  OptimizerSpec resolved = spec;

  if (resolved.spsa_a <= 0.0) {
    // Calibrate the learning rate from the magnitude response around x0 so
    // the first update moves roughly kTargetStep in parameter space.
    constexpr double kTargetStep = 0.1;
    constexpr int kProbePairs = 10;
    const double c0 = gain_c(spec, 0);
    double magnitude = 0.0;
    for (int p = 0; p < kProbePairs; ++p) {
      const Eigen::VectorXd delta = rademacher_vector(x.size(), rng);
      const double y_plus = f(x + c0 * delta);
      const double y_minus = f(x - c0 * delta);
      magnitude += std::abs(y_plus - y_minus) / (2.0 * c0);
    }
    magnitude /= kProbePairs;
    const double scale = std::pow(spec.resolved_big_a() + 1.0, spec.spsa_alpha);
    resolved.spsa_a =
        magnitude > 1e-12 ? kTargetStep * scale / magnitude : kTargetStep * scale;
  }

  StallMonitor stall(spec.f_tolerance, f.best_f());
  for (int k = 0; k < spec.max_iterations; ++k) {
    x = step_impl(f, x, k, resolved, rng);
    trace.history.push_back(f.best_f());
    if (stall.stalled(f.best_f())) {
      break;
    }
  }
}

}  // namespace detail

}  // namespace vqr

#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

#include "vqr/optimize.hpp"

namespace vqr::detail {

// Wraps the raw objective with evaluation counting, finiteness checking and
// best-so-far tracking.  Every optimizer routes its calls through this.
class ObjectiveTracker {
 public:
  explicit ObjectiveTracker(const Objective& objective)
      : objective_(objective) {}

  double operator()(const Eigen::VectorXd& x) {
    const double value = objective_(x);
    ++evaluations_;
    if (!std::isfinite(value)) {
      throw std::runtime_error("objective returned a non-finite value");
    }
    if (value < best_f_) {
      best_f_ = value;
      best_x_ = x;
    }
    return value;
  }

  double best_f() const { return best_f_; }
  const Eigen::VectorXd& best_x() const { return best_x_; }
  long evaluations() const { return evaluations_; }

 private:
  const Objective& objective_;
  Eigen::VectorXd best_x_;
  double best_f_ = std::numeric_limits<double>::infinity();
  long evaluations_ = 0;
};

// Shared stall rule: stop once the best value improves by less than
// f_tolerance for 10 consecutive iterations.
class StallMonitor {
 public:
  StallMonitor(double f_tolerance, double initial_best)
      : f_tolerance_(f_tolerance), last_best_(initial_best) {}

  bool stalled(double best_now) {
    if (last_best_ - best_now < f_tolerance_) {
      ++run_;
    } else {
      run_ = 0;
    }
    last_best_ = best_now;
    return run_ >= 10;
  }

 private:
  double f_tolerance_;
  double last_best_;
  int run_ = 0;
};

void run_spsa(ObjectiveTracker& f, Eigen::VectorXd x, const OptimizerSpec& spec,
              OptimizationTrace& trace);
void run_nelder_mead(ObjectiveTracker& f, const Eigen::VectorXd& x0,
                     const OptimizerSpec& spec, OptimizationTrace& trace);
void run_cobyla(ObjectiveTracker& f, const Eigen::VectorXd& x0,
                const OptimizerSpec& spec, OptimizationTrace& trace);

}  // namespace vqr::detail

#include <algorithm>
#include <cmath>
#include <vector>

#include "optimize_impl.hpp"
#include "vqr/optimize.hpp"

namespace vqr::detail {

namespace {

// Interpolation set: d+1 points whose differences around the incumbent
// determine a linear model of the objective.
struct PointSet {
  std::vector<Eigen::VectorXd> x;
  std::vector<double> f;

  std::size_t best() const {
    std::size_t b = 0;
    for (std::size_t i = 1; i < x.size(); ++i) {
      if (f[i] < f[b]) b = i;
    }
    return b;
  }

  std::size_t worst() const {
    std::size_t w = 0;
    for (std::size_t i = 1; i < x.size(); ++i) {
      if (f[i] > f[w]) w = i;
    }
    return w;
  }

  double diameter_from(std::size_t center) const {
    double dia = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      dia = std::max(dia, (x[i] - x[center]).norm());
    }
    return dia;
  }
};

void rebuild_around(PointSet& set, ObjectiveTracker& f,
                    const Eigen::VectorXd& center, double f_center,
                    double radius) {
  const Eigen::Index d = center.size();
  set.x.assign(1, center);
  set.f.assign(1, f_center);
  for (Eigen::Index i = 0; i < d; ++i) {
    Eigen::VectorXd v = center;
    v[i] += radius;
    set.x.push_back(v);
    set.f.push_back(f(v));
  }
}

// Gradient of the linear interpolant anchored at the best point: rows of
// (x_i - x_b) against f_i - f_b, solved by column-pivoted QR so a flat or
// degenerate geometry yields a least-squares answer instead of blowing up.
Eigen::VectorXd model_gradient(const PointSet& set, std::size_t anchor) {
  const Eigen::Index d = set.x.front().size();
  Eigen::MatrixXd edges(d, d);
  Eigen::VectorXd df(d);
  Eigen::Index row = 0;
  for (std::size_t i = 0; i < set.x.size(); ++i) {
    if (i == anchor) continue;
    edges.row(row) = (set.x[i] - set.x[anchor]).transpose();
    df[row] = set.f[i] - set.f[anchor];
    ++row;
  }
  return edges.colPivHouseholderQr().solve(df);
}

}  // namespace

void run_cobyla(ObjectiveTracker& f, const Eigen::VectorXd& x0,
                const OptimizerSpec& spec, OptimizationTrace& trace) {
  double rho = spec.cobyla_rho_begin;
  PointSet set;
  rebuild_around(set, f, x0, f.best_f(), rho);
  StallMonitor stall(spec.f_tolerance, f.best_f());

  for (int iter = 0; iter < spec.max_iterations && rho > spec.cobyla_rho_end;
       ++iter) {
    const std::size_t b = set.best();
    const Eigen::VectorXd gradient = model_gradient(set, b);
    const double g_norm = gradient.norm();

    if (!gradient.allFinite() || g_norm < 1e-14) {
      // Model is flat at this resolution; refine the trust region.
      rho *= 0.5;
      if (rho > spec.cobyla_rho_end) {
        rebuild_around(set, f, set.x[b], set.f[b], rho);
      }
      trace.history.push_back(f.best_f());
      if (stall.stalled(f.best_f())) break;
      continue;
    }

    const Eigen::VectorXd trial = set.x[b] - (rho / g_norm) * gradient;
    const double f_trial = f(trial);
    const double predicted = rho * g_norm;
    const double actual = set.f[b] - f_trial;

    if (actual >= 0.1 * predicted) {
      const std::size_t w = set.worst();
      set.x[w] = trial;
      set.f[w] = f_trial;
    } else {
      // The model failed to predict descent at this radius: shrink, and
      // refresh the geometry if the points have spread far beyond it.
      if (f_trial < set.f[set.worst()]) {
        const std::size_t w = set.worst();
        set.x[w] = trial;
        set.f[w] = f_trial;
      }
      rho *= 0.5;
      if (rho > spec.cobyla_rho_end &&
          set.diameter_from(set.best()) > 4.0 * rho) {
        const std::size_t nb = set.best();
        const Eigen::VectorXd center = set.x[nb];
        rebuild_around(set, f, center, set.f[nb], rho);
      }
    }

    trace.history.push_back(f.best_f());
    if (stall.stalled(f.best_f())) break;
  }
}

}  // namespace vqr::detail

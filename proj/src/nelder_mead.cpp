#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "optimize_impl.hpp"
#include "vqr/optimize.hpp"

namespace vqr::detail {

namespace {

constexpr double kReflection = 1.0;
constexpr double kExpansion = 2.0;
constexpr double kContraction = 0.5;
constexpr double kShrink = 0.5;
constexpr double kRestartStep = 0.05;

struct Simplex {
  std::vector<Eigen::VectorXd> x;
  std::vector<double> f;

  void sort() {
    std::vector<std::size_t> order(x.size());
    std::iota(order.begin(), order.end(), 0u);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return f[a] < f[b]; });
    std::vector<Eigen::VectorXd> xs(x.size());
    std::vector<double> fs(f.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
      xs[k] = std::move(x[order[k]]);
      fs[k] = f[order[k]];
    }
    x = std::move(xs);
    f = std::move(fs);
  }

  // Volume proxy: |det| of the norm-scaled edge matrix, in [0, 1].  Zero
  // means the vertices have collapsed onto an affine subspace.
  double normalized_volume() const {
    const Eigen::Index d = x.front().size();
    Eigen::MatrixXd edges(d, d);
    for (Eigen::Index j = 0; j < d; ++j) {
      Eigen::VectorXd e = x[static_cast<std::size_t>(j) + 1] - x.front();
      const double len = e.norm();
      if (len == 0.0) {
        return 0.0;
      }
      edges.col(j) = e / len;
    }
    return std::abs(edges.determinant());
  }
};

Simplex initial_simplex(ObjectiveTracker& f, const Eigen::VectorXd& x0,
                        double scale_per_unit) {
  Simplex s;
  s.x.push_back(x0);
  s.f.push_back(f(x0));
  for (Eigen::Index i = 0; i < x0.size(); ++i) {
    Eigen::VectorXd v = x0;
    v[i] += scale_per_unit * (1.0 + std::abs(x0[i]));
    s.x.push_back(v);
    s.f.push_back(f(v));
  }
  return s;
}

}  // namespace

void run_nelder_mead(ObjectiveTracker& f, const Eigen::VectorXd& x0,
                     const OptimizerSpec& spec, OptimizationTrace& trace) {
  const Eigen::Index d = x0.size();
  Simplex s = initial_simplex(f, x0, kRestartStep);
  StallMonitor stall(spec.f_tolerance, f.best_f());

  for (int iter = 0; iter < spec.max_iterations; ++iter) {
    s.sort();
    const std::size_t worst = s.x.size() - 1;

    // Native convergence: both the value spread and the vertex spread have
    // collapsed below tolerance.
    double x_spread = 0.0;
    for (std::size_t i = 1; i < s.x.size(); ++i) {
      x_spread = std::max(x_spread, (s.x[i] - s.x[0]).lpNorm<Eigen::Infinity>());
    }
    if (s.f[worst] - s.f[0] < spec.f_tolerance && x_spread < spec.x_tolerance) {
      break;
    }

    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(d);
    for (std::size_t i = 0; i < worst; ++i) {
      centroid += s.x[i];
    }
    centroid /= static_cast<double>(worst);

    const Eigen::VectorXd reflected =
        centroid + kReflection * (centroid - s.x[worst]);
    const double f_reflected = f(reflected);

    if (f_reflected < s.f[0]) {
      const Eigen::VectorXd expanded =
          centroid + kExpansion * (reflected - centroid);
      const double f_expanded = f(expanded);
      if (f_expanded < f_reflected) {
        s.x[worst] = expanded;
        s.f[worst] = f_expanded;
      } else {
        s.x[worst] = reflected;
        s.f[worst] = f_reflected;
      }
    } else if (f_reflected < s.f[worst - 1]) {
      s.x[worst] = reflected;
      s.f[worst] = f_reflected;
    } else {
      const bool outside = f_reflected < s.f[worst];
      const Eigen::VectorXd& toward = outside ? reflected : s.x[worst];
      const Eigen::VectorXd contracted =
          centroid + kContraction * (toward - centroid);
      const double f_contracted = f(contracted);
      if (f_contracted < std::min(f_reflected, s.f[worst])) {
        s.x[worst] = contracted;
        s.f[worst] = f_contracted;
      } else {
        // Shrink every vertex toward the best.
        for (std::size_t i = 1; i < s.x.size(); ++i) {
          s.x[i] = s.x[0] + kShrink * (s.x[i] - s.x[0]);
          s.f[i] = f(s.x[i]);
        }
      }
    }

    if (s.normalized_volume() < 1e-12) {
      // Degenerate simplex: rebuild around the best point seen so far.
      Simplex restarted;
      restarted.x.push_back(f.best_x());
      restarted.f.push_back(f.best_f());
      for (Eigen::Index i = 0; i < d; ++i) {
        Eigen::VectorXd v = f.best_x();
        v[i] += kRestartStep;
        restarted.x.push_back(v);
        restarted.f.push_back(f(v));
      }
      s = std::move(restarted);
    }

    trace.history.push_back(f.best_f());
    if (stall.stalled(f.best_f())) {
      break;
    }
  }
}

}  // namespace vqr::detail

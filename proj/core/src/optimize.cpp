#include "collar/optimize.hpp"

#include <ceres/gradient_problem.h>
#include <ceres/gradient_problem_solver.h>
#include <glog/logging.h>

#include <cmath>
#include <limits>
#include <mutex>
#include <random>

namespace collar {

namespace {

class Adapter final : public ceres::FirstOrderFunction {
public:
  Adapter(const Objective& f, int dim, long* evals) : f_(f), dim_(dim), evals_(evals) {}

  bool Evaluate(const double* parameters, double* cost, double* gradient) const override {
    const Vector x = Eigen::Map<const Vector>(parameters, dim_);
    ++*evals_;
    if (gradient) {
      Vector g(dim_);
      *cost = f_(x, &g);
      Eigen::Map<Vector>(gradient, dim_) = g;
    } else {
      *cost = f_(x, nullptr);
    }
    return std::isfinite(*cost);
  }
  int NumParameters() const override { return dim_; }

private:
  const Objective& f_;
  int dim_;
  long* evals_;
};

void quiet_solver_logging() {
  static std::once_flag once;
  std::call_once(once, [] { FLAGS_minloglevel = google::GLOG_ERROR; });
}

}  // namespace

MinimizeResult local_minimize(const Objective& f, Vector& x, int iters) {
  quiet_solver_logging();
  MinimizeResult out;
  ceres::GradientProblem problem(new Adapter(f, static_cast<int>(x.size()), &out.evaluations));
  ceres::GradientProblemSolver::Options options;
  options.line_search_direction_type = ceres::LBFGS;
  options.max_num_iterations = iters;
  options.function_tolerance = 1e-15;
  options.gradient_tolerance = 1e-20;
  options.parameter_tolerance = 1e-15;
  options.logging_type = ceres::SILENT;
  ceres::GradientProblemSolver::Summary summary;
  ceres::Solve(options, problem, x.data(), &summary);
  out.value = summary.final_cost;
  out.argmin = x;
  out.iterations = static_cast<long>(summary.iterations.size());
  out.converged = summary.termination_type == ceres::CONVERGENCE;
  out.restarts_used = 1;
  return out;
}

MinimizeResult multistart_minimize(const Objective& f, int dim, const MinimizeOptions& opts) {
  MinimizeResult best;
  best.value = std::numeric_limits<double>::infinity();
  for (int r = 0; r < opts.restarts; ++r) {
    std::seed_seq seq{static_cast<std::uint32_t>(opts.seed), static_cast<std::uint32_t>(opts.seed >> 32),
                      static_cast<std::uint32_t>(r)};
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> normal;
    Vector x(dim);
    for (int i = 0; i < dim; ++i) x(i) = normal(rng);
    const MinimizeResult run = local_minimize(f, x, opts.iters);
    best.evaluations += run.evaluations;
    best.iterations += run.iterations;
    best.restarts_used = r + 1;
    if (run.value < best.value) {
      best.value = run.value;
      best.argmin = run.argmin;
      best.converged = run.converged;
    }
    if (best.value <= opts.target) break;
  }
  return best;
}

}  // namespace collar

#pragma once

#include "collar/linalg.hpp"

#include <cstdint>
#include <functional>

namespace collar {

/// Value and, when `grad` is non-null, gradient at x.
using Objective = std::function<double(const Vector& x, Vector* grad)>;

struct MinimizeOptions {
  int restarts = 8;
  int iters = 500;
  std::uint64_t seed = 0;
  /// Stop early once a restart reaches this value.
  double target = -1.0;
};

struct MinimizeResult {
  double value = 0.0;
  Vector argmin;
  int restarts_used = 0;
  long evaluations = 0;
  long iterations = 0;
  bool converged = false;
};

/// Multistart L-BFGS; restart r starts from a standard normal draw seeded by (seed, r).
MinimizeResult multistart_minimize(const Objective& f, int dim, const MinimizeOptions& opts);

/// One local L-BFGS run from x (updated in place).
MinimizeResult local_minimize(const Objective& f, Vector& x, int iters);

}  // namespace collar

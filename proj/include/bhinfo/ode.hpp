#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace bhinfo::ode {

// Classical RK4 with step-doubling error control. The propagated solution is
// the two-half-step value, so the method stays fourth order; the difference
// between the full step and the half steps estimates the local error.
struct AdaptiveRk4Options {
  double rel_tol = 1e-8;
  double abs_tol = 0.0;
  // Zero means "pick from |y / f(t0, y0)|".
  double initial_step = 0.0;
  std::size_t max_steps = 2'000'000;
};

struct Sample {
  double t;
  double y;
};

struct LevelCrossing {
  double t_end = 0.0;
  std::size_t accepted_steps = 0;
  std::size_t rejected_steps = 0;
  // Accepted points including both endpoints; empty unless requested.
  std::vector<Sample> trajectory;
};

using Rhs = std::function<double(double t, double y)>;

// Integrates dy/dt = rhs(t, y) from (t0, y0) until y first reaches
// `y_target`, which must lie in the direction the solution is moving. The
// last step is shortened by bisection so it lands on the level.
LevelCrossing integrate_to_level(const Rhs& rhs, double t0, double y0,
                                 double y_target,
                                 const AdaptiveRk4Options& options = {},
                                 bool record_trajectory = false);

}  // namespace bhinfo::ode

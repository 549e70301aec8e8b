#include "bhinfo/ode.hpp"

#include <algorithm>
#include <cmath>

#include "bhinfo/errors.hpp"

namespace bhinfo::ode {
namespace {

double rk4_step(const Rhs& f, double t, double y, double h) {
  const double k1 = f(t, y);
  const double k2 = f(t + 0.5 * h, y + 0.5 * h * k1);
  const double k3 = f(t + 0.5 * h, y + 0.5 * h * k2);
  const double k4 = f(t + h, y + h * k3);
  return y + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

struct Trial {
  double y;
  double error;
};

Trial doubled_step(const Rhs& f, double t, double y, double h) {
  const double full = rk4_step(f, t, y, h);
  const double half = rk4_step(f, t, y, 0.5 * h);
  const double two_halves = rk4_step(f, t + 0.5 * h, half, 0.5 * h);
  return {two_halves, std::abs(two_halves - full) / 15.0};
}

}  // namespace

LevelCrossing integrate_to_level(const Rhs& rhs, double t0, double y0,
                                 double y_target,
                                 const AdaptiveRk4Options& options,
                                 bool record_trajectory) {
  LevelCrossing out;
  out.t_end = t0;
  if (record_trajectory) out.trajectory.push_back({t0, y0});
  if (y0 == y_target) return out;

  const double direction = y_target > y0 ? 1.0 : -1.0;
  const double f0 = rhs(t0, y0);
  if (!(f0 * direction > 0.0)) {
    throw DomainError("integrate_to_level: solution does not move toward the target level");
  }

  // Positive when y has not yet reached the level.
  const auto remaining = [&](double y) { return (y_target - y) * direction; };

  double h = options.initial_step > 0.0
                 ? options.initial_step
                 : 1e-3 * std::abs(y0 - y_target) / std::abs(f0);
  double t = t0;
  double y = y0;

  while (out.accepted_steps < options.max_steps) {
    Trial trial = doubled_step(rhs, t, y, h);
    double step = h;
    bool landing = false;

    if (!std::isfinite(trial.y) || remaining(trial.y) <= 0.0) {
      // Overshoot: shrink the step until it ends on the level.
      double lo = 0.0;
      double hi = h;
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const Trial probe = doubled_step(rhs, t, y, mid);
        if (std::isfinite(probe.y) && remaining(probe.y) > 0.0) {
          lo = mid;
        } else {
          hi = mid;
        }
        if (hi - lo <= 1e-15 * hi) break;
      }
      step = hi;
      trial = doubled_step(rhs, t, y, step);
      landing = true;
    }

    const double tol = options.rel_tol * std::abs(y) + options.abs_tol;
    if (std::isfinite(trial.y) && trial.error <= tol) {
      t += step;
      ++out.accepted_steps;
      if (landing) {
        out.t_end = t;
        if (record_trajectory) out.trajectory.push_back({t, y_target});
        return out;
      }
      y = trial.y;
      if (record_trajectory) out.trajectory.push_back({t, y});
      const double ratio =
          trial.error > 0.0 ? 0.9 * std::pow(tol / trial.error, 0.2) : 4.0;
      h = step * std::clamp(ratio, 0.2, 4.0);
    } else {
      ++out.rejected_steps;
      const double ratio = std::isfinite(trial.error) && trial.error > 0.0
                               ? 0.9 * std::pow(tol / trial.error, 0.2)
                               : 0.1;
      h = step * std::clamp(ratio, 0.1, 0.5);
    }
  }
  throw DomainError("integrate_to_level: step budget exhausted");
}

}  // namespace bhinfo::ode

#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "spring/vec3.hpp"

namespace spring {

/// Physical and numerical configuration of one two-body spring simulation.
struct SpringScenario {
  std::array<double, 2> masses{1.0, 1.0};
  double spring_constant = 0.0;
  double rest_length = 0.0;
  std::array<double, 2> friction{0.0, 0.0};
  double gravity = 9.81;
  std::array<Vec3, 2> initial_positions{};
  std::array<Vec3, 2> initial_velocities{};
  double end_time = 5.0;
  double time_step = 1e-3;
  double output_interval = 0.01;

  friend bool operator==(const SpringScenario&, const SpringScenario&) = default;
};

/// Returns an empty string when `sc` satisfies every scenario invariant,
/// otherwise a description of the first violated one.
std::string validate(const SpringScenario& sc);

/// First-order state: positions of bodies 1 and 2, then their velocities.
struct State12 {
  std::array<double, 12> y{};

  static State12 from(const std::array<Vec3, 2>& positions,
                      const std::array<Vec3, 2>& velocities);

  Vec3 position(std::size_t body) const {
    return {y[3 * body], y[3 * body + 1], y[3 * body + 2]};
  }
  Vec3 velocity(std::size_t body) const {
    return {y[6 + 3 * body], y[6 + 3 * body + 1], y[6 + 3 * body + 2]};
  }
  void set_position(std::size_t body, const Vec3& p);
  void set_velocity(std::size_t body, const Vec3& v);

  bool is_finite() const;

  friend bool operator==(const State12&, const State12&) = default;
};

struct Sample {
  double t = 0.0;
  State12 state;
};

struct Trajectory {
  std::vector<Sample> samples;

  const Sample& final() const { return samples.back(); }
};

/// Thrown when a stage or state stops being finite. Carries the time of the
/// step that failed.
class IntegrationError : public std::runtime_error {
 public:
  IntegrationError(double t, const std::string& what);
  double time() const noexcept { return time_; }

 private:
  double time_;
};

/// Separations below this are treated as coincident bodies; the spring then
/// contributes nothing.
inline constexpr double kCoincidenceThreshold = 1e-12;

using Derivative = std::function<State12(double, const State12&)>;

/// dy/dt for the two-body system with gravity, a linear spring that pulls
/// the bodies together when stretched, and quadratic drag -C_i |v_i| v_i.
State12 rhs(double t, const State12& y, const SpringScenario& sc);

/// One classical fourth-order Runge-Kutta step.
template <typename F>
State12 rk4_step(F&& f, double t, const State12& y, double dt) {
  auto axpy = [](const State12& base, double h, const State12& k) {
    State12 out;
    for (std::size_t i = 0; i < out.y.size(); ++i) out.y[i] = base.y[i] + h * k.y[i];
    return out;
  };
  auto checked = [t](State12 k) {
    if (!k.is_finite()) throw IntegrationError(t, "non-finite Runge-Kutta stage");
    return k;
  };

  const double half = 0.5 * dt;
  const State12 k1 = checked(f(t, y));
  const State12 k2 = checked(f(t + half, axpy(y, half, k1)));
  const State12 k3 = checked(f(t + half, axpy(y, half, k2)));
  const State12 k4 = checked(f(t + dt, axpy(y, dt, k3)));

  State12 next;
  const double sixth = dt / 6.0;
  for (std::size_t i = 0; i < next.y.size(); ++i) {
    next.y[i] = y.y[i] + sixth * (k1.y[i] + 2.0 * k2.y[i] + 2.0 * k3.y[i] + k4.y[i]);
  }
  if (!next.is_finite()) throw IntegrationError(t, "non-finite state after step");
  return next;
}

/// Fixed-step RK4 march from t = 0 to end_time. The final step is shortened
/// so the last sample sits exactly on end_time. Samples are taken at t = 0,
/// at every output_interval, and at end_time. A step that carries the bodies
/// through each other is bisected (deterministically, down to dt / 2^24)
/// because the spring direction flips discontinuously at coincidence.
Trajectory integrate(const SpringScenario& sc);

/// Same time grid and sampling as above, but with a caller-supplied
/// right-hand side.
Trajectory integrate(const SpringScenario& sc, const Derivative& f);

}  // namespace spring

#include "spring/ode.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace spring {

namespace {

bool finite_all(std::initializer_list<double> values) {
  return std::all_of(values.begin(), values.end(),
                     [](double v) { return std::isfinite(v); });
}

}  // namespace

std::string validate(const SpringScenario& sc) {
  if (!finite_all({sc.masses[0], sc.masses[1], sc.spring_constant, sc.rest_length,
                   sc.friction[0], sc.friction[1], sc.gravity, sc.end_time,
                   sc.time_step, sc.output_interval})) {
    return "scenario contains a non-finite value";
  }
  for (const auto& v : {sc.initial_positions[0], sc.initial_positions[1],
                        sc.initial_velocities[0], sc.initial_velocities[1]}) {
    if (!is_finite(v)) return "scenario contains a non-finite initial condition";
  }
  if (sc.masses[0] <= 0.0 || sc.masses[1] <= 0.0) return "masses must be positive";
  if (sc.spring_constant < 0.0) return "spring constant must be non-negative";
  if (sc.rest_length < 0.0) return "rest length must be non-negative";
  if (sc.friction[0] < 0.0 || sc.friction[1] < 0.0) {
    return "friction coefficients must be non-negative";
  }
  if (sc.end_time <= 0.0) return "end time must be positive";
  if (sc.time_step <= 0.0) return "time step must be positive";
  if (sc.time_step > sc.end_time) return "time step must not exceed end time";
  if (sc.output_interval < sc.time_step) {
    return "output interval must be at least the time step";
  }
  return {};
}

State12 State12::from(const std::array<Vec3, 2>& positions,
                      const std::array<Vec3, 2>& velocities) {
  State12 s;
  for (std::size_t body = 0; body < 2; ++body) {
    s.set_position(body, positions[body]);
    s.set_velocity(body, velocities[body]);
  }
  return s;
}

void State12::set_position(std::size_t body, const Vec3& p) {
  y[3 * body] = p.x;
  y[3 * body + 1] = p.y;
  y[3 * body + 2] = p.z;
}

void State12::set_velocity(std::size_t body, const Vec3& v) {
  y[6 + 3 * body] = v.x;
  y[6 + 3 * body + 1] = v.y;
  y[6 + 3 * body + 2] = v.z;
}

bool State12::is_finite() const {
  return std::all_of(y.begin(), y.end(), [](double v) { return std::isfinite(v); });
}

namespace {

std::string describe(double t, const std::string& what) {
  std::ostringstream os;
  os.precision(17);
  os << what << " at t = " << t;
  return os.str();
}

}  // namespace

IntegrationError::IntegrationError(double t, const std::string& what)
    : std::runtime_error(describe(t, what)), time_(t) {}

State12 rhs(double /*t*/, const State12& y, const SpringScenario& sc) {
  const Vec3 x1 = y.position(0);
  const Vec3 x2 = y.position(1);
  const Vec3 separation = x2 - x1;
  const double distance = norm(separation);

  // Force on body 1; body 2 feels the opposite.
  Vec3 spring_on_1{};
  if (distance >= kCoincidenceThreshold) {
    const Vec3 direction = separation / distance;
    spring_on_1 = (sc.spring_constant * (distance - sc.rest_length)) * direction;
  }

  const Vec3 gravity{0.0, 0.0, -sc.gravity};
  State12 dy;
  for (std::size_t body = 0; body < 2; ++body) {
    const Vec3 v = y.velocity(body);
    const Vec3 spring = body == 0 ? spring_on_1 : -spring_on_1;
    const Vec3 drag = (sc.friction[body] * norm(v)) * v;
    const Vec3 accel = gravity + (spring - drag) / sc.masses[body];
    dy.set_position(body, v);
    dy.set_velocity(body, accel);
  }
  return dy;
}

namespace {

// Bisection depth limit for steps that carry the bodies through each other.
constexpr int kMaxRefinement = 24;

// True when the relative position sweeps past (near) coincidence during the
// step, i.e. the chord from r0 to r1 passes closer to the origin than half
// its own length. The spring direction is discontinuous there.
bool sweeps_through_coincidence(const State12& before, const State12& after) {
  const Vec3 r0 = before.position(1) - before.position(0);
  const Vec3 chord = (after.position(1) - after.position(0)) - r0;
  const double c2 = dot(chord, chord);
  if (c2 == 0.0) return false;
  const double s = std::clamp(-dot(r0, chord) / c2, 0.0, 1.0);
  const Vec3 closest = r0 + s * chord;
  return 4.0 * dot(closest, closest) < c2;
}

State12 advance(const Derivative& f, double t, const State12& y, double h, int depth) {
  State12 next = rk4_step(f, t, y, h);
  if (depth < kMaxRefinement && sweeps_through_coincidence(y, next)) {
    const double half = 0.5 * h;
    const State12 mid = advance(f, t, y, half, depth + 1);
    next = advance(f, t + half, mid, h - half, depth + 1);
  }
  return next;
}

}  // namespace

Trajectory integrate(const SpringScenario& sc) {
  return integrate(sc, [&sc](double t, const State12& y) { return rhs(t, y, sc); });
}

Trajectory integrate(const SpringScenario& sc, const Derivative& f) {
  const double end = sc.end_time;
  const double dt = sc.time_step;
  const double interval = sc.output_interval;
  // Grid points closer than this are considered coincident.
  const double slack = 1e-9 * dt;

  const double ratio = end / dt;
  auto steps = static_cast<long long>(std::llround(ratio));
  if (steps < 1 || std::abs(ratio - static_cast<double>(steps)) > 1e-9 * ratio) {
    steps = static_cast<long long>(std::ceil(ratio));
  }

  Trajectory traj;
  State12 y = State12::from(sc.initial_positions, sc.initial_velocities);
  if (!y.is_finite()) throw IntegrationError(0.0, "non-finite initial state");
  traj.samples.push_back({0.0, y});

  long long next_sample = 1;
  double t = 0.0;
  for (long long k = 0; k < steps; ++k) {
    const double t_next = k + 1 == steps ? end : static_cast<double>(k + 1) * dt;
    y = advance(f, t, y, t_next - t, 0);
    t = t_next;

    if (k + 1 == steps) break;
    if (t >= static_cast<double>(next_sample) * interval - slack) {
      traj.samples.push_back({t, y});
      while (static_cast<double>(next_sample) * interval <= t + slack) ++next_sample;
    }
  }
  traj.samples.push_back({end, y});
  return traj;
}

}  // namespace spring

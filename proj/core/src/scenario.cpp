#include "spring/scenario.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <set>

#include "json.hpp"

namespace spring {

using nlohmann::json;

std::string_view to_string(ScenarioErrorKind kind) {
  switch (kind) {
    case ScenarioErrorKind::MalformedJson: return "malformed JSON";
    case ScenarioErrorKind::NotAnObject: return "not a JSON object";
    case ScenarioErrorKind::MissingKey: return "missing key";
    case ScenarioErrorKind::UnknownKey: return "unknown key";
    case ScenarioErrorKind::WrongType: return "wrong type";
    case ScenarioErrorKind::WrongArity: return "wrong arity";
    case ScenarioErrorKind::NonFinite: return "non-finite value";
    case ScenarioErrorKind::Constraint: return "constraint violation";
  }
  return "unknown error";
}

namespace {

std::string compose(ScenarioErrorKind kind, const std::string& key,
                    const std::string& message) {
  std::string out(to_string(kind));
  if (!key.empty()) out += " in \"" + key + "\"";
  if (!message.empty()) out += ": " + message;
  return out;
}

constexpr const char* kMasses = "masses";
constexpr const char* kSpringConstant = "spring constant";
constexpr const char* kRestLength = "rest length";
constexpr const char* kPositions = "initial positions";
constexpr const char* kVelocities = "initial velocities";
constexpr const char* kFriction = "friction";
constexpr const char* kGravity = "gravity";
constexpr const char* kEndTime = "end time";
constexpr const char* kTimeStep = "time step";
constexpr const char* kOutputInterval = "output interval";

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys{
      kMasses,   kSpringConstant, kRestLength, kPositions, kVelocities,
      kFriction, kGravity,        kEndTime,    kTimeStep,  kOutputInterval};
  return keys;
}

[[noreturn]] void fail(ScenarioErrorKind kind, const std::string& key,
                       const std::string& message) {
  throw ScenarioError(kind, key, message);
}

double read_number(const json& value, const std::string& key) {
  if (!value.is_number()) fail(ScenarioErrorKind::WrongType, key, "expected a number");
  const double d = value.get<double>();
  if (!std::isfinite(d)) fail(ScenarioErrorKind::NonFinite, key, "value is not finite");
  return d;
}

const json& read_array(const json& value, const std::string& key, std::size_t arity) {
  if (!value.is_array()) fail(ScenarioErrorKind::WrongType, key, "expected an array");
  if (value.size() != arity) {
    fail(ScenarioErrorKind::WrongArity, key,
         "expected " + std::to_string(arity) + " entries, got " +
             std::to_string(value.size()));
  }
  return value;
}

std::array<double, 2> read_pair(const json& value, const std::string& key) {
  const json& arr = read_array(value, key, 2);
  return {read_number(arr[0], key), read_number(arr[1], key)};
}

std::array<Vec3, 2> read_vectors(const json& value, const std::string& key) {
  const json& outer = read_array(value, key, 2);
  std::array<Vec3, 2> out;
  for (std::size_t body = 0; body < 2; ++body) {
    const json& inner = read_array(outer[body], key, 3);
    out[body] = {read_number(inner[0], key), read_number(inner[1], key),
                 read_number(inner[2], key)};
  }
  return out;
}

const json& require(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) fail(ScenarioErrorKind::MissingKey, key, "required key is absent");
  return *it;
}

void check(bool ok, const char* key, const char* message) {
  if (!ok) fail(ScenarioErrorKind::Constraint, key, message);
}

}  // namespace

ScenarioError::ScenarioError(ScenarioErrorKind kind, std::string key,
                             const std::string& message)
    : std::runtime_error(compose(kind, key, message)), kind_(kind), key_(std::move(key)) {}

SpringScenario parse_scenario(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    fail(ScenarioErrorKind::MalformedJson, "", e.what());
  } catch (const json::out_of_range& e) {
    // Number literals too large for a double, e.g. 1e999.
    fail(ScenarioErrorKind::NonFinite, "", e.what());
  }
  if (!doc.is_object()) fail(ScenarioErrorKind::NotAnObject, "", "top level must be an object");

  for (const auto& [key, _] : doc.items()) {
    if (!known_keys().contains(key)) fail(ScenarioErrorKind::UnknownKey, key, "not a scenario parameter");
  }

  SpringScenario sc;
  sc.masses = read_pair(require(doc, kMasses), kMasses);
  sc.spring_constant = read_number(require(doc, kSpringConstant), kSpringConstant);
  sc.rest_length = read_number(require(doc, kRestLength), kRestLength);
  sc.initial_positions = read_vectors(require(doc, kPositions), kPositions);
  sc.initial_velocities = read_vectors(require(doc, kVelocities), kVelocities);

  if (doc.contains(kFriction)) sc.friction = read_pair(doc[kFriction], kFriction);
  if (doc.contains(kGravity)) sc.gravity = read_number(doc[kGravity], kGravity);
  if (doc.contains(kEndTime)) sc.end_time = read_number(doc[kEndTime], kEndTime);
  if (doc.contains(kTimeStep)) sc.time_step = read_number(doc[kTimeStep], kTimeStep);
  if (doc.contains(kOutputInterval)) {
    sc.output_interval = read_number(doc[kOutputInterval], kOutputInterval);
  }

  check(sc.masses[0] > 0.0 && sc.masses[1] > 0.0, kMasses, "masses must be positive");
  check(sc.spring_constant >= 0.0, kSpringConstant, "must be non-negative");
  check(sc.rest_length >= 0.0, kRestLength, "must be non-negative");
  check(sc.friction[0] >= 0.0 && sc.friction[1] >= 0.0, kFriction, "must be non-negative");
  check(sc.end_time > 0.0, kEndTime, "must be positive");
  check(sc.time_step > 0.0, kTimeStep, "must be positive");
  check(sc.time_step <= sc.end_time, kTimeStep, "must not exceed the end time");
  check(sc.output_interval >= sc.time_step, kOutputInterval,
        "must be at least the time step");
  return sc;
}

std::string format_number(double value) {
  if (value == 0.0) value = 0.0;
  std::array<char, 40> buf{};
  const int n = std::snprintf(buf.data(), buf.size(), "%.9e", value);
  return std::string(buf.data(), static_cast<std::size_t>(n));
}

std::string format_result(const State12& s) {
  std::string out;
  auto line = [&out](const char* label, const Vec3& v) {
    out += label;
    out += format_number(v.x) + ' ' + format_number(v.y) + ' ' + format_number(v.z) + '\n';
  };
  line("final position body 1: ", s.position(0));
  line("final position body 2: ", s.position(1));
  line("final velocity body 1: ", s.velocity(0));
  line("final velocity body 2: ", s.velocity(1));
  return out;
}

std::string format_trajectory(const Trajectory& traj) {
  std::string out = "t,x1x,x1y,x1z,x2x,x2y,x2z,v1x,v1y,v1z,v2x,v2y,v2z\n";
  for (const auto& sample : traj.samples) {
    out += format_number(sample.t);
    for (double v : sample.state.y) {
      out += ',';
      out += format_number(v);
    }
    out += '\n';
  }
  return out;
}

}  // namespace spring

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "spring/ode.hpp"

namespace spring {

/// Why a scenario document was rejected.
enum class ScenarioErrorKind {
  MalformedJson,
  NotAnObject,
  MissingKey,
  UnknownKey,
  WrongType,
  WrongArity,
  NonFinite,
  Constraint,
};

std::string_view to_string(ScenarioErrorKind kind);

class ScenarioError : public std::runtime_error {
 public:
  ScenarioError(ScenarioErrorKind kind, std::string key, const std::string& message);

  ScenarioErrorKind kind() const noexcept { return kind_; }
  /// The offending JSON key; empty for document-level errors.
  const std::string& key() const noexcept { return key_; }

 private:
  ScenarioErrorKind kind_;
  std::string key_;
};

/// Parses a JSON scenario document. Optional keys take the documented
/// defaults; unknown keys are rejected.
SpringScenario parse_scenario(std::string_view text);

/// Renders one number as `%.9e`, with negative zero printed as positive.
std::string format_number(double value);

/// The four-line final-state report used as golden output.
std::string format_result(const State12& final_state);

/// CSV with a header row and one row per trajectory sample.
std::string format_trajectory(const Trajectory& traj);

}  // namespace spring

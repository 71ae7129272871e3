#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <random>
#include <string>

#include "spring/scenario.hpp"
#include "test_support.hpp"

namespace spring {
namespace {

const char* const kTestcase1 = R"({
  "masses": [13.5, 29.75],
  "spring constant": 42,
  "rest length": 2.25,
  "initial positions": [[1, 2, 3], [4, 5, 6]],
  "initial velocities": [[0, 0, 0], [1, 1, 1]]
})";

// Replaces the first occurrence of `from` in `text`.
std::string edit(std::string text, const std::string& from, const std::string& to) {
  const auto at = text.find(from);
  EXPECT_NE(at, std::string::npos) << from;
  return text.replace(at, from.size(), to);
}

void expect_error(const std::string& doc, ScenarioErrorKind kind, const std::string& key) {
  try {
    parse_scenario(doc);
    ADD_FAILURE() << "expected " << to_string(kind) << " for:\n" << doc;
  } catch (const ScenarioError& e) {
    EXPECT_EQ(e.kind(), kind) << e.what();
    EXPECT_EQ(e.key(), key) << e.what();
    if (!key.empty()) {
      EXPECT_NE(std::string(e.what()).find(key), std::string::npos) << e.what();
    }
  }
}

TEST(ParseScenario, Testcase1WithDefaults) {
  const SpringScenario sc = parse_scenario(kTestcase1);
  EXPECT_EQ(sc.masses, (std::array<double, 2>{13.5, 29.75}));
  EXPECT_EQ(sc.spring_constant, 42.0);
  EXPECT_EQ(sc.rest_length, 2.25);
  EXPECT_EQ(sc.initial_positions[0], (Vec3{1, 2, 3}));
  EXPECT_EQ(sc.initial_positions[1], (Vec3{4, 5, 6}));
  EXPECT_EQ(sc.initial_velocities[0], (Vec3{0, 0, 0}));
  EXPECT_EQ(sc.initial_velocities[1], (Vec3{1, 1, 1}));
  EXPECT_EQ(sc.friction, (std::array<double, 2>{0.0, 0.0}));
  EXPECT_EQ(sc.gravity, 9.81);
  EXPECT_EQ(sc.end_time, 5.0);
  EXPECT_EQ(sc.time_step, 1e-3);
  EXPECT_EQ(sc.output_interval, 0.01);
}

TEST(ParseScenario, FrictionAndMasses) {
  const std::string doc = edit(edit(kTestcase1, "[13.5, 29.75]", "[1, 1]"), "\"rest length\"",
                               "\"friction\": [1.0, 1.0], \"rest length\"");
  const SpringScenario sc = parse_scenario(doc);
  EXPECT_EQ(sc.friction, (std::array<double, 2>{1.0, 1.0}));
  EXPECT_EQ(sc.masses, (std::array<double, 2>{1.0, 1.0}));
}

TEST(ParseScenario, ExplicitDefaultsEqualImplicitDefaults) {
  const std::string explicit_doc = edit(
      kTestcase1, "\"rest length\"",
      "\"friction\": [0, 0], \"gravity\": 9.81, \"end time\": 5.0, \"time step\": 0.001, "
      "\"output interval\": 0.01, \"rest length\"");
  EXPECT_EQ(parse_scenario(explicit_doc), parse_scenario(kTestcase1));
}

TEST(ParseScenario, BundledFixturesParse) {
  for (int i = 1; i <= 5; ++i) {
    const std::string name = "testcase-" + std::to_string(i) + ".json";
    EXPECT_NO_THROW(parse_scenario(testing::fixture(name))) << name;
  }
}

TEST(ParseScenario, MissingRequiredKeys) {
  expect_error(edit(kTestcase1, "\"masses\": [13.5, 29.75],", ""),
               ScenarioErrorKind::MissingKey, "masses");
  expect_error(edit(kTestcase1, "\"spring constant\": 42,", ""),
               ScenarioErrorKind::MissingKey, "spring constant");
  expect_error(edit(kTestcase1, "\"rest length\": 2.25,", ""),
               ScenarioErrorKind::MissingKey, "rest length");
  expect_error(edit(kTestcase1, "\"initial positions\": [[1, 2, 3], [4, 5, 6]],", ""),
               ScenarioErrorKind::MissingKey, "initial positions");
  expect_error(edit(kTestcase1, ",\n  \"initial velocities\": [[0, 0, 0], [1, 1, 1]]", ""),
               ScenarioErrorKind::MissingKey, "initial velocities");
}

TEST(ParseScenario, ConstraintViolations) {
  expect_error(edit(kTestcase1, "[13.5, 29.75]", "[0, 1]"), ScenarioErrorKind::Constraint,
               "masses");
  expect_error(edit(kTestcase1, "[13.5, 29.75]", "[1, -2]"), ScenarioErrorKind::Constraint,
               "masses");
  expect_error(edit(kTestcase1, "\"spring constant\": 42", "\"spring constant\": -1"),
               ScenarioErrorKind::Constraint, "spring constant");
  expect_error(edit(kTestcase1, "2.25", "-0.5"), ScenarioErrorKind::Constraint, "rest length");
  expect_error(edit(kTestcase1, "\"rest length\"", "\"friction\": [0, -1], \"rest length\""),
               ScenarioErrorKind::Constraint, "friction");
  expect_error(edit(kTestcase1, "\"rest length\"", "\"end time\": 0, \"rest length\""),
               ScenarioErrorKind::Constraint, "end time");
  expect_error(edit(kTestcase1, "\"rest length\"", "\"time step\": 0, \"rest length\""),
               ScenarioErrorKind::Constraint, "time step");
  expect_error(edit(kTestcase1, "\"rest length\"", "\"time step\": 6, \"rest length\""),
               ScenarioErrorKind::Constraint, "time step");
  expect_error(
      edit(kTestcase1, "\"rest length\"", "\"output interval\": 0.0001, \"rest length\""),
      ScenarioErrorKind::Constraint, "output interval");
}

TEST(ParseScenario, ShapeAndTypeErrors) {
  expect_error(edit(kTestcase1, "[13.5, 29.75]", "[13.5]"), ScenarioErrorKind::WrongArity,
               "masses");
  expect_error(edit(kTestcase1, "[4, 5, 6]", "[4, 5]"), ScenarioErrorKind::WrongArity,
               "initial positions");
  expect_error(edit(kTestcase1, "[[0, 0, 0], [1, 1, 1]]", "[[0, 0, 0]]"),
               ScenarioErrorKind::WrongArity, "initial velocities");
  expect_error(edit(kTestcase1, "42", "\"42\""), ScenarioErrorKind::WrongType,
               "spring constant");
  expect_error(edit(kTestcase1, "[13.5, 29.75]", "13.5"), ScenarioErrorKind::WrongType,
               "masses");
  expect_error(edit(kTestcase1, "[1, 2, 3]", "[1, null, 3]"), ScenarioErrorKind::WrongType,
               "initial positions");
}

TEST(ParseScenario, UnknownKeyIsRejected) {
  expect_error(edit(kTestcase1, "\"rest length\"", "\"fricton\": [1, 1], \"rest length\""),
               ScenarioErrorKind::UnknownKey, "fricton");
}

TEST(ParseScenario, DocumentLevelErrors) {
  expect_error("{\"masses\": [1, 1", ScenarioErrorKind::MalformedJson, "");
  expect_error("", ScenarioErrorKind::MalformedJson, "");
  expect_error("[1, 2]", ScenarioErrorKind::NotAnObject, "");
}

TEST(ParseScenario, OverflowingNumberIsNonFinite) {
  expect_error(edit(kTestcase1, "2.25", "1e999"), ScenarioErrorKind::NonFinite, "");
  expect_error(edit(kTestcase1, "2.25", "-1e400"), ScenarioErrorKind::NonFinite, "");
}

// ---------------------------------------------------------------------------
// Formatting

TEST(FormatResult, AllZero) {
  const std::string zero = "0.000000000e+00 0.000000000e+00 0.000000000e+00\n";
  EXPECT_EQ(format_result(State12{}),
            "final position body 1: " + zero + "final position body 2: " + zero +
                "final velocity body 1: " + zero + "final velocity body 2: " + zero);
}

TEST(FormatResult, NumberRendering) {
  EXPECT_EQ(format_number(-122.625), "-1.226250000e+02");
  EXPECT_EQ(format_number(3.132092), "3.132092000e+00");
  EXPECT_EQ(format_number(std::sqrt(9.81)), "3.132091953e+00");
  EXPECT_EQ(format_number(-0.0), "0.000000000e+00");
  EXPECT_EQ(format_number(4.863e-19), "4.863000000e-19");
  EXPECT_EQ(format_number(1e300), "1.000000000e+300");
}

TEST(FormatResult, FourLinesInBodyOrder) {
  State12 s;
  for (std::size_t i = 0; i < 12; ++i) s.y[i] = static_cast<double>(i + 1);
  const std::string text = format_result(s);
  EXPECT_EQ(text,
            "final position body 1: 1.000000000e+00 2.000000000e+00 3.000000000e+00\n"
            "final position body 2: 4.000000000e+00 5.000000000e+00 6.000000000e+00\n"
            "final velocity body 1: 7.000000000e+00 8.000000000e+00 9.000000000e+00\n"
            "final velocity body 2: 1.000000000e+01 1.100000000e+01 1.200000000e+01\n");
}

TEST(FormatResult, NegativeZeroNormalized) {
  State12 a;
  State12 b;
  b.y[3] = -0.0;
  b.y[11] = -0.0;
  EXPECT_EQ(format_result(a), format_result(b));
}

TEST(FormatResult, ReparsesWithinHalfUlpOfTenDigits) {
  std::mt19937_64 gen(1234);
  std::uniform_real_distribution<double> mantissa(-10.0, 10.0);
  std::uniform_int_distribution<int> exponent(-30, 30);
  for (int trial = 0; trial < 5000; ++trial) {
    const double v = mantissa(gen) * std::pow(10.0, exponent(gen));
    const std::string text = format_number(v);
    EXPECT_EQ(text, format_number(v));
    const double back = std::strtod(text.c_str(), nullptr);
    EXPECT_LE(std::abs(back - v), 5e-10 * std::abs(v)) << text;
  }
}

TEST(FormatTrajectory, HeaderAndRows) {
  Trajectory traj;
  traj.samples.push_back({0.0, State12{}});
  std::string csv = format_trajectory(traj);
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "t,x1x,x1y,x1z,x2x,x2y,x2z,v1x,v1y,v1z,v2x,v2y,v2z");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 2);

  SpringScenario sc = parse_scenario(kTestcase1);
  sc.end_time = 0.5;
  traj = integrate(sc);
  csv = format_trajectory(traj);
  EXPECT_EQ(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')),
            traj.samples.size() + 1);

  // t column strictly increasing and ending at the end time.
  std::istringstream rows(csv);
  std::string row;
  std::getline(rows, row);
  double prev = -1.0;
  double last = 0.0;
  while (std::getline(rows, row)) {
    EXPECT_EQ(std::count(row.begin(), row.end(), ','), 12);
    last = std::strtod(row.c_str(), nullptr);
    EXPECT_GT(last, prev);
    prev = last;
  }
  EXPECT_EQ(last, 0.5);
}

}  // namespace
}  // namespace spring

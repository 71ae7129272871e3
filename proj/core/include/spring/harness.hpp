#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "spring/numdiff.hpp"
#include "spring/ode.hpp"

namespace spring::harness {

namespace fs = std::filesystem;

/// One `<stem>.json` input and its `<stem>.reference` golden output.
struct TestCase {
  std::string name;
  fs::path input_path;
  fs::path reference_path;
};

enum class Status { Pass, Fail, MissingReference, RunError };

std::string_view to_string(Status status);

struct TestResult {
  std::string name;
  Status status = Status::RunError;
  std::optional<numdiff::ComparisonReport> report;  // set for Pass and Fail
  std::string error;                                // set for RunError
};

/// Applied to every parsed scenario before integration. Lets callers perturb
/// the simulator's constants without touching input files.
using ScenarioTransform = std::function<void(SpringScenario&)>;

class HarnessError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads a whole file. Throws HarnessError if it cannot be opened.
std::string read_file(const fs::path& path);
void write_file(const fs::path& path, std::string_view contents);

/// Parses, integrates and formats the final state of one scenario document.
/// This is the same path `spring run` takes.
std::string simulate(std::string_view scenario_json,
                     const ScenarioTransform& transform = {});

/// Every `*.json` regular file in `dir`, sorted by file name.
std::vector<TestCase> discover(const fs::path& dir);

TestResult run_test(const TestCase& tc, const numdiff::Tolerance& tol,
                    const ScenarioTransform& transform = {});

struct RunReport {
  std::string text;
  int exit_code = 0;
  std::vector<TestResult> results;
};

/// Runs every discovered test (concurrently) and assembles the dot/X table
/// in discovery order, followed by one diagnostic block per failing test.
/// Exit code 0 iff all pass, 1 if any fail, 2 if discovery fails.
RunReport run_all(const fs::path& dir, const numdiff::Tolerance& tol,
                  const ScenarioTransform& transform = {});

/// The ` .    name` / ` X    name` line for one result, newline included.
std::string table_line(const TestResult& result);

struct BlessSummary {
  std::vector<std::string> updated;  // reference file names written
  std::vector<std::pair<std::string, std::string>> errors;  // test name, message
  std::string text;
  int exit_code = 0;
};

/// Regenerates `.reference` files from current simulator output. With no
/// names, every discovered test is blessed. Names may be given with or
/// without the `.json` suffix.
BlessSummary bless(const fs::path& dir, const std::vector<std::string>& names = {});

}  // namespace spring::harness

#include "spring/harness.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

#include "spring/scenario.hpp"

namespace spring::harness {

std::string_view to_string(Status status) {
  switch (status) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::MissingReference: return "MISSING REFERENCE";
    case Status::RunError: return "RUN ERROR";
  }
  return "UNKNOWN";
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw HarnessError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw HarnessError("error reading " + path.string());
  return ss.str();
}

void write_file(const fs::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw HarnessError("cannot write " + path.string());
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw HarnessError("error writing " + path.string());
}

std::string simulate(std::string_view scenario_json, const ScenarioTransform& transform) {
  SpringScenario sc = parse_scenario(scenario_json);
  if (transform) {
    transform(sc);
    if (auto problem = validate(sc); !problem.empty()) throw HarnessError(problem);
  }
  return format_result(integrate(sc).final().state);
}

std::vector<TestCase> discover(const fs::path& dir) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw HarnessError("not a directory: " + dir.string());

  std::vector<TestCase> cases;
  fs::directory_iterator it(dir, ec);
  if (ec) throw HarnessError("cannot read directory " + dir.string() + ": " + ec.message());
  for (const auto& entry : it) {
    if (!entry.is_regular_file(ec) || entry.path().extension() != ".json") continue;
    TestCase tc;
    tc.name = entry.path().filename().string();
    tc.input_path = entry.path();
    tc.reference_path = fs::path(entry.path()).replace_extension(".reference");
    cases.push_back(std::move(tc));
  }
  std::sort(cases.begin(), cases.end(),
            [](const TestCase& a, const TestCase& b) { return a.name < b.name; });
  return cases;
}

TestResult run_test(const TestCase& tc, const numdiff::Tolerance& tol,
                    const ScenarioTransform& transform) {
  TestResult result;
  result.name = tc.name;

  std::string output;
  try {
    output = simulate(read_file(tc.input_path), transform);
  } catch (const std::exception& e) {
    result.status = Status::RunError;
    result.error = e.what();
    return result;
  }

  std::error_code ec;
  if (!fs::exists(tc.reference_path, ec)) {
    result.status = Status::MissingReference;
    result.error = "no reference file " + tc.reference_path.filename().string();
    return result;
  }
  std::string reference;
  try {
    reference = read_file(tc.reference_path);
  } catch (const std::exception& e) {
    result.status = Status::RunError;
    result.error = e.what();
    return result;
  }

  result.report = numdiff::compare(reference, output, tol);
  result.status = result.report->equal() ? Status::Pass : Status::Fail;
  return result;
}

std::string table_line(const TestResult& result) {
  return std::string(" ") + (result.status == Status::Pass ? '.' : 'X') + "    " +
         result.name + "\n";
}

namespace {

// Runs `work(i)` for i in [0, n) on a small worker pool.
template <typename Work>
void parallel_for(std::size_t n, Work&& work) {
  const std::size_t workers =
      std::min<std::size_t>(n, std::max(1u, std::thread::hardware_concurrency()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) work(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) work(i);
    });
  }
}

std::string diagnostic(const TestResult& r) {
  std::string out = "\n" + r.name + ": " + std::string(to_string(r.status)) + "\n";
  if (r.status == Status::Fail) {
    out += numdiff::render(*r.report);
  } else {
    out += r.error + "\n";
  }
  return out;
}

}  // namespace

RunReport run_all(const fs::path& dir, const numdiff::Tolerance& tol,
                  const ScenarioTransform& transform) {
  RunReport report;
  std::vector<TestCase> cases;
  try {
    cases = discover(dir);
  } catch (const std::exception& e) {
    report.text = std::string("error: ") + e.what() + "\n";
    report.exit_code = 2;
    return report;
  }

  report.results.resize(cases.size());
  parallel_for(cases.size(), [&](std::size_t i) {
    report.results[i] = run_test(cases[i], tol, transform);
  });

  std::string diagnostics;
  for (const auto& r : report.results) {
    report.text += table_line(r);
    if (r.status != Status::Pass) {
      diagnostics += diagnostic(r);
      report.exit_code = 1;
    }
  }
  report.text += diagnostics;
  return report;
}

BlessSummary bless(const fs::path& dir, const std::vector<std::string>& names) {
  BlessSummary summary;
  std::vector<TestCase> cases;
  try {
    cases = discover(dir);
  } catch (const std::exception& e) {
    summary.text = std::string("error: ") + e.what() + "\n";
    summary.exit_code = 2;
    return summary;
  }

  std::vector<TestCase> selected;
  if (names.empty()) {
    selected = cases;
  } else {
    for (const auto& requested : names) {
      const std::string want = fs::path(requested).extension() == ".json"
                                   ? requested
                                   : requested + ".json";
      auto it = std::find_if(cases.begin(), cases.end(),
                             [&](const TestCase& tc) { return tc.name == want; });
      if (it == cases.end()) {
        summary.errors.emplace_back(requested, "no such test in " + dir.string());
      } else {
        selected.push_back(*it);
      }
    }
  }

  for (const auto& tc : selected) {
    try {
      write_file(tc.reference_path, simulate(read_file(tc.input_path)));
      summary.updated.push_back(tc.reference_path.filename().string());
      summary.text += "updated " + tc.reference_path.filename().string() + "\n";
    } catch (const std::exception& e) {
      summary.errors.emplace_back(tc.name, e.what());
    }
  }
  for (const auto& [name, message] : summary.errors) {
    summary.text += "error: " + name + ": " + message + "\n";
  }
  if (!summary.errors.empty()) summary.exit_code = 1;
  return summary;
}

}  // namespace spring::harness

#include "cli.hpp"

#include <cmath>
#include <optional>

#include "CLI11.hpp"
#include "spring/harness.hpp"
#include "spring/lineage.hpp"
#include "spring/numdiff.hpp"
#include "spring/scenario.hpp"

namespace spring::cli {

namespace {

constexpr int kUsageError = 2;

int parse_args(CLI::App& app, const std::string& program,
               const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  std::vector<const char*> argv{program.c_str()};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << program << ": " << e.what() << "\n";
    return kUsageError;
  }
  return -1;
}

void add_tolerance(CLI::App& cmd, numdiff::Tolerance& tol) {
  cmd.add_option("-a,--absolute", tol.absolute, "Absolute tolerance")
      ->check(CLI::NonNegativeNumber);
  cmd.add_option("-r,--relative", tol.relative, "Relative tolerance")
      ->check(CLI::NonNegativeNumber);
}

bool check_tolerance(const numdiff::Tolerance& tol, std::ostream& err) {
  if (tol.valid()) return true;
  err << "error: tolerances must be finite and non-negative\n";
  return false;
}

int compare_files(const std::string& ref_path, const std::string& out_path,
                  const numdiff::Tolerance& tol, std::ostream& out, std::ostream& err) {
  if (!check_tolerance(tol, err)) return kUsageError;
  std::string ref;
  std::string cand;
  try {
    ref = harness::read_file(ref_path);
    cand = harness::read_file(out_path);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  const auto report = numdiff::compare(ref, cand, tol);
  out << numdiff::render(report);
  return report.equal() ? 0 : 1;
}

struct RunOptions {
  std::string input;
  std::string trajectory;
  std::optional<double> dt;
};

int do_run(const RunOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    SpringScenario sc = parse_scenario(harness::read_file(opt.input));
    if (opt.dt) {
      sc.time_step = *opt.dt;
      if (auto problem = validate(sc); !problem.empty()) {
        err << "error: --dt: " << problem << "\n";
        return kUsageError;
      }
    }
    const Trajectory traj = integrate(sc);
    if (!opt.trajectory.empty()) {
      harness::write_file(opt.trajectory, format_trajectory(traj));
    }
    out << format_result(traj.final().state);
    return 0;
  } catch (const IntegrationError& e) {
    err << "error: integration failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
}

struct GraphOptions {
  std::string dir;
  std::string dot_path;
  std::string matrix_path;
};

int do_graph(const GraphOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    const auto graph = lineage::lineage_graph(opt.dir);
    if (graph.nodes.empty()) {
      err << "error: no tests found in " << opt.dir << "\n";
      return kUsageError;
    }
    const std::string dot = lineage::to_dot(graph);
    if (opt.dot_path.empty() || opt.dot_path == "-") {
      out << dot;
    } else {
      harness::write_file(opt.dot_path, dot);
    }
    if (!opt.matrix_path.empty()) {
      harness::write_file(opt.matrix_path, lineage::to_matrix_csv(graph));
    }
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
}

}  // namespace

int spring_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-body spring simulator with a golden-file regression harness", "spring"};
  app.require_subcommand(1);

  RunOptions run_opt;
  auto* run = app.add_subcommand("run", "Simulate one scenario and print the final state");
  run->add_option("input", run_opt.input, "Scenario JSON file")->required();
  run->add_option("--trajectory", run_opt.trajectory, "Write the sampled trajectory as CSV");
  run->add_option("--dt", run_opt.dt, "Override the time step")->check(CLI::PositiveNumber);

  std::string test_dir;
  numdiff::Tolerance test_tol;
  auto* test = app.add_subcommand("test", "Run every testcase in DIR against its reference");
  test->add_option("dir", test_dir, "Test directory")->required();
  add_tolerance(*test, test_tol);

  std::string bless_dir;
  std::vector<std::string> bless_names;
  auto* bless = app.add_subcommand("bless", "Overwrite references with current output");
  bless->add_option("dir", bless_dir, "Test directory")->required();
  bless->add_option("names", bless_names, "Tests to bless (default: all)");

  GraphOptions graph_opt;
  auto* graph = app.add_subcommand("graph", "Emit the test-lineage graph as DOT");
  graph->add_option("dir", graph_opt.dir, "Test directory")->required();
  graph->add_option("-o,--output", graph_opt.dot_path, "DOT output file (default: stdout)");
  graph->add_option("--matrix", graph_opt.matrix_path, "Write the distance matrix as CSV");

  std::string nd_ref;
  std::string nd_out;
  numdiff::Tolerance nd_tol;
  auto* nd = app.add_subcommand("numdiff", "Compare two files with numeric tolerances");
  add_tolerance(*nd, nd_tol);
  nd->add_option("reference", nd_ref, "Reference file")->required();
  nd->add_option("candidate", nd_out, "Candidate file")->required();

  if (int code = parse_args(app, "spring", args, out, err); code >= 0) return code;

  if (*run) return do_run(run_opt, out, err);
  if (*test) {
    if (!check_tolerance(test_tol, err)) return kUsageError;
    const auto report = harness::run_all(test_dir, test_tol);
    out << report.text;
    return report.exit_code;
  }
  if (*bless) {
    const auto summary = harness::bless(bless_dir, bless_names);
    out << summary.text;
    return summary.exit_code;
  }
  if (*graph) return do_graph(graph_opt, out, err);
  return compare_files(nd_ref, nd_out, nd_tol, out, err);
}

int numdiff_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Compare two files, treating numbers within tolerance as equal", "numdiff"};
  std::string ref;
  std::string cand;
  numdiff::Tolerance tol;
  add_tolerance(app, tol);
  app.add_option("reference", ref, "Reference file")->required();
  app.add_option("candidate", cand, "Candidate file")->required();
  if (int code = parse_args(app, "numdiff", args, out, err); code >= 0) return code;
  return compare_files(ref, cand, tol, out, err);
}

}  // namespace spring::cli

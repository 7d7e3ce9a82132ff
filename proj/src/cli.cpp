#include "wormsim/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "wormsim/experiment.hpp"
#include "wormsim/fixture.hpp"
#include "wormsim/simulator.hpp"

namespace wsn {

namespace fs = std::filesystem;

namespace {

fs::path output_dir(const std::string& flag, const std::string& fallback) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv(kOutputDirEnv); env && *env) return env;
  return fallback.empty() ? "wsnsim_out" : fallback;
}

fs::path prepare(const fs::path& dir) {
  fs::create_directories(dir);
  return dir;
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw UsageError("cannot write " + path.string());
  os << text;
}

int exit_for(Outcome o) {
  switch (o) {
    case Outcome::RouteEstablished: return kExitOk;
    case Outcome::AttackDetected: return kExitAttack;
    case Outcome::Timeout: return kExitTimeout;
  }
  return kExitError;
}

int cmd_run(const std::string& file, const std::string& out_flag, std::ostream& out) {
  ScenarioConfig cfg = load_scenario(file);
  RunResult r = run(cfg);
  fs::path trace_path = prepare(output_dir(out_flag, "")) / (fs::path(file).stem().string() + ".trace");
  write_file(trace_path, r.trace.render());
  out << metrics_csv_header() << '\n' << metrics_csv_row(r.metrics) << '\n';
  out << "trace: " << trace_path.string() << '\n';
  return exit_for(r.metrics.outcome);
}

int cmd_compare(const std::string& file, const std::string& out_flag, std::size_t seeds, std::ostream& out) {
  ScenarioConfig cfg = load_scenario(file);
  std::string csv = overhead_csv_header() + "\n";
  for (std::size_t i = 0; i < seeds; ++i) {
    ScenarioConfig c = cfg;
    c.seed = cfg.seed + i;
    csv += overhead_csv_row(measure_overhead(c)) + "\n";
  }
  fs::path path = prepare(output_dir(out_flag, "")) / (fs::path(file).stem().string() + "_compare.csv");
  write_file(path, csv);
  out << csv << "csv: " << path.string() << '\n';
  return kExitOk;
}

int cmd_sweep(const std::string& file, const std::string& out_flag, unsigned jobs, std::ostream& out) {
  ExperimentSpec spec = load_experiment(file);
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  std::vector<SweepRow> rows = run_sweep(spec, jobs);
  fs::path dir = prepare(output_dir(out_flag, spec.output_dir));

  std::string runs = sweep_csv_header() + "\n";
  for (const auto& r : rows) runs += sweep_csv_row(r) + "\n";
  write_file(dir / "runs.csv", runs);

  std::string agg = aggregate_csv_header() + "\n";
  for (const auto& a : aggregate(rows)) agg += aggregate_csv_row(a) + "\n";
  write_file(dir / "aggregate.csv", agg);

  out << agg;
  out << fmt::format("{} runs -> {}\n", rows.size(), dir.string());
  return kExitOk;
}

int cmd_fixtures(std::ostream& out) {
  bool all = true;
  for (const auto& c : fixture::canonical_cases()) {
    fixture::CaseResult r = fixture::run_case(c);
    std::string verdict = r.verdict ? std::string(to_string(*r.verdict)) : "NoVerdict";
    bool ok = r.verdict == c.expected;
    all = all && ok;
    out << fmt::format("{:<20} {:<16} check at {} responders={} tag_sum={}{}\n", verdict, c.name, c.checker,
                       fixture::letters(r.responders), r.tag_sum, ok ? "" : "  (unexpected)");
  }
  return all ? kExitOk : kExitError;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Wormhole-prevention route discovery simulator", "wsnsim"};
  app.require_subcommand(1);
  std::string out_dir;
  app.add_option("-o,--output-dir", out_dir, fmt::format("Output directory (default ${} or ./wsnsim_out)", kOutputDirEnv));

  std::string run_file, compare_file, sweep_file;
  std::size_t seeds = 1;
  unsigned jobs = 0;
  auto* run_cmd = app.add_subcommand("run", "Run one scenario");
  run_cmd->add_option("scenario", run_file, "Scenario file")->required();
  auto* compare_cmd = app.add_subcommand("compare", "Baseline vs prevention paired runs");
  compare_cmd->add_option("scenario", compare_file, "Scenario file")->required();
  compare_cmd->add_option("--seeds", seeds, "Number of consecutive seeds")->check(CLI::PositiveNumber);
  auto* sweep_cmd = app.add_subcommand("sweep", "Batch experiment over seeds");
  sweep_cmd->add_option("experiment", sweep_file, "Experiment file")->required();
  sweep_cmd->add_option("-j,--jobs", jobs, "Worker threads (0 = all cores)");
  auto* fixtures_cmd = app.add_subcommand("fixtures", "Canonical checks on the 15-node fixture");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*run_cmd) return cmd_run(run_file, out_dir, out);
    if (*compare_cmd) return cmd_compare(compare_file, out_dir, seeds, out);
    if (*sweep_cmd) return cmd_sweep(sweep_file, out_dir, jobs, out);
    if (*fixtures_cmd) return cmd_fixtures(out);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitError;
}

}  // namespace wsn

#include "wormsim/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <set>
#include <thread>

#include <fmt/format.h>

#include "wormsim/simulator.hpp"

namespace wsn {

namespace {
std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}
}  // namespace

ExperimentSpec parse_experiment(std::istream& is) {
  ExperimentSpec spec;
  ScenarioConfig defaults;
  std::vector<std::pair<std::string, std::vector<std::pair<std::string, std::string>>>> sections;
  std::vector<int> section_lines;
  std::vector<std::vector<int>> setting_lines;
  std::set<std::string> names;

  std::string raw_line;
  int lineno = 0;
  while (std::getline(is, raw_line)) {
    ++lineno;
    if (auto hash = raw_line.find('#'); hash != std::string::npos) raw_line.erase(hash);
    std::string line = trim(raw_line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError(lineno, "unterminated section header");
      std::string name = trim(std::string_view(line).substr(1, line.size() - 2));
      if (name.empty()) throw ParseError(lineno, "empty experiment name");
      if (!names.insert(name).second) throw ParseError(lineno, fmt::format("duplicate experiment `{}`", name));
      sections.push_back({name, {}});
      section_lines.push_back(lineno);
      setting_lines.emplace_back();
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(lineno, "expected `key = value`");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (!sections.empty()) {
      sections.back().second.emplace_back(key, value);
      setting_lines.back().push_back(lineno);
    } else if (key == "repetitions") {
      long long n = 0;
      try {
        n = std::stoll(value);
      } catch (const std::exception&) {
        throw ParseError(lineno, fmt::format("`repetitions`: cannot parse `{}`", value));
      }
      if (n < 1) throw ConfigError("repetitions", "must be at least 1");
      spec.repetitions = static_cast<std::size_t>(n);
    } else if (key == "output_dir") {
      spec.output_dir = value;
    } else {
      apply_setting(defaults, key, value, lineno);
    }
  }
  if (sections.empty()) throw ParseError(lineno, "no [experiment] sections");

  for (std::size_t i = 0; i < sections.size(); ++i) {
    ScenarioConfig cfg = defaults;
    const auto& settings = sections[i].second;
    for (std::size_t j = 0; j < settings.size(); ++j) {
      apply_setting(cfg, settings[j].first, settings[j].second, setting_lines[i][j]);
    }
    validate(cfg);
    spec.experiments.emplace_back(sections[i].first, std::move(cfg));
  }
  return spec;
}

ExperimentSpec load_experiment(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open experiment file " + path);
  return parse_experiment(in);
}

std::vector<SweepRow> run_sweep(const ExperimentSpec& spec, unsigned jobs) {
  struct Job {
    std::string name;
    ScenarioConfig cfg;
  };
  std::vector<Job> work;
  for (const auto& [name, cfg] : spec.experiments) {
    for (std::size_t r = 0; r < spec.repetitions; ++r) {
      Job j{name, cfg};
      j.cfg.seed = cfg.seed + r;
      work.push_back(std::move(j));
    }
  }
  std::stable_sort(work.begin(), work.end(), [](const Job& a, const Job& b) {
    return std::tie(a.name, a.cfg.seed) < std::tie(b.name, b.cfg.seed);
  });

  std::vector<SweepRow> rows(work.size());
  std::vector<std::exception_ptr> errors(work.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < work.size(); i = next++) {
      try {
        rows[i] = SweepRow{work[i].name, measure_overhead(work[i].cfg)};
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(work.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

std::vector<AggregateRow> aggregate(const std::vector<SweepRow>& rows) {
  std::map<std::pair<std::string, int>, AggregateRow> groups;
  for (const SweepRow& s : rows) {
    AggregateRow& g = groups[{s.experiment, s.row.hops}];
    g.experiment = s.experiment;
    g.hops = s.row.hops;
    ++g.runs;
    g.mean_baseline_time += s.row.baseline_time;
    g.mean_prevention_time += s.row.prevention_time;
    g.mean_baseline_energy += s.row.baseline_energy;
    g.mean_prevention_energy += s.row.prevention_energy;
    g.max_collection_time = std::max(g.max_collection_time, s.row.max_collection_time);
    if (s.row.prevention_outcome == Outcome::AttackDetected) ++g.detections;
  }
  std::vector<AggregateRow> out;
  for (auto& [_, g] : groups) {
    const double n = static_cast<double>(g.runs);
    g.mean_baseline_time /= n;
    g.mean_prevention_time /= n;
    g.mean_baseline_energy /= n;
    g.mean_prevention_energy /= n;
    out.push_back(g);
  }
  return out;
}

std::string sweep_csv_header() { return "experiment," + overhead_csv_header(); }

std::string sweep_csv_row(const SweepRow& r) { return r.experiment + "," + overhead_csv_row(r.row); }

std::string aggregate_csv_header() {
  return "experiment,hops,runs,mean_baseline_rrep_time,mean_prevention_rrep_time,mean_baseline_rrep_energy,"
         "mean_prevention_rrep_energy,max_ack_collection_time,prevention_detections";
}

std::string aggregate_csv_row(const AggregateRow& r) {
  return fmt::format("{},{},{},{:.6f},{:.6f},{:.3f},{:.3f},{:.6f},{}", r.experiment, r.hops, r.runs,
                     r.mean_baseline_time, r.mean_prevention_time, r.mean_baseline_energy, r.mean_prevention_energy,
                     r.max_collection_time, r.detections);
}

}  // namespace wsn

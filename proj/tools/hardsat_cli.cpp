// hardsat command line: generate, solve, experiment, sweep, oracle.
//
// Exit codes: 0 success, 1 usage or input error, 2 infeasible oracle request.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hardsat/dimacs.hpp"
#include "hardsat/engine.hpp"
#include "hardsat/events.hpp"
#include "hardsat/harness.hpp"
#include "hardsat/heuristics.hpp"
#include "hardsat/oracle.hpp"

namespace {

using namespace hardsat;

constexpr int kExitUsage = 1;
constexpr int kExitInfeasible = 2;

struct InfeasibleRequest : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string family = "guc-hard";
  std::string input;
  std::uint32_t m = 6;
  std::string graph = "complete:4";
  std::string heuristic = "guc";
  bool no_pure_literals = false;
  std::uint64_t seed = 1;
  std::uint64_t trials = 100;
  std::uint64_t sweep_seeds = 50;
  std::uint64_t budget = kDefaultBudget;
  std::string event = "x1-false";
  std::string out;
  std::string format;
  unsigned workers = 1;
  bool timing = false;
  bool trace = false;
  std::string mode;
  std::vector<std::uint32_t> sizes{6, 8, 10, 12, 14};
  std::uint32_t degree = 3;
  bool no_oracle = false;
  std::uint64_t node_limit = kDescentNodeLimit;
  bool list = false;
};

void add_instance_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--family", o.family, "guc-hard | rguc-hard | tseitin | dimacs-file")
      ->capture_default_str();
  cmd->add_option("--input", o.input, "DIMACS file (implies --family dimacs-file)");
  cmd->add_option("--M", o.m, "scaffold width")->capture_default_str();
  cmd->add_option("--graph", o.graph, "cycle:N | complete:N | regular:N:D:SEED")
      ->capture_default_str();
}

void add_heuristic_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--heuristic", o.heuristic, "guc | rguc")->capture_default_str();
  cmd->add_flag("--no-pure-literals", o.no_pure_literals, "disable the pure-literal step");
  cmd->add_option("--seed", o.seed, "random seed")->capture_default_str();
}

ExperimentConfig make_config(const Options& o) {
  ExperimentConfig cfg;
  cfg.family = o.input.empty() ? parse_family(o.family) : Family::dimacs_file;
  cfg.input_path = o.input;
  if (cfg.family == Family::dimacs_file && cfg.input_path.empty())
    throw std::invalid_argument("--family dimacs-file needs --input <path>");
  cfg.m = o.m;
  cfg.graph = o.graph;
  cfg.heuristic = o.heuristic;
  cfg.pure_literals = !o.no_pure_literals;
  cfg.trials = o.trials;
  cfg.master_seed = o.seed;
  cfg.budget = o.budget;
  cfg.event = parse_event(o.event);
  cfg.workers = o.workers;
  cfg.timing = o.timing;
  make_heuristic(cfg.heuristic);  // validate the name early
  return cfg;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out)
    throw std::runtime_error("write failed for " + path);
}

int cmd_generate(const Options& o) {
  const Instance inst = build_instance(make_config(o));
  write_output(o.out, write_dimacs(inst.formula, inst.provenance));
  return 0;
}

int cmd_solve(const Options& o) {
  const ExperimentConfig cfg = make_config(o);
  const Instance inst = build_instance(cfg);
  const auto h = make_heuristic(cfg.heuristic, {cfg.pure_literals});
  RandomSource rng(cfg.master_seed);
  SolveOptions opts;
  opts.budget = cfg.budget;
  if (o.trace)
    opts.trace = stream_trace(std::cerr);
  const RunStats stats = solve(inst.formula, *h, rng, opts);

  std::ostringstream out;
  if (o.format == "json") {
    nlohmann::json j{{"verdict", to_string(stats.verdict)},
                     {"total", stats.total_choices},
                     {"free", stats.free_choices},
                     {"forced", stats.forced_choices},
                     {"flips", stats.flips},
                     {"depth", stats.peak_depth},
                     {"seed", stats.seed}};
    if (stats.witness) {
      std::vector<long> w;
      for (Literal l : *stats.witness)
        w.push_back(l.to_dimacs());
      j["witness"] = w;
    }
    out << j.dump(2) << '\n';
  } else {
    out << "s " << (stats.verdict == Verdict::sat     ? "SATISFIABLE"
                    : stats.verdict == Verdict::unsat ? "UNSATISFIABLE"
                                                      : "UNKNOWN")
        << '\n';
    out << "c total " << stats.total_choices << " free " << stats.free_choices << " forced "
        << stats.forced_choices << " flips " << stats.flips << " depth " << stats.peak_depth
        << " seed " << stats.seed << '\n';
    if (stats.witness) {
      out << 'v';
      for (Literal l : *stats.witness)
        out << ' ' << l.to_dimacs();
      out << " 0\n";
    }
  }
  write_output(o.out, out.str());
  return 0;
}

int cmd_experiment(const Options& o) {
  const ExperimentConfig cfg = make_config(o);
  if (o.mode == "estimate") {
    EstimateOptions eo;
    eo.with_oracle = !o.no_oracle;
    eo.oracle_node_limit = o.node_limit;
    const ProbabilityEstimate est = estimate_probability(cfg, eo);
    if (o.format == "csv") {
      std::ostringstream out;
      out << "event,trials,hits,frequency,ci_low,ci_high,exact,exact_decimal\n";
      out << to_string(est.event) << ',' << est.trials << ',' << est.hits << ',' << est.frequency
          << ',' << est.ci95.low << ',' << est.ci95.high << ','
          << (est.exact ? to_string(*est.exact) : "") << ','
          << (est.exact ? std::to_string(est.exact->get_d()) : "") << '\n';
      write_output(o.out, out.str());
    } else {
      write_output(o.out, to_json(est).dump(2) + "\n");
    }
    return 0;
  }
  if (!o.mode.empty() && o.mode != "runs")
    throw std::invalid_argument("--mode must be runs or estimate");

  if (o.format == "json") {
    const ExperimentReport report = run_experiment(cfg);
    write_output(o.out, to_json(cfg, report.summary).dump(2) + "\n");
    return 0;
  }
  if (o.out.empty() || o.out == "-") {
    std::cout << kCsvHeader << '\n';
    const ExperimentReport report =
        run_experiment(cfg, [](const TrialRecord& r) { write_csv_row(std::cout, r); });
    return 0;
  }
  std::ofstream csv(o.out, std::ios::binary);
  if (!csv)
    throw std::runtime_error("cannot write " + o.out);
  csv << kCsvHeader << '\n';
  const ExperimentReport report =
      run_experiment(cfg, [&csv](const TrialRecord& r) { write_csv_row(csv, r); });
  if (!csv)
    throw std::runtime_error("write failed for " + o.out);
  write_output(std::filesystem::path(o.out).replace_extension(".json").string(),
               to_json(cfg, report.summary).dump(2) + "\n");
  return 0;
}

int cmd_sweep(const Options& o) {
  SweepConfig cfg;
  cfg.sizes = o.sizes;
  cfg.degree = o.degree;
  cfg.seeds = o.sweep_seeds;
  cfg.heuristic = o.heuristic;
  cfg.pure_literals = !o.no_pure_literals;
  cfg.budget = o.budget;
  cfg.master_seed = o.seed;
  cfg.workers = o.workers;
  make_heuristic(cfg.heuristic);
  const auto rows = scaling_sweep(cfg);
  if (o.out.empty() || o.out == "-") {
    std::cout << (o.format == "gnuplot" ? sweep_gnuplot(rows) : sweep_csv(rows));
    return 0;
  }
  // <out> gets the CSV, <out> with extension .dat the gnuplot table.
  write_output(o.out, sweep_csv(rows));
  write_output(std::filesystem::path(o.out).replace_extension(".dat").string(),
               sweep_gnuplot(rows));
  return 0;
}

int cmd_oracle(const Options& o) {
  const ExperimentConfig cfg = make_config(o);
  const Instance inst = build_instance(cfg);
  std::ostringstream out;
  try {
    if (o.mode == "sat") {
      const SatResult r = brute_force_sat(inst.formula);
      out << "s " << (r.satisfiable ? "SATISFIABLE" : "UNSATISFIABLE") << '\n';
      if (r.witness) {
        out << 'v';
        for (Literal l : *r.witness)
          out << ' ' << l.to_dimacs();
        out << " 0\n";
      }
    } else if (o.mode == "count") {
      const ModelCount r = enumerate_satisfying(inst.formula, o.list);
      out << r.count << '\n';
      for (const Assignment& a : r.models) {
        out << 'v';
        for (Literal l : a)
          out << ' ' << l.to_dimacs();
        out << " 0\n";
      }
    } else if (o.mode == "descent-prob") {
      const auto h = make_heuristic(cfg.heuristic, {cfg.pure_literals});
      const Event event{cfg.event, inst.scaffold_width};
      const ProbabilityResult r = descent_probability(
          inst.formula, *h, [&](const DescentRecord& d) { return event(d.terminal, d.assignment); },
          o.node_limit);
      if (!r.complete)
        throw InfeasibleRequest("descent enumeration exceeded " + std::to_string(o.node_limit) +
                                " nodes; partial mass " + to_string(r.value));
      out << to_string(r.value) << ' ' << r.value.get_d() << '\n';
    } else {
      throw std::invalid_argument("--mode must be sat, count or descent-prob");
    }
  } catch (const OracleLimitError& e) {
    throw InfeasibleRequest(e.what());
  }
  write_output(o.out, out.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Backtracking DPLL laboratory for GUC and Randomized GUC on hard satisfiable "
               "formulas"};
  app.require_subcommand(1);
  Options o;

  auto* generate = app.add_subcommand("generate", "emit a formula family as DIMACS");
  add_instance_flags(generate, o);
  generate->add_option("--seed", o.seed, "recorded in the header")->capture_default_str();
  generate->add_option("--out", o.out, "output path (default stdout)");

  auto* solve_cmd = app.add_subcommand("solve", "run the backtracking engine once");
  add_instance_flags(solve_cmd, o);
  add_heuristic_flags(solve_cmd, o);
  solve_cmd->add_option("--budget", o.budget, "maximum number of choices")->capture_default_str();
  solve_cmd->add_flag("--trace", o.trace, "dump every choice to stderr");
  solve_cmd->add_option("--format", o.format, "text | json");
  solve_cmd->add_option("--out", o.out, "output path (default stdout)");

  auto* experiment = app.add_subcommand("experiment", "seeded Monte Carlo trials");
  add_instance_flags(experiment, o);
  add_heuristic_flags(experiment, o);
  experiment->add_option("--trials", o.trials)->capture_default_str();
  experiment->add_option("--budget", o.budget)->capture_default_str();
  experiment->add_option("--event", o.event, "always | x1-false | all-true | satisfied")
      ->capture_default_str();
  experiment->add_option("--mode", o.mode, "runs (full solves) | estimate (first descents)");
  experiment->add_option("--format", o.format, "csv | json");
  experiment->add_option("--out", o.out, "output path (default stdout)");
  experiment->add_option("--workers", o.workers)->capture_default_str();
  experiment->add_flag("--timing", o.timing, "fill the ms column with wall time");
  experiment->add_flag("--no-oracle", o.no_oracle, "skip the exact value in estimate mode");
  experiment->add_option("--node-limit", o.node_limit)->capture_default_str();

  auto* sweep = app.add_subcommand("sweep", "choice-count scaling on random regular Tseitin cores");
  add_heuristic_flags(sweep, o);
  sweep->add_option("--sizes", o.sizes, "vertex counts")->delimiter(',');
  sweep->add_option("--degree", o.degree)->capture_default_str();
  sweep->add_option("--trials", o.sweep_seeds, "seeds per size")->capture_default_str();
  sweep->add_option("--budget", o.budget)->capture_default_str();
  sweep->add_option("--format", o.format, "csv | gnuplot (stdout only)");
  sweep->add_option("--out", o.out, "CSV path; a .dat gnuplot file is written alongside");
  sweep->add_option("--workers", o.workers)->capture_default_str();

  auto* oracle = app.add_subcommand("oracle", "exhaustive ground truth");
  add_instance_flags(oracle, o);
  add_heuristic_flags(oracle, o);
  oracle->add_option("--mode", o.mode, "sat | count | descent-prob")->required();
  oracle->add_option("--event", o.event, "always | x1-false | all-true | satisfied")
      ->capture_default_str();
  oracle->add_option("--node-limit", o.node_limit)->capture_default_str();
  oracle->add_flag("--list", o.list, "list models in count mode");
  oracle->add_option("--out", o.out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (generate->parsed())
      return cmd_generate(o);
    if (solve_cmd->parsed())
      return cmd_solve(o);
    if (experiment->parsed())
      return cmd_experiment(o);
    if (sweep->parsed())
      return cmd_sweep(o);
    if (oracle->parsed())
      return cmd_oracle(o);
  } catch (const InfeasibleRequest& e) {
    std::cerr << "hardsat: infeasible: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const std::exception& e) {
    std::cerr << "hardsat: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

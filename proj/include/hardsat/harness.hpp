#pragma once

// Experiment orchestration: seeded Monte Carlo trials, probability estimates
// with confidence intervals, choice-count scaling sweeps, and CSV/JSON
// reporting. All outputs are pure functions of the configuration (wall-clock
// timing is opt-in), so identical configurations give identical bytes.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hardsat/cnf.hpp"
#include "hardsat/engine.hpp"
#include "hardsat/events.hpp"
#include "hardsat/oracle.hpp"

namespace hardsat {

enum class Family { guc_hard, rguc_hard, tseitin, dimacs_file };

/// Accepts `guc-hard`, `rguc-hard`, `tseitin`, `dimacs-file`.
Family parse_family(std::string_view name);
std::string_view to_string(Family f);

struct ExperimentConfig {
  Family family = Family::guc_hard;
  std::uint32_t m = 6;
  std::string graph = "complete:4";
  std::string input_path;  // dimacs-file only
  std::string heuristic = "guc";
  bool pure_literals = true;
  std::uint64_t trials = 100;
  std::uint64_t master_seed = 1;
  std::uint64_t budget = kDefaultBudget;
  EventKind event = EventKind::x1_false;
  unsigned workers = 1;
  /// Fill the `ms` column with wall time. Off keeps reports reproducible.
  bool timing = false;
};

struct Instance {
  Formula formula;
  /// M for the scaffolded families, 0 otherwise.
  std::uint32_t scaffold_width = 0;
  /// DIMACS comment lines describing how the instance was built.
  std::vector<std::string> provenance;
};

/// Builds the configured formula: guc_hard / rguc_hard over a Tseitin core of
/// cfg.graph placed above x_M, the bare Tseitin formula, or a DIMACS file.
Instance build_instance(const ExperimentConfig& cfg);

/// Per-trial seed, a function of (master seed, trial index) only.
std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial);

struct TrialRecord {
  std::uint64_t trial = 0;
  std::uint64_t seed = 0;
  Verdict verdict = Verdict::budget_exhausted;
  std::uint64_t total = 0;
  std::uint64_t free = 0;
  std::uint64_t forced = 0;
  std::uint64_t flips = 0;
  std::uint64_t depth = 0;
  bool x1_false = false;
  bool all_true = false;
  bool descent_sat = false;
  double ms = 0.0;

  friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

struct ChoiceStats {
  double mean = 0;
  double median = 0;
  std::uint64_t min = 0;
  std::uint64_t max = 0;
};

ChoiceStats choice_stats(std::vector<std::uint64_t> values);

struct ExperimentSummary {
  std::uint64_t trials = 0;
  std::uint64_t sat = 0;
  std::uint64_t unsat = 0;
  std::uint64_t budget_exhausted = 0;
  ChoiceStats total_choices;
  std::uint64_t x1_false = 0;
  std::uint64_t all_true = 0;
  std::uint64_t descent_sat = 0;
};

struct ExperimentReport {
  std::vector<TrialRecord> records;  // ordered by trial index
  ExperimentSummary summary;
};

/// Runs cfg.trials full solves. `on_record` sees every record in trial
/// order as soon as it and its predecessors are done. An exception in any
/// trial aborts the experiment and is rethrown.
ExperimentReport run_experiment(const ExperimentConfig& cfg,
                                const std::function<void(const TrialRecord&)>& on_record = {});

inline constexpr std::string_view kCsvHeader =
    "trial,seed,verdict,total,free,forced,flips,depth,x1_false,all_true,descent_sat,ms";

void write_csv_row(std::ostream& out, const TrialRecord& r);
std::string to_csv(const std::vector<TrialRecord>& records);
nlohmann::json to_json(const ExperimentConfig& cfg, const ExperimentSummary& s);

struct Interval {
  double low = 0;
  double high = 0;
};

/// Wilson score interval; z = 1.96 gives 95 % coverage.
Interval wilson_interval(std::uint64_t hits, std::uint64_t trials, double z = 1.959963984540054);

struct ProbabilityEstimate {
  EventKind event = EventKind::always;
  std::uint64_t trials = 0;
  std::uint64_t hits = 0;
  double frequency = 0;
  Interval ci95;
  /// Exact first-descent probability, when the oracle finished in budget.
  std::optional<Rational> exact;
  std::uint64_t oracle_nodes = 0;
};

struct EstimateOptions {
  bool with_oracle = true;
  std::uint64_t oracle_node_limit = kDescentNodeLimit;
};

/// cfg.trials independent first descents; frequency of cfg.event with its
/// Wilson interval, next to the oracle's exact value when available.
ProbabilityEstimate estimate_probability(const ExperimentConfig& cfg,
                                         const EstimateOptions& options = {});

nlohmann::json to_json(const ProbabilityEstimate& e);

struct SweepConfig {
  std::vector<std::uint32_t> sizes{6, 8, 10, 12, 14};
  std::uint32_t degree = 3;
  std::uint64_t seeds = 50;
  std::string heuristic = "guc";
  bool pure_literals = true;
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t master_seed = 1;
  unsigned workers = 1;
};

struct SweepRow {
  std::uint32_t n = 0;
  std::uint64_t runs = 0;
  ChoiceStats choices;
  double exhausted_fraction = 0;
};

/// For each size n: `seeds` random d-regular Tseitin cores (odd charge), one
/// full solve each; statistics of total choices.
std::vector<SweepRow> scaling_sweep(const SweepConfig& cfg);

std::string sweep_csv(const std::vector<SweepRow>& rows);
/// Whitespace-separated columns with a `#` header line, for gnuplot.
std::string sweep_gnuplot(const std::vector<SweepRow>& rows);

}  // namespace hardsat

#include "hardsat/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <condition_variable>
#include <cstdio>
#include <exception>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "hardsat/dimacs.hpp"
#include "hardsat/generators.hpp"
#include "hardsat/graph.hpp"
#include "hardsat/heuristics.hpp"
#include "hardsat/random.hpp"

namespace hardsat {

namespace {

// Runs task(i) for i in [0, n) on up to `workers` threads and hands the
// results to emit(i, result) in index order. The first exception stops the
// remaining work and is rethrown after all threads have joined.
template <typename T, typename Task, typename Emit>
void run_ordered(std::uint64_t n, unsigned workers, Task task, Emit emit) {
  if (workers <= 1 || n <= 1) {
    for (std::uint64_t i = 0; i < n; ++i)
      emit(i, task(i));
    return;
  }
  std::vector<std::optional<T>> slots(n);
  std::atomic<std::uint64_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex mutex;
  std::condition_variable ready;

  auto worker = [&] {
    for (;;) {
      const std::uint64_t i = next.fetch_add(1);
      if (i >= n || failed.load())
        break;
      try {
        T value = task(i);
        std::lock_guard lock(mutex);
        slots[i] = std::move(value);
      } catch (...) {
        std::lock_guard lock(mutex);
        if (!error)
          error = std::current_exception();
        failed.store(true);
      }
      ready.notify_all();
    }
    ready.notify_all();
  };

  std::vector<std::jthread> pool;
  const unsigned count = static_cast<unsigned>(std::min<std::uint64_t>(workers, n));
  for (unsigned w = 0; w < count; ++w)
    pool.emplace_back(worker);

  for (std::uint64_t i = 0; i < n; ++i) {
    std::unique_lock lock(mutex);
    ready.wait(lock, [&] { return slots[i].has_value() || failed.load(); });
    if (failed.load())
      break;
    T value = std::move(*slots[i]);
    slots[i].reset();
    lock.unlock();
    emit(i, std::move(value));
  }
  pool.clear();
  if (error)
    std::rethrow_exception(error);
}

std::string format_double(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string describe_charges(const ChargedGraph& g) {
  std::string out;
  for (std::size_t i = 0; i < g.charges().size(); ++i) {
    if (i)
      out += ' ';
    out += g.charges()[i] ? '1' : '0';
  }
  return out;
}

}  // namespace

Family parse_family(std::string_view name) {
  if (name == "guc-hard")
    return Family::guc_hard;
  if (name == "rguc-hard")
    return Family::rguc_hard;
  if (name == "tseitin")
    return Family::tseitin;
  if (name == "dimacs-file")
    return Family::dimacs_file;
  throw std::invalid_argument("unknown family '" + std::string(name) +
                              "' (expected guc-hard, rguc-hard, tseitin or dimacs-file)");
}

std::string_view to_string(Family f) {
  switch (f) {
  case Family::guc_hard:
    return "guc-hard";
  case Family::rguc_hard:
    return "rguc-hard";
  case Family::tseitin:
    return "tseitin";
  case Family::dimacs_file:
    return "dimacs-file";
  }
  return "?";
}

Instance build_instance(const ExperimentConfig& cfg) {
  Instance inst;
  inst.provenance.push_back("family " + std::string(to_string(cfg.family)));
  if (cfg.family == Family::dimacs_file) {
    inst.formula = read_dimacs_file(cfg.input_path);
    inst.provenance.push_back("source " + cfg.input_path);
    return inst;
  }
  const ChargedGraph g = parse_graph_spec(cfg.graph);
  switch (cfg.family) {
  case Family::guc_hard:
    inst.formula = guc_hard(family_params(cfg.m, g));
    inst.scaffold_width = cfg.m;
    break;
  case Family::rguc_hard:
    inst.formula = rguc_hard(family_params(cfg.m, g));
    inst.scaffold_width = cfg.m;
    break;
  case Family::tseitin:
    inst.formula = tseitin(g);
    break;
  case Family::dimacs_file:
    break;
  }
  if (inst.scaffold_width > 0)
    inst.provenance.push_back("M " + std::to_string(inst.scaffold_width));
  inst.provenance.push_back("graph " + cfg.graph);
  inst.provenance.push_back("charges " + describe_charges(g));
  inst.provenance.push_back("seed " + std::to_string(cfg.master_seed));
  return inst;
}

std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial) {
  return derive_seed(master_seed, trial);
}

ChoiceStats choice_stats(std::vector<std::uint64_t> values) {
  ChoiceStats s;
  if (values.empty())
    return s;
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  s.min = values.front();
  s.max = values.back();
  s.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(n);
  s.median = n % 2 ? static_cast<double>(values[n / 2])
                   : (static_cast<double>(values[n / 2 - 1]) + static_cast<double>(values[n / 2])) / 2;
  return s;
}

ExperimentReport run_experiment(const ExperimentConfig& cfg,
                                const std::function<void(const TrialRecord&)>& on_record) {
  if (cfg.trials < 1)
    throw std::invalid_argument("trials must be >= 1");
  const Instance inst = build_instance(cfg);
  const auto heuristic = make_heuristic(cfg.heuristic, {cfg.pure_literals});
  const Event x1_false{EventKind::x1_false, inst.scaffold_width};
  const Event all_true{EventKind::all_true, inst.scaffold_width};
  const Event descent_sat{EventKind::satisfied, inst.scaffold_width};

  auto task = [&](std::uint64_t i) {
    TrialRecord r;
    r.trial = i;
    r.seed = trial_seed(cfg.master_seed, i);
    RandomSource rng(r.seed);
    const auto start = std::chrono::steady_clock::now();
    const RunStats stats = solve(inst.formula, *heuristic, rng, {cfg.budget, {}});
    const auto stop = std::chrono::steady_clock::now();
    r.verdict = stats.verdict;
    r.total = stats.total_choices;
    r.free = stats.free_choices;
    r.forced = stats.forced_choices;
    r.flips = stats.flips;
    r.depth = stats.peak_depth;
    if (stats.first_descent) {
      r.x1_false = x1_false(*stats.first_descent);
      r.all_true = all_true(*stats.first_descent);
      r.descent_sat = descent_sat(*stats.first_descent);
    }
    if (cfg.timing)
      r.ms = std::chrono::duration<double, std::milli>(stop - start).count();
    return r;
  };

  ExperimentReport report;
  report.records.reserve(cfg.trials);
  run_ordered<TrialRecord>(cfg.trials, cfg.workers, task,
                           [&](std::uint64_t, TrialRecord r) {
                             if (on_record)
                               on_record(r);
                             report.records.push_back(r);
                           });

  ExperimentSummary& s = report.summary;
  std::vector<std::uint64_t> totals;
  for (const TrialRecord& r : report.records) {
    ++s.trials;
    s.sat += r.verdict == Verdict::sat;
    s.unsat += r.verdict == Verdict::unsat;
    s.budget_exhausted += r.verdict == Verdict::budget_exhausted;
    s.x1_false += r.x1_false;
    s.all_true += r.all_true;
    s.descent_sat += r.descent_sat;
    totals.push_back(r.total);
  }
  s.total_choices = choice_stats(std::move(totals));
  return report;
}

void write_csv_row(std::ostream& out, const TrialRecord& r) {
  out << r.trial << ',' << r.seed << ',' << to_string(r.verdict) << ',' << r.total << ','
      << r.free << ',' << r.forced << ',' << r.flips << ',' << r.depth << ',' << int{r.x1_false}
      << ',' << int{r.all_true} << ',' << int{r.descent_sat} << ',' << format_double(r.ms, 3)
      << '\n';
}

std::string to_csv(const std::vector<TrialRecord>& records) {
  std::ostringstream out;
  out << kCsvHeader << '\n';
  for (const TrialRecord& r : records)
    write_csv_row(out, r);
  return out.str();
}

nlohmann::json to_json(const ExperimentConfig& cfg, const ExperimentSummary& s) {
  nlohmann::json j;
  j["config"] = {{"family", to_string(cfg.family)},
                 {"M", cfg.m},
                 {"graph", cfg.graph},
                 {"heuristic", cfg.heuristic},
                 {"pure_literals", cfg.pure_literals},
                 {"trials", cfg.trials},
                 {"seed", cfg.master_seed},
                 {"budget", cfg.budget}};
  if (cfg.family == Family::dimacs_file)
    j["config"]["input"] = cfg.input_path;
  j["verdicts"] = {{"sat", s.sat}, {"unsat", s.unsat}, {"budget_exhausted", s.budget_exhausted}};
  j["total_choices"] = {{"mean", s.total_choices.mean},
                        {"median", s.total_choices.median},
                        {"min", s.total_choices.min},
                        {"max", s.total_choices.max}};
  j["first_descent"] = {
      {"x1_false", s.x1_false}, {"all_true", s.all_true}, {"satisfied", s.descent_sat}};
  return j;
}

Interval wilson_interval(std::uint64_t hits, std::uint64_t trials, double z) {
  if (trials == 0)
    return {0.0, 1.0};
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(hits) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2 * n)) / denom;
  const double half = z / denom * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n));
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

ProbabilityEstimate estimate_probability(const ExperimentConfig& cfg,
                                         const EstimateOptions& options) {
  if (cfg.trials < 1)
    throw std::invalid_argument("trials must be >= 1");
  const Instance inst = build_instance(cfg);
  const auto heuristic = make_heuristic(cfg.heuristic, {cfg.pure_literals});
  const Event event{cfg.event, inst.scaffold_width};

  ProbabilityEstimate est;
  est.event = cfg.event;
  est.trials = cfg.trials;
  run_ordered<bool>(
      cfg.trials, cfg.workers,
      [&](std::uint64_t i) {
        RandomSource rng(trial_seed(cfg.master_seed, i));
        return event(first_descent(inst.formula, *heuristic, rng));
      },
      [&](std::uint64_t, bool hit) { est.hits += hit; });
  est.frequency = static_cast<double>(est.hits) / static_cast<double>(est.trials);
  est.ci95 = wilson_interval(est.hits, est.trials);

  if (options.with_oracle) {
    const auto exact = descent_probability(
        inst.formula, *heuristic,
        [&](const DescentRecord& r) { return event(r.terminal, r.assignment); },
        options.oracle_node_limit);
    est.oracle_nodes = exact.nodes_expanded;
    if (exact.complete)
      est.exact = exact.value;
  }
  return est;
}

nlohmann::json to_json(const ProbabilityEstimate& e) {
  nlohmann::json j;
  j["event"] = to_string(e.event);
  j["trials"] = e.trials;
  j["hits"] = e.hits;
  j["frequency"] = e.frequency;
  j["ci95"] = {e.ci95.low, e.ci95.high};
  if (e.exact) {
    j["exact"] = to_string(*e.exact);
    j["exact_decimal"] = e.exact->get_d();
  } else {
    j["exact"] = nullptr;
  }
  j["oracle_nodes"] = e.oracle_nodes;
  return j;
}

std::vector<SweepRow> scaling_sweep(const SweepConfig& cfg) {
  const auto heuristic = make_heuristic(cfg.heuristic, {cfg.pure_literals});
  std::vector<SweepRow> rows;
  for (std::uint32_t n : cfg.sizes) {
    const std::uint64_t size_seed = derive_seed(cfg.master_seed, n);
    std::vector<std::uint64_t> totals;
    std::uint64_t exhausted = 0;
    run_ordered<RunStats>(
        cfg.seeds, cfg.workers,
        [&](std::uint64_t s) {
          const std::uint64_t run_seed = derive_seed(size_seed, s);
          const Formula core = tseitin(random_regular_graph(n, cfg.degree, run_seed));
          RandomSource rng(mix64(run_seed));
          return solve(core, *heuristic, rng, {cfg.budget, {}});
        },
        [&](std::uint64_t, RunStats stats) {
          totals.push_back(stats.total_choices);
          exhausted += stats.verdict == Verdict::budget_exhausted;
        });
    SweepRow row;
    row.n = n;
    row.runs = cfg.seeds;
    row.choices = choice_stats(std::move(totals));
    row.exhausted_fraction =
        cfg.seeds ? static_cast<double>(exhausted) / static_cast<double>(cfg.seeds) : 0.0;
    rows.push_back(row);
  }
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "n,runs,median,mean,min,max,exhausted_fraction\n";
  for (const SweepRow& r : rows)
    out << r.n << ',' << r.runs << ',' << format_double(r.choices.median, 1) << ','
        << format_double(r.choices.mean, 3) << ',' << r.choices.min << ',' << r.choices.max << ','
        << format_double(r.exhausted_fraction, 4) << '\n';
  return out.str();
}

std::string sweep_gnuplot(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "# n median mean min max exhausted_fraction\n";
  for (const SweepRow& r : rows)
    out << r.n << ' ' << format_double(r.choices.median, 1) << ' '
        << format_double(r.choices.mean, 3) << ' ' << r.choices.min << ' ' << r.choices.max << ' '
        << format_double(r.exhausted_fraction, 4) << '\n';
  return out.str();
}

}  // namespace hardsat

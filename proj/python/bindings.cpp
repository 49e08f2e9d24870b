#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "hardsat/dimacs.hpp"
#include "hardsat/engine.hpp"
#include "hardsat/events.hpp"
#include "hardsat/generators.hpp"
#include "hardsat/graph.hpp"
#include "hardsat/harness.hpp"
#include "hardsat/heuristics.hpp"
#include "hardsat/oracle.hpp"

namespace py = pybind11;
using namespace hardsat;

namespace {

using Clauses = std::vector<std::vector<long>>;

Formula to_formula(const Clauses& clauses) {
  std::vector<Clause> out;
  out.reserve(clauses.size());
  for (const auto& c : clauses) {
    std::vector<Literal> lits;
    for (long d : c)
      lits.push_back(Literal::from_dimacs(d));
    out.emplace_back(std::move(lits));
  }
  return Formula(std::move(out));
}

Clauses to_clauses(const Formula& f) {
  Clauses out;
  for (const Clause& c : f) {
    std::vector<long> lits;
    for (Literal l : c)
      lits.push_back(l.to_dimacs());
    out.push_back(std::move(lits));
  }
  return out;
}

std::vector<long> to_list(const Assignment& a) {
  std::vector<long> out;
  for (Literal l : a)
    out.push_back(l.to_dimacs());
  return out;
}

ExperimentConfig config(const std::string& family, std::uint32_t m, const std::string& graph,
                        const std::string& heuristic, bool pure_literals, std::uint64_t trials,
                        std::uint64_t seed, std::uint64_t budget, const std::string& event,
                        unsigned workers) {
  ExperimentConfig cfg;
  cfg.family = parse_family(family);
  cfg.m = m;
  cfg.graph = graph;
  cfg.heuristic = heuristic;
  cfg.pure_literals = pure_literals;
  cfg.trials = trials;
  cfg.master_seed = seed;
  cfg.budget = budget;
  cfg.event = parse_event(event);
  cfg.workers = workers;
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_hardsat, m) {
  m.doc() = "DPLL with the GUC and Randomized GUC heuristics on hard satisfiable formulas";

  py::register_exception<OracleLimitError>(m, "OracleLimitError");
  py::register_exception<DimacsError>(m, "DimacsError", PyExc_ValueError);

  m.def(
      "generate",
      [](const std::string& family, std::uint32_t M, const std::string& graph) {
        ExperimentConfig cfg;
        cfg.family = parse_family(family);
        cfg.m = M;
        cfg.graph = graph;
        return to_clauses(build_instance(cfg).formula);
      },
      py::arg("family"), py::arg("M") = 6, py::arg("graph") = "complete:4",
      "Clauses of a guc-hard, rguc-hard or tseitin instance.");

  m.def("parse_dimacs", [](const std::string& text) { return to_clauses(parse_dimacs(text)); });
  m.def(
      "write_dimacs", [](const Clauses& c) { return write_dimacs(to_formula(c)); }, py::arg("clauses"));

  m.def(
      "solve",
      [](const Clauses& clauses, const std::string& heuristic, std::uint64_t seed, std::uint64_t budget,
         bool pure_literals) {
        const auto h = make_heuristic(heuristic, {pure_literals});
        RandomSource rng(seed);
        RunStats r;
        {
          py::gil_scoped_release release;
          r = solve(to_formula(clauses), *h, rng, {budget, {}});
        }
        py::dict d;
        d["verdict"] = std::string(to_string(r.verdict));
        d["total"] = r.total_choices;
        d["free"] = r.free_choices;
        d["forced"] = r.forced_choices;
        d["flips"] = r.flips;
        d["depth"] = r.peak_depth;
        d["witness"] = r.witness ? py::cast(to_list(*r.witness)) : py::none();
        return d;
      },
      py::arg("clauses"), py::arg("heuristic") = "guc", py::arg("seed") = 1,
      py::arg("budget") = kDefaultBudget, py::arg("pure_literals") = true);

  m.def(
      "brute_force_sat",
      [](const Clauses& clauses) -> std::optional<std::vector<long>> {
        const SatResult r = brute_force_sat(to_formula(clauses));
        if (!r.satisfiable)
          return std::nullopt;
        return to_list(*r.witness);
      },
      py::arg("clauses"), "Least model as a literal list, or None when unsatisfiable.");

  m.def(
      "count_models", [](const Clauses& c) { return enumerate_satisfying(to_formula(c)).count; },
      py::arg("clauses"));

  m.def(
      "descent_probability",
      [](const Clauses& clauses, const std::string& heuristic, const std::string& event, std::uint32_t M,
         bool pure_literals, std::uint64_t node_limit) {
        const auto h = make_heuristic(heuristic, {pure_literals});
        const Event ev{parse_event(event), M};
        const auto r = descent_probability(
            to_formula(clauses), *h, [&](const DescentRecord& d) { return ev(d.terminal, d.assignment); },
            node_limit);
        const std::string s = to_string(r.value);
        const auto slash = s.find('/');
        return py::make_tuple(s.substr(0, slash), s.substr(slash + 1), r.complete);
      },
      py::arg("clauses"), py::arg("heuristic") = "guc", py::arg("event") = "x1-false", py::arg("M") = 0,
      py::arg("pure_literals") = true, py::arg("node_limit") = kDescentNodeLimit,
      "(numerator, denominator, complete) as decimal strings.");

  m.def(
      "run_experiment",
      [](const std::string& family, std::uint32_t M, const std::string& graph, const std::string& heuristic,
         bool pure_literals, std::uint64_t trials, std::uint64_t seed, std::uint64_t budget, unsigned workers) {
        const auto cfg = config(family, M, graph, heuristic, pure_literals, trials, seed, budget, "x1-false",
                                workers);
        py::gil_scoped_release release;
        return to_csv(run_experiment(cfg).records);
      },
      py::arg("family") = "guc-hard", py::arg("M") = 6, py::arg("graph") = "complete:4",
      py::arg("heuristic") = "guc", py::arg("pure_literals") = true, py::arg("trials") = 100,
      py::arg("seed") = 1, py::arg("budget") = kDefaultBudget, py::arg("workers") = 1,
      "Per-trial CSV text.");

  m.def(
      "estimate_probability",
      [](const std::string& family, std::uint32_t M, const std::string& graph, const std::string& heuristic,
         bool pure_literals, const std::string& event, std::uint64_t trials, std::uint64_t seed,
         unsigned workers, bool with_oracle) {
        const auto cfg = config(family, M, graph, heuristic, pure_literals, trials, seed, kDefaultBudget, event,
                                workers);
        std::string out;
        {
          py::gil_scoped_release release;
          out = to_json(estimate_probability(cfg, {.with_oracle = with_oracle})).dump();
        }
        return out;
      },
      py::arg("family") = "guc-hard", py::arg("M") = 6, py::arg("graph") = "complete:4",
      py::arg("heuristic") = "guc", py::arg("pure_literals") = true, py::arg("event") = "x1-false",
      py::arg("trials") = 1000, py::arg("seed") = 1, py::arg("workers") = 1, py::arg("with_oracle") = true,
      "JSON text with frequency, Wilson interval and the exact value.");

  m.def(
      "sweep",
      [](const std::vector<std::uint32_t>& sizes, std::uint32_t degree, std::uint64_t seeds,
         const std::string& heuristic, std::uint64_t budget, std::uint64_t seed, unsigned workers) {
        SweepConfig cfg;
        cfg.sizes = sizes;
        cfg.degree = degree;
        cfg.seeds = seeds;
        cfg.heuristic = heuristic;
        cfg.budget = budget;
        cfg.master_seed = seed;
        cfg.workers = workers;
        py::gil_scoped_release release;
        return sweep_csv(scaling_sweep(cfg));
      },
      py::arg("sizes") = std::vector<std::uint32_t>{6, 8, 10, 12, 14}, py::arg("degree") = 3,
      py::arg("seeds") = 50, py::arg("heuristic") = "guc", py::arg("budget") = kDefaultBudget,
      py::arg("seed") = 1, py::arg("workers") = 1, "Sweep CSV text.");
}

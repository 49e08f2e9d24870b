#pragma once

// Instrumented chronological-backtracking DPLL engine.
//
// The engine descends by asking a Heuristic for one Choice at a time. When
// the residual formula contains the empty clause it backtracks to the most
// recent free (split) choice, undoes everything above it, and assigns the
// complement of that choice as a new forced choice. Every literal assignment,
// flips included, counts as one choice.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <vector>

#include "hardsat/cnf.hpp"
#include "hardsat/heuristics.hpp"
#include "hardsat/random.hpp"

namespace hardsat {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// Incremental residual formula F[I] with O(change) assign/undo.
/// Presents the same ClauseView as Formula::apply(I) would.
class SearchState final : public ClauseView {
public:
  explicit SearchState(const Formula& f);

  /// Requires l's variable to be unassigned.
  void assign(Literal l);
  /// Reverts the most recent assign().
  void undo();

  std::size_t depth() const { return trail_.size(); }
  const std::vector<Literal>& trail() const { return trail_; }
  bool is_assigned(Var v) const { return v < value_.size() && value_[v] != kUnassigned; }
  /// Materializes the residual formula (for tests and diagnostics).
  Formula residual() const;

  bool is_empty() const override { return open_clauses_ == 0; }
  bool has_empty_clause() const override { return width_count_[0] > 0; }
  std::size_t min_nonempty_bucket() const override;
  std::vector<Clause> clause_bucket(std::size_t width) const override;
  std::vector<Literal> pure_literals() const override;

private:
  static constexpr std::int8_t kUnassigned = -1;

  enum class UndoKind : std::uint8_t { satisfied, shortened };
  struct UndoEntry {
    std::uint32_t clause;
    UndoKind kind;
  };

  bool is_false(Literal l) const;
  bool is_unassigned(Literal l) const { return value_[l.variable()] == kUnassigned; }

  std::vector<std::vector<Literal>> clauses_;
  std::vector<std::vector<std::uint32_t>> occurrences_;  // by literal index
  std::vector<std::uint32_t> width_;                     // current width per clause
  std::vector<std::uint8_t> satisfied_;
  std::vector<std::uint32_t> width_count_;  // open clauses per current width
  std::vector<std::uint32_t> literal_count_;  // occurrences in open clauses
  std::vector<std::int8_t> value_;            // by variable
  std::vector<Var> variables_;
  std::size_t open_clauses_ = 0;

  std::vector<Literal> trail_;
  std::vector<std::size_t> undo_marks_;
  std::vector<UndoEntry> undo_log_;
};

enum class Verdict { sat, unsat, budget_exhausted };
enum class Terminal { satisfied, contradiction };

std::string_view to_string(Verdict v);
std::string_view to_string(Terminal t);

struct DescentOutcome {
  Terminal terminal = Terminal::contradiction;
  std::vector<Choice> trail;
  Assignment assignment;
};

struct RunStats {
  Verdict verdict = Verdict::budget_exhausted;
  std::optional<Assignment> witness;
  std::uint64_t total_choices = 0;
  std::uint64_t free_choices = 0;
  std::uint64_t forced_choices = 0;
  std::uint64_t flips = 0;
  std::uint64_t peak_depth = 0;
  std::uint64_t seed = 0;
  /// The path before the first backtrack; absent only if the budget ran out
  /// before the descent ended.
  std::optional<DescentOutcome> first_descent;
};

/// Observer called after each assignment with the new trail depth.
using TraceSink = std::function<void(std::size_t depth, const Choice&)>;

struct SolveOptions {
  std::uint64_t budget = kDefaultBudget;
  TraceSink trace;
};

RunStats solve(const Formula& f, const Heuristic& h, RandomSource& rng,
               const SolveOptions& options = {});

/// Descends without backtracking until the residual formula is empty or
/// contains the empty clause. Draws the same random numbers as the first
/// descent of solve() with the same seed.
DescentOutcome first_descent(const Formula& f, const Heuristic& h, RandomSource& rng,
                             const TraceSink& trace = {});

/// Writes `<depth> <literal> <free|forced> <unit|pure|split|flip>`.
void write_trace_line(std::ostream& out, std::size_t depth, const Choice& c);
TraceSink stream_trace(std::ostream& out);

}  // namespace hardsat

#include "hardsat/engine.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace hardsat {

// ---------------------------------------------------------------------------
// SearchState

SearchState::SearchState(const Formula& f) {
  const Var max_var = f.max_variable();
  value_.assign(max_var + 1, kUnassigned);
  occurrences_.resize(2 * (static_cast<std::size_t>(max_var) + 1));
  literal_count_.assign(occurrences_.size(), 0);
  width_count_.assign(f.max_width() + 1, 0);
  variables_ = f.variables();

  clauses_.reserve(f.size());
  for (const Clause& c : f) {
    const auto id = static_cast<std::uint32_t>(clauses_.size());
    clauses_.emplace_back(c.begin(), c.end());
    width_.push_back(static_cast<std::uint32_t>(c.size()));
    satisfied_.push_back(0);
    ++width_count_[c.size()];
    for (Literal l : c) {
      occurrences_[l.index()].push_back(id);
      ++literal_count_[l.index()];
    }
  }
  open_clauses_ = clauses_.size();
}

bool SearchState::is_false(Literal l) const {
  const auto v = value_[l.variable()];
  return v != kUnassigned && (v == 1) != l.is_positive();
}

void SearchState::assign(Literal l) {
  if (l.variable() >= value_.size()) {
    // Variable absent from the formula: nothing to simplify.
    value_.resize(l.variable() + 1, kUnassigned);
    occurrences_.resize(2 * value_.size());
    literal_count_.resize(occurrences_.size(), 0);
  }
  if (!is_unassigned(l))
    throw std::logic_error("variable " + std::to_string(l.variable()) + " is already assigned");

  undo_marks_.push_back(undo_log_.size());
  for (std::uint32_t c : occurrences_[l.index()]) {
    if (satisfied_[c])
      continue;
    satisfied_[c] = 1;
    --width_count_[width_[c]];
    --open_clauses_;
    for (Literal other : clauses_[c])
      if (is_unassigned(other))
        --literal_count_[other.index()];
    undo_log_.push_back({c, UndoKind::satisfied});
  }
  const Literal falsified = ~l;
  for (std::uint32_t c : occurrences_[falsified.index()]) {
    if (satisfied_[c])
      continue;
    --width_count_[width_[c]];
    --width_[c];
    ++width_count_[width_[c]];
    --literal_count_[falsified.index()];
    undo_log_.push_back({c, UndoKind::shortened});
  }
  value_[l.variable()] = l.is_positive() ? 1 : 0;
  trail_.push_back(l);
}

void SearchState::undo() {
  if (trail_.empty())
    throw std::logic_error("undo on an empty trail");
  const Literal l = trail_.back();
  trail_.pop_back();
  value_[l.variable()] = kUnassigned;
  const Literal falsified = ~l;
  const std::size_t mark = undo_marks_.back();
  undo_marks_.pop_back();
  while (undo_log_.size() > mark) {
    const UndoEntry e = undo_log_.back();
    undo_log_.pop_back();
    const std::uint32_t c = e.clause;
    if (e.kind == UndoKind::shortened) {
      --width_count_[width_[c]];
      ++width_[c];
      ++width_count_[width_[c]];
      ++literal_count_[falsified.index()];
    } else {
      satisfied_[c] = 0;
      ++open_clauses_;
      ++width_count_[width_[c]];
      for (Literal other : clauses_[c])
        if (is_unassigned(other))
          ++literal_count_[other.index()];
    }
  }
}

std::size_t SearchState::min_nonempty_bucket() const {
  for (std::size_t w = 0; w < width_count_.size(); ++w)
    if (width_count_[w] > 0)
      return w;
  return width_count_.size();
}

std::vector<Clause> SearchState::clause_bucket(std::size_t width) const {
  std::vector<Clause> out;
  if (width >= width_count_.size() || width_count_[width] == 0)
    return out;
  out.reserve(width_count_[width]);
  for (std::size_t c = 0; c < clauses_.size(); ++c) {
    if (satisfied_[c] || width_[c] != width)
      continue;
    std::vector<Literal> lits;
    lits.reserve(width);
    for (Literal l : clauses_[c])
      if (is_unassigned(l))
        lits.push_back(l);
    out.push_back(Clause(Clause::Canonical{}, std::move(lits)));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Literal> SearchState::pure_literals() const {
  std::vector<Literal> out;
  for (Var v : variables_) {
    if (value_[v] != kUnassigned)
      continue;
    const auto pos = literal_count_[Literal::positive(v).index()];
    const auto neg = literal_count_[Literal::negative(v).index()];
    if (pos > 0 && neg == 0)
      out.push_back(Literal::positive(v));
    else if (neg > 0 && pos == 0)
      out.push_back(Literal::negative(v));
  }
  return out;
}

Formula SearchState::residual() const {
  std::vector<Clause> out;
  for (std::size_t c = 0; c < clauses_.size(); ++c) {
    if (satisfied_[c])
      continue;
    std::vector<Literal> lits;
    for (Literal l : clauses_[c])
      if (is_unassigned(l))
        lits.push_back(l);
    out.push_back(Clause(Clause::Canonical{}, std::move(lits)));
  }
  return Formula(std::move(out));
}

// ---------------------------------------------------------------------------
// Solving

std::string_view to_string(Verdict v) {
  switch (v) {
  case Verdict::sat:
    return "sat";
  case Verdict::unsat:
    return "unsat";
  case Verdict::budget_exhausted:
    return "budget_exhausted";
  }
  return "?";
}

std::string_view to_string(Terminal t) {
  return t == Terminal::satisfied ? "satisfied" : "contradiction";
}

namespace {

DescentOutcome make_outcome(Terminal terminal, const std::vector<Choice>& trail) {
  DescentOutcome out;
  out.terminal = terminal;
  out.trail = trail;
  std::vector<Literal> lits;
  lits.reserve(trail.size());
  for (const Choice& c : trail)
    lits.push_back(c.literal);
  out.assignment = Assignment(std::move(lits));
  return out;
}

}  // namespace

RunStats solve(const Formula& f, const Heuristic& h, RandomSource& rng,
               const SolveOptions& options) {
  if (options.budget < 1)
    throw std::invalid_argument("budget must be at least 1");

  RunStats stats;
  stats.seed = rng.seed();
  SearchState state(f);
  std::vector<Choice> trail;

  auto push = [&](const Choice& c) {
    state.assign(c.literal);
    trail.push_back(c);
    ++stats.total_choices;
    if (c.forced)
      ++stats.forced_choices;
    else
      ++stats.free_choices;
    if (c.source == ChoiceSource::flip)
      ++stats.flips;
    stats.peak_depth = std::max<std::uint64_t>(stats.peak_depth, trail.size());
    if (options.trace)
      options.trace(trail.size(), c);
  };

  for (;;) {
    if (state.has_empty_clause()) {
      if (!stats.first_descent)
        stats.first_descent = make_outcome(Terminal::contradiction, trail);
      while (!trail.empty() && trail.back().forced) {
        state.undo();
        trail.pop_back();
      }
      if (trail.empty()) {
        stats.verdict = Verdict::unsat;
        return stats;
      }
      const Literal flipped = ~trail.back().literal;
      state.undo();
      trail.pop_back();
      if (stats.total_choices + 1 > options.budget) {
        stats.verdict = Verdict::budget_exhausted;
        return stats;
      }
      push(Choice::flip(flipped));
      continue;
    }
    if (state.is_empty()) {
      if (!stats.first_descent)
        stats.first_descent = make_outcome(Terminal::satisfied, trail);
      std::vector<Literal> lits;
      lits.reserve(trail.size());
      for (const Choice& c : trail)
        lits.push_back(c.literal);
      stats.witness = Assignment(std::move(lits));
      stats.verdict = Verdict::sat;
      return stats;
    }
    const Choice next = h.choose(state, rng);
    if (stats.total_choices + 1 > options.budget) {
      stats.verdict = Verdict::budget_exhausted;
      return stats;
    }
    push(next);
  }
}

DescentOutcome first_descent(const Formula& f, const Heuristic& h, RandomSource& rng,
                             const TraceSink& trace) {
  SearchState state(f);
  std::vector<Choice> trail;
  for (;;) {
    if (state.has_empty_clause())
      return make_outcome(Terminal::contradiction, trail);
    if (state.is_empty())
      return make_outcome(Terminal::satisfied, trail);
    const Choice next = h.choose(state, rng);
    state.assign(next.literal);
    trail.push_back(next);
    if (trace)
      trace(trail.size(), next);
  }
}

void write_trace_line(std::ostream& out, std::size_t depth, const Choice& c) {
  out << depth << ' ' << c.literal.to_dimacs() << ' ' << (c.forced ? "forced" : "free") << ' '
      << to_string(c.source) << '\n';
}

TraceSink stream_trace(std::ostream& out) {
  return [&out](std::size_t depth, const Choice& c) { write_trace_line(out, depth, c); };
}

}  // namespace hardsat

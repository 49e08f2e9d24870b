#pragma once

// Test-only helpers: random formula generators and reference
// implementations that deliberately avoid the library's code paths.

#include <algorithm>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "hardsat/cnf.hpp"
#include "hardsat/engine.hpp"
#include "hardsat/heuristics.hpp"
#include "hardsat/random.hpp"

namespace hardsat::testing {

using IntClause = std::vector<int>;
using IntFormula = std::set<std::set<int>>;

inline IntFormula to_ints(const Formula& f) {
  IntFormula out;
  for (const Clause& c : f) {
    std::set<int> s;
    for (Literal l : c)
      s.insert(static_cast<int>(l.to_dimacs()));
    out.insert(s);
  }
  return out;
}

/// F[I] straight from the definition, on std::set<int> clauses.
inline IntFormula reference_apply(const IntFormula& f, const std::set<int>& assignment) {
  IntFormula out;
  for (const auto& clause : f) {
    bool satisfied = false;
    std::set<int> kept;
    for (int l : clause) {
      if (assignment.count(l))
        satisfied = true;
      else if (!assignment.count(-l))
        kept.insert(l);
    }
    if (!satisfied)
      out.insert(kept);
  }
  return out;
}

/// Random formula with clause widths in [min_width, max_width] over 1..vars.
inline Formula random_formula(RandomSource& rng, std::uint32_t vars, std::uint32_t clauses,
                              std::uint32_t min_width, std::uint32_t max_width) {
  std::vector<Clause> out;
  for (std::uint32_t c = 0; c < clauses; ++c) {
    const std::uint32_t w = min_width + static_cast<std::uint32_t>(rng.uniform(max_width - min_width + 1));
    std::vector<Var> pool;
    for (Var v = 1; v <= vars; ++v)
      pool.push_back(v);
    std::vector<Literal> lits;
    for (std::uint32_t j = 0; j < w && j < vars; ++j) {
      std::swap(pool[j], pool[j + rng.uniform(pool.size() - j)]);
      lits.push_back(rng.uniform(2) ? Literal::negative(pool[j]) : Literal::positive(pool[j]));
    }
    out.emplace_back(std::move(lits));
  }
  return Formula(std::move(out));
}

inline Assignment random_assignment(RandomSource& rng, std::uint32_t vars, double density = 0.4) {
  std::vector<Literal> lits;
  for (Var v = 1; v <= vars; ++v)
    if (rng.unit() < density)
      lits.push_back(rng.uniform(2) ? Literal::negative(v) : Literal::positive(v));
  return Assignment(std::move(lits));
}

struct ReplayResult {
  Verdict verdict = Verdict::budget_exhausted;
  std::uint64_t total = 0, free = 0, forced = 0, flips = 0, peak = 0;
  std::vector<std::pair<std::size_t, Choice>> trace;
};

/// Backtracking search over Formula snapshots (one residual formula per
/// trail entry, no undo log). Consumes randomness exactly like solve().
inline ReplayResult replay_solve(const Formula& f, const Heuristic& h, RandomSource& rng,
                                 std::uint64_t budget) {
  struct Frame {
    Choice choice;
    Formula after;
  };
  ReplayResult r;
  std::vector<Frame> stack;
  auto current = [&]() -> const Formula& { return stack.empty() ? f : stack.back().after; };
  auto push = [&](const Choice& c) {
    const Formula next = current().apply(c.literal);
    stack.push_back({c, next});
    ++r.total;
    (c.forced ? r.forced : r.free) += 1;
    r.flips += c.source == ChoiceSource::flip;
    r.peak = std::max<std::uint64_t>(r.peak, stack.size());
    r.trace.emplace_back(stack.size(), c);
  };
  for (;;) {
    const Formula& now = current();
    if (now.has_empty_clause()) {
      while (!stack.empty() && stack.back().choice.forced)
        stack.pop_back();
      if (stack.empty()) {
        r.verdict = Verdict::unsat;
        return r;
      }
      const Literal flipped = ~stack.back().choice.literal;
      stack.pop_back();
      if (r.total + 1 > budget)
        return r;
      push(Choice::flip(flipped));
      continue;
    }
    if (now.is_empty()) {
      r.verdict = Verdict::sat;
      return r;
    }
    const Choice c = h.choose(now, rng);
    if (r.total + 1 > budget)
      return r;
    push(c);
  }
}

}  // namespace hardsat::testing

#include <gmpxx.h>

#include <map>

namespace hardsat::testing {

/// One GUC / Randomized GUC step written directly against set<set<int>>:
/// returns (literal, probability) pairs for the next assignment.
inline std::vector<std::pair<int, mpq_class>> reference_step(const IntFormula& f, bool randomized,
                                                             bool pure_rule) {
  std::vector<std::pair<int, mpq_class>> out;
  std::size_t m = SIZE_MAX;
  for (const auto& c : f)
    m = std::min(m, c.size());
  std::vector<std::set<int>> shortest;
  for (const auto& c : f)
    if (c.size() == m)
      shortest.push_back(c);
  if (m == 1) {
    for (const auto& c : shortest)
      out.emplace_back(*c.begin(), mpq_class(1, shortest.size()));
    return out;
  }
  if (pure_rule) {
    std::set<int> occurring;
    for (const auto& c : f)
      occurring.insert(c.begin(), c.end());
    std::vector<int> pure;
    for (int l : occurring)
      if (!occurring.count(-l))
        pure.push_back(l);
    if (!pure.empty()) {
      for (int l : pure)
        out.emplace_back(l, mpq_class(1, pure.size()));
      return out;
    }
  }
  for (const auto& c : shortest) {
    const std::size_t offered = randomized ? 2 * c.size() : c.size();
    for (int l : c) {
      out.emplace_back(l, mpq_class(1, shortest.size() * offered));
      if (randomized)
        out.emplace_back(-l, mpq_class(1, shortest.size() * offered));
    }
  }
  return out;
}

/// Terminal (satisfied?, sorted assignment) -> probability, by plain tree
/// recursion without state merging.
using ReferenceDistribution = std::map<std::pair<bool, std::set<int>>, mpq_class>;

inline void reference_descent(const IntFormula& f, const std::set<int>& assigned, const mpq_class& p,
                              bool randomized, bool pure_rule, ReferenceDistribution& out) {
  if (f.empty()) {
    out[{true, assigned}] += p;
    return;
  }
  if (f.count({})) {
    out[{false, assigned}] += p;
    return;
  }
  for (const auto& [l, q] : reference_step(f, randomized, pure_rule)) {
    std::set<int> next = assigned;
    next.insert(l);
    reference_descent(reference_apply(f, {l}), next, p * q, randomized, pure_rule, out);
  }
}

}  // namespace hardsat::testing

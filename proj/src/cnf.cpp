#include "hardsat/cnf.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace hardsat {

namespace {

// Sorted literal vector -> true if some variable occurs in both polarities.
// Complementary literals are adjacent in canonical order.
bool has_complementary_pair(const std::vector<Literal>& sorted) {
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i].variable() == sorted[i - 1].variable())
      return true;
  return false;
}

std::vector<Literal> canonicalize(std::vector<Literal> literals, const char* what) {
  for (Literal l : literals)
    if (l.variable() == 0)
      throw std::invalid_argument(std::string(what) + ": variable index must be >= 1");
  std::sort(literals.begin(), literals.end());
  literals.erase(std::unique(literals.begin(), literals.end()), literals.end());
  if (has_complementary_pair(literals))
    throw std::invalid_argument(std::string(what) + ": variable occurs in both polarities");
  return literals;
}

}  // namespace

Literal Literal::from_dimacs(long value) {
  if (value == 0)
    throw std::invalid_argument("literal 0 is not a variable");
  const long magnitude = value < 0 ? -value : value;
  if (magnitude > static_cast<long>(std::numeric_limits<Var>::max() >> 2))
    throw std::invalid_argument("variable index out of range");
  const auto v = static_cast<Var>(magnitude);
  return value > 0 ? positive(v) : negative(v);
}

std::string to_string(Literal l) { return std::to_string(l.to_dimacs()); }

// ---------------------------------------------------------------------------
// Clause

Clause::Clause(std::vector<Literal> literals)
    : literals_(canonicalize(std::move(literals), "clause")) {}

Clause::Clause(std::initializer_list<Literal> literals)
    : Clause(std::vector<Literal>(literals)) {}

Clause Clause::of(std::initializer_list<long> dimacs) {
  std::vector<Literal> lits;
  lits.reserve(dimacs.size());
  for (long d : dimacs)
    lits.push_back(Literal::from_dimacs(d));
  return Clause(std::move(lits));
}

bool Clause::contains(Literal l) const {
  return std::binary_search(literals_.begin(), literals_.end(), l);
}

bool Clause::contains_variable(Var v) const {
  return contains(Literal::positive(v)) || contains(Literal::negative(v));
}

std::string to_string(const Clause& c) {
  std::string out = "{";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i)
      out += ' ';
    out += to_string(c.literals()[i]);
  }
  return out + "}";
}

// ---------------------------------------------------------------------------
// Assignment

Assignment::Assignment(std::vector<Literal> literals)
    : literals_(canonicalize(std::move(literals), "assignment")) {}

Assignment::Assignment(std::initializer_list<Literal> literals)
    : Assignment(std::vector<Literal>(literals)) {}

Assignment Assignment::of(std::initializer_list<long> dimacs) {
  std::vector<Literal> lits;
  for (long d : dimacs)
    lits.push_back(Literal::from_dimacs(d));
  return Assignment(std::move(lits));
}

bool Assignment::contains(Literal l) const {
  return std::binary_search(literals_.begin(), literals_.end(), l);
}

bool Assignment::assigns(Var v) const {
  return contains(Literal::positive(v)) || contains(Literal::negative(v));
}

Assignment Assignment::with(Literal l) const {
  if (contains(~l))
    throw std::invalid_argument("assignment already holds the complement of " + to_string(l));
  Assignment out = *this;
  auto pos = std::lower_bound(out.literals_.begin(), out.literals_.end(), l);
  if (pos == out.literals_.end() || *pos != l)
    out.literals_.insert(pos, l);
  return out;
}

std::string to_string(const Assignment& a) {
  std::string out = "{";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i)
      out += ' ';
    out += to_string(a.literals()[i]);
  }
  return out + "}";
}

// ---------------------------------------------------------------------------
// Formula

Formula::Formula(std::vector<Clause> clauses) : clauses_(std::move(clauses)) {
  std::sort(clauses_.begin(), clauses_.end());
  clauses_.erase(std::unique(clauses_.begin(), clauses_.end()), clauses_.end());
}

Formula::Formula(std::initializer_list<Clause> clauses)
    : Formula(std::vector<Clause>(clauses)) {}

std::vector<Var> Formula::variables() const {
  std::vector<Var> vars;
  for (const Clause& c : clauses_)
    for (Literal l : c)
      vars.push_back(l.variable());
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

Var Formula::max_variable() const {
  Var best = 0;
  for (const Clause& c : clauses_)
    if (!c.empty())
      best = std::max(best, c.literals().back().variable());
  return best;
}

bool Formula::occurs(Var v) const {
  return std::any_of(clauses_.begin(), clauses_.end(),
                     [v](const Clause& c) { return c.contains_variable(v); });
}

std::size_t Formula::max_width() const {
  std::size_t w = 0;
  for (const Clause& c : clauses_)
    w = std::max(w, c.size());
  return w;
}

Formula Formula::apply(const Assignment& i) const {
  std::vector<Clause> out;
  out.reserve(clauses_.size());
  for (const Clause& c : clauses_) {
    bool satisfied = false;
    std::vector<Literal> kept;
    kept.reserve(c.size());
    for (Literal l : c) {
      if (i.contains(l)) {
        satisfied = true;
        break;
      }
      if (!i.contains(~l))
        kept.push_back(l);
    }
    if (!satisfied)
      out.push_back(Clause(Clause::Canonical{}, std::move(kept)));
  }
  return Formula(std::move(out));
}

Formula Formula::apply(Literal l) const { return apply(Assignment{l}); }

Formula Formula::united(const Formula& other) const {
  std::vector<Clause> all(clauses_.begin(), clauses_.end());
  all.insert(all.end(), other.clauses_.begin(), other.clauses_.end());
  return Formula(std::move(all));
}

bool Formula::has_empty_clause() const {
  // The empty clause sorts first.
  return !clauses_.empty() && clauses_.front().empty();
}

std::size_t Formula::min_nonempty_bucket() const {
  std::size_t m = std::numeric_limits<std::size_t>::max();
  for (const Clause& c : clauses_)
    m = std::min(m, c.size());
  return m;
}

std::vector<Clause> Formula::clause_bucket(std::size_t width) const {
  std::vector<Clause> out;
  for (const Clause& c : clauses_)
    if (c.size() == width)
      out.push_back(c);
  return out;
}

std::vector<Literal> Formula::pure_literals() const {
  std::vector<Literal> occurring;
  for (const Clause& c : clauses_)
    occurring.insert(occurring.end(), c.begin(), c.end());
  std::sort(occurring.begin(), occurring.end());
  occurring.erase(std::unique(occurring.begin(), occurring.end()), occurring.end());
  std::vector<Literal> pure;
  for (Literal l : occurring)
    if (!std::binary_search(occurring.begin(), occurring.end(), ~l))
      pure.push_back(l);
  return pure;
}

Formula apply_assignment(const Formula& f, const Assignment& i) { return f.apply(i); }

std::vector<Literal> pure_literals(const Formula& f) { return f.pure_literals(); }

std::vector<Clause> clause_bucket(const Formula& f, std::size_t width) {
  return f.clause_bucket(width);
}

bool is_satisfying(const Formula& f, const Assignment& i) { return f.apply(i).is_empty(); }

}  // namespace hardsat

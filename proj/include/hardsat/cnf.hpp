#pragma once

// CNF data model: literals, clauses, formulas and partial assignments.
//
// Everything here follows set semantics. A clause is a set of literals with
// no complementary pair, a formula is a set of clauses, and an assignment is
// a consistent set of literals. All three are kept in canonical order
// (variable index, then polarity; clauses lexicographically) so iteration is
// deterministic and two equal values compare equal element by element.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace hardsat {

using Var = std::uint32_t;

class Literal {
public:
  constexpr Literal() = default;

  static constexpr Literal positive(Var v) { return Literal(v << 1); }
  static constexpr Literal negative(Var v) { return Literal((v << 1) | 1U); }
  /// Builds a literal from a signed DIMACS integer; throws on 0.
  static Literal from_dimacs(long value);
  /// Inverse of index(); no validation.
  static constexpr Literal from_index(std::uint32_t code) { return Literal(code); }

  constexpr Var variable() const { return code_ >> 1; }
  constexpr bool is_positive() const { return (code_ & 1U) == 0; }
  constexpr bool is_negative() const { return !is_positive(); }
  constexpr Literal operator~() const { return Literal(code_ ^ 1U); }

  /// Dense index usable for per-literal arrays: 2*var for x, 2*var+1 for ~x.
  constexpr std::uint32_t index() const { return code_; }
  long to_dimacs() const {
    return is_positive() ? static_cast<long>(variable()) : -static_cast<long>(variable());
  }

  friend constexpr auto operator<=>(Literal, Literal) = default;

private:
  constexpr explicit Literal(std::uint32_t code) : code_(code) {}
  std::uint32_t code_ = 2;
};

std::string to_string(Literal l);

class Clause {
public:
  Clause() = default;
  /// Sorts and deduplicates; throws std::invalid_argument on a variable of
  /// index 0 or a complementary pair.
  explicit Clause(std::vector<Literal> literals);
  Clause(std::initializer_list<Literal> literals);
  /// Builds from signed DIMACS integers.
  static Clause of(std::initializer_list<long> dimacs);

  std::span<const Literal> literals() const { return literals_; }
  std::size_t size() const { return literals_.size(); }
  bool empty() const { return literals_.empty(); }
  bool is_unit() const { return literals_.size() == 1; }
  bool contains(Literal l) const;
  bool contains_variable(Var v) const;

  auto begin() const { return literals_.begin(); }
  auto end() const { return literals_.end(); }

  friend auto operator<=>(const Clause&, const Clause&) = default;
  friend bool operator==(const Clause&, const Clause&) = default;

private:
  struct Canonical {};
  Clause(Canonical, std::vector<Literal> literals) : literals_(std::move(literals)) {}
  friend class Formula;
  friend class SearchState;

  std::vector<Literal> literals_;
};

std::string to_string(const Clause& c);

class Assignment {
public:
  Assignment() = default;
  /// Throws std::invalid_argument if some variable occurs in both polarities.
  explicit Assignment(std::vector<Literal> literals);
  Assignment(std::initializer_list<Literal> literals);
  static Assignment of(std::initializer_list<long> dimacs);

  std::span<const Literal> literals() const { return literals_; }
  std::size_t size() const { return literals_.size(); }
  bool empty() const { return literals_.empty(); }
  bool contains(Literal l) const;
  bool assigns(Var v) const;
  /// Returns a copy extended by l; throws if ~l is already present.
  Assignment with(Literal l) const;

  auto begin() const { return literals_.begin(); }
  auto end() const { return literals_.end(); }

  friend auto operator<=>(const Assignment&, const Assignment&) = default;
  friend bool operator==(const Assignment&, const Assignment&) = default;

private:
  std::vector<Literal> literals_;
};

std::string to_string(const Assignment& a);

/// Read-only access to a residual clause set, as needed by the branching
/// heuristics. Implemented by Formula (by value) and by the engine's
/// incremental search state; both must present clauses in canonical order.
class ClauseView {
public:
  virtual ~ClauseView() = default;

  /// No clauses left.
  virtual bool is_empty() const = 0;
  virtual bool has_empty_clause() const = 0;
  /// min{i : C_i nonempty}. Undefined on the empty formula.
  virtual std::size_t min_nonempty_bucket() const = 0;
  /// The distinct clauses of exactly `width` literals, canonical order.
  virtual std::vector<Clause> clause_bucket(std::size_t width) const = 0;
  /// PL(F), canonical order.
  virtual std::vector<Literal> pure_literals() const = 0;
};

class Formula final : public ClauseView {
public:
  Formula() = default;
  /// Applies set semantics: clauses are sorted and duplicates collapse.
  explicit Formula(std::vector<Clause> clauses);
  Formula(std::initializer_list<Clause> clauses);

  std::span<const Clause> clauses() const { return clauses_; }
  std::size_t size() const { return clauses_.size(); }
  auto begin() const { return clauses_.begin(); }
  auto end() const { return clauses_.end(); }

  /// Sorted list of variables occurring in some clause.
  std::vector<Var> variables() const;
  /// Largest variable index occurring, 0 for a formula without literals.
  Var max_variable() const;
  bool occurs(Var v) const;
  /// Largest clause width, 0 for the empty formula.
  std::size_t max_width() const;

  /// F[I]: removes every clause satisfied by I and deletes the falsified
  /// literals from the rest.
  Formula apply(const Assignment& i) const;
  Formula apply(Literal l) const;

  /// Set union of two formulas.
  Formula united(const Formula& other) const;

  bool is_empty() const override { return clauses_.empty(); }
  bool has_empty_clause() const override;
  std::size_t min_nonempty_bucket() const override;
  std::vector<Clause> clause_bucket(std::size_t width) const override;
  std::vector<Literal> pure_literals() const override;

  friend bool operator==(const Formula& a, const Formula& b) { return a.clauses_ == b.clauses_; }

private:
  std::vector<Clause> clauses_;
};

Formula apply_assignment(const Formula& f, const Assignment& i);
std::vector<Literal> pure_literals(const Formula& f);
std::vector<Clause> clause_bucket(const Formula& f, std::size_t width);
/// True iff F[I] has no clauses.
bool is_satisfying(const Formula& f, const Assignment& i);

}  // namespace hardsat

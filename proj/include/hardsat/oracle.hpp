#pragma once

// Ground truth: exhaustive satisfiability, model counting, and the exact
// probability distribution of a heuristic's first descent.

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hardsat/cnf.hpp"
#include "hardsat/engine.hpp"
#include "hardsat/heuristics.hpp"

namespace hardsat {

using Rational = mpq_class;

/// The request is beyond what exhaustive enumeration is allowed to attempt.
class OracleLimitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kBruteForceMaxVars = 25;
inline constexpr std::size_t kEnumerateMaxVars = 20;
inline constexpr std::uint64_t kDescentNodeLimit = 1'000'000;

struct SatResult {
  bool satisfiable = false;
  /// Lexicographically least model over the occurring variables (false
  /// before true, smallest variable most significant).
  std::optional<Assignment> witness;
};

/// Tries every total assignment of the occurring variables.
/// Throws OracleLimitError above kBruteForceMaxVars variables.
SatResult brute_force_sat(const Formula& f);

struct ModelCount {
  std::uint64_t count = 0;
  std::vector<Assignment> models;  // filled only when listing was requested
};

/// Throws OracleLimitError above kEnumerateMaxVars variables.
ModelCount enumerate_satisfying(const Formula& f, bool list_models = false);

struct DescentRecord {
  Terminal terminal = Terminal::contradiction;
  Assignment assignment;

  friend auto operator<=>(const DescentRecord&, const DescentRecord&) = default;
  friend bool operator==(const DescentRecord&, const DescentRecord&) = default;
};

struct DescentDistribution {
  std::map<DescentRecord, Rational> outcomes;
  Rational total_mass = 0;
  /// False when the node limit stopped the expansion; the masses then cover
  /// only the terminals reached so far.
  bool complete = true;
  std::uint64_t nodes_expanded = 0;

  Rational mass(const std::function<bool(const DescentRecord&)>& predicate) const;
};

/// Expands every random branch of h's first descent on f with exact branch
/// probabilities taken from h.plan(). Partial assignments reached by several
/// orders are merged, which is sound because the heuristic sees only the
/// residual formula.
DescentDistribution descent_distribution(const Formula& f, const Heuristic& h,
                                         std::uint64_t node_limit = kDescentNodeLimit);

struct ProbabilityResult {
  Rational value = 0;
  bool complete = true;
  std::uint64_t nodes_expanded = 0;
};

ProbabilityResult descent_probability(const Formula& f, const Heuristic& h,
                                      const std::function<bool(const DescentRecord&)>& event,
                                      std::uint64_t node_limit = kDescentNodeLimit);

/// `p/q`.
std::string to_string(const Rational& r);
/// 2^e for any integer e, as an exact rational.
Rational pow2(long e);

}  // namespace hardsat

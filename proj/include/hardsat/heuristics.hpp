#pragma once

// Literal-selection procedures of the GUC and Randomized GUC algorithms.
//
// A heuristic does not sample directly. It first describes the random
// experiment it would perform as a ChoicePlan (a uniform pick of a group,
// followed by a uniform pick of a literal inside that group). The engine
// samples the plan with a RandomSource; the exact-probability oracle expands
// the same plan with rational weights, so both see one definition.

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "hardsat/cnf.hpp"
#include "hardsat/random.hpp"

namespace hardsat {

enum class ChoiceSource { unit, pure, split, flip };

std::string_view to_string(ChoiceSource s);

struct Choice {
  Literal literal;
  bool forced = false;
  ChoiceSource source = ChoiceSource::split;

  static Choice unit(Literal l) { return {l, true, ChoiceSource::unit}; }
  static Choice pure(Literal l) { return {l, true, ChoiceSource::pure}; }
  static Choice split(Literal l) { return {l, false, ChoiceSource::split}; }
  static Choice flip(Literal l) { return {l, true, ChoiceSource::flip}; }

  friend bool operator==(const Choice&, const Choice&) = default;
};

/// Two-stage uniform experiment: pick one of `groups` uniformly, then one
/// literal of that group uniformly. Every group is nonempty.
struct ChoicePlan {
  ChoiceSource source = ChoiceSource::split;
  std::vector<std::vector<Literal>> groups;

  bool forced() const { return source != ChoiceSource::split; }
  Choice make_choice(Literal l) const { return {l, forced(), source}; }
};

struct HeuristicOptions {
  /// Apply the pure-literal step. Off emulates the original GUC variants.
  bool pure_literals = true;
};

class Heuristic {
public:
  explicit Heuristic(HeuristicOptions options) : options_(options) {}
  virtual ~Heuristic() = default;

  virtual std::string_view name() const = 0;

  /// Describes the next choice. Requires a nonempty view without the empty
  /// clause; throws std::logic_error otherwise.
  ChoicePlan plan(const ClauseView& f) const;

  /// Samples plan(f).
  Choice choose(const ClauseView& f, RandomSource& rng) const;

  const HeuristicOptions& options() const { return options_; }

protected:
  /// The literals offered for a clause picked in the split step.
  virtual std::vector<Literal> split_candidates(const Clause& c) const = 0;

private:
  HeuristicOptions options_;
};

/// Satisfies a random literal of a random shortest clause.
class GucHeuristic final : public Heuristic {
public:
  explicit GucHeuristic(HeuristicOptions options = {}) : Heuristic(options) {}
  std::string_view name() const override { return "guc"; }

protected:
  std::vector<Literal> split_candidates(const Clause& c) const override;
};

/// As GUC, but the split literal is drawn from C together with its negation.
class RandomizedGucHeuristic final : public Heuristic {
public:
  explicit RandomizedGucHeuristic(HeuristicOptions options = {}) : Heuristic(options) {}
  std::string_view name() const override { return "rguc"; }

protected:
  std::vector<Literal> split_candidates(const Clause& c) const override;
};

/// "guc" or "rguc"; throws std::invalid_argument on anything else.
std::unique_ptr<Heuristic> make_heuristic(std::string_view name, HeuristicOptions options = {});

Choice guc_choose(const ClauseView& f, RandomSource& rng);
Choice rguc_choose(const ClauseView& f, RandomSource& rng);

}  // namespace hardsat

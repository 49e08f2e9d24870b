#include "hardsat/heuristics.hpp"

#include <algorithm>
#include <stdexcept>

namespace hardsat {

std::string_view to_string(ChoiceSource s) {
  switch (s) {
  case ChoiceSource::unit:
    return "unit";
  case ChoiceSource::pure:
    return "pure";
  case ChoiceSource::split:
    return "split";
  case ChoiceSource::flip:
    return "flip";
  }
  return "?";
}

ChoicePlan Heuristic::plan(const ClauseView& f) const {
  if (f.is_empty())
    throw std::logic_error("heuristic invoked on the empty formula");
  if (f.has_empty_clause())
    throw std::logic_error("heuristic invoked on a formula containing the empty clause");

  ChoicePlan p;
  const std::size_t m = f.min_nonempty_bucket();
  if (m == 1) {
    p.source = ChoiceSource::unit;
    for (const Clause& c : f.clause_bucket(1))
      p.groups.push_back({c.literals().front()});
    return p;
  }
  if (options_.pure_literals) {
    auto pure = f.pure_literals();
    if (!pure.empty()) {
      p.source = ChoiceSource::pure;
      for (Literal l : pure)
        p.groups.push_back({l});
      return p;
    }
  }
  p.source = ChoiceSource::split;
  for (const Clause& c : f.clause_bucket(m))
    p.groups.push_back(split_candidates(c));
  return p;
}

Choice Heuristic::choose(const ClauseView& f, RandomSource& rng) const {
  const ChoicePlan p = plan(f);
  const auto& group = p.groups[rng.uniform(p.groups.size())];
  return p.make_choice(group[rng.uniform(group.size())]);
}

std::vector<Literal> GucHeuristic::split_candidates(const Clause& c) const {
  return {c.begin(), c.end()};
}

std::vector<Literal> RandomizedGucHeuristic::split_candidates(const Clause& c) const {
  std::vector<Literal> out;
  out.reserve(2 * c.size());
  for (Literal l : c) {
    out.push_back(l);
    out.push_back(~l);
  }
  return out;
}

std::unique_ptr<Heuristic> make_heuristic(std::string_view name, HeuristicOptions options) {
  if (name == "guc")
    return std::make_unique<GucHeuristic>(options);
  if (name == "rguc")
    return std::make_unique<RandomizedGucHeuristic>(options);
  throw std::invalid_argument("unknown heuristic '" + std::string(name) + "' (expected guc or rguc)");
}

Choice guc_choose(const ClauseView& f, RandomSource& rng) {
  static const GucHeuristic h;
  return h.choose(f, rng);
}

Choice rguc_choose(const ClauseView& f, RandomSource& rng) {
  static const RandomizedGucHeuristic h;
  return h.choose(f, rng);
}

}  // namespace hardsat

#include "hardsat/oracle.hpp"

#include <algorithm>

namespace hardsat {

namespace {

struct ClauseMask {
  std::uint32_t positive = 0;
  std::uint32_t negative = 0;
};

// Bit (n-1-i) carries variable vars[i], so counting upward visits total
// assignments in lexicographic order with false < true.
struct BitEncoding {
  std::vector<Var> vars;
  std::vector<ClauseMask> clauses;

  BitEncoding(const Formula& f, std::size_t max_vars, const char* who) : vars(f.variables()) {
    if (vars.size() > max_vars)
      throw OracleLimitError(std::string(who) + ": " + std::to_string(vars.size()) +
                             " variables exceed the limit of " + std::to_string(max_vars));
    for (const Clause& c : f) {
      ClauseMask m;
      for (Literal l : c) {
        const auto pos = std::lower_bound(vars.begin(), vars.end(), l.variable()) - vars.begin();
        const std::uint32_t bit = 1U << (vars.size() - 1 - static_cast<std::size_t>(pos));
        (l.is_positive() ? m.positive : m.negative) |= bit;
      }
      clauses.push_back(m);
    }
  }

  bool satisfies(std::uint32_t a) const {
    for (const ClauseMask& m : clauses)
      if (((a & m.positive) | (~a & m.negative)) == 0)
        return false;
    return true;
  }

  Assignment decode(std::uint32_t a) const {
    std::vector<Literal> lits;
    lits.reserve(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) {
      const bool value = (a >> (vars.size() - 1 - i)) & 1U;
      lits.push_back(value ? Literal::positive(vars[i]) : Literal::negative(vars[i]));
    }
    return Assignment(std::move(lits));
  }

  std::uint64_t space() const { return std::uint64_t{1} << vars.size(); }
};

}  // namespace

SatResult brute_force_sat(const Formula& f) {
  const BitEncoding enc(f, kBruteForceMaxVars, "brute_force_sat");
  for (std::uint64_t a = 0; a < enc.space(); ++a)
    if (enc.satisfies(static_cast<std::uint32_t>(a)))
      return {true, enc.decode(static_cast<std::uint32_t>(a))};
  return {false, std::nullopt};
}

ModelCount enumerate_satisfying(const Formula& f, bool list_models) {
  const BitEncoding enc(f, kEnumerateMaxVars, "enumerate_satisfying");
  ModelCount out;
  for (std::uint64_t a = 0; a < enc.space(); ++a) {
    if (!enc.satisfies(static_cast<std::uint32_t>(a)))
      continue;
    ++out.count;
    if (list_models)
      out.models.push_back(enc.decode(static_cast<std::uint32_t>(a)));
  }
  return out;
}

Rational DescentDistribution::mass(
    const std::function<bool(const DescentRecord&)>& predicate) const {
  Rational total = 0;
  for (const auto& [record, p] : outcomes)
    if (predicate(record))
      total += p;
  return total;
}

DescentDistribution descent_distribution(const Formula& f, const Heuristic& h,
                                         std::uint64_t node_limit) {
  struct Node {
    Formula residual;
    Rational mass;
  };

  DescentDistribution dist;
  std::map<Assignment, Node> level;
  level.emplace(Assignment{}, Node{f, Rational(1)});

  // Every path to a partial assignment I has length |I|, so expanding level
  // by level merges all orders that reach I before I is expanded.
  while (!level.empty()) {
    std::map<Assignment, Node> next;
    for (auto& [assignment, node] : level) {
      if (node.residual.has_empty_clause() || node.residual.is_empty()) {
        const Terminal t =
            node.residual.is_empty() ? Terminal::satisfied : Terminal::contradiction;
        dist.outcomes[DescentRecord{t, assignment}] += node.mass;
        dist.total_mass += node.mass;
        continue;
      }
      if (dist.nodes_expanded >= node_limit) {
        dist.complete = false;
        return dist;
      }
      ++dist.nodes_expanded;

      const ChoicePlan plan = h.plan(node.residual);
      const Rational per_group = node.mass / static_cast<unsigned long>(plan.groups.size());
      for (const auto& group : plan.groups) {
        const Rational per_literal = per_group / static_cast<unsigned long>(group.size());
        for (Literal l : group) {
          Assignment child = assignment.with(l);
          auto it = next.find(child);
          if (it != next.end())
            it->second.mass += per_literal;
          else
            next.emplace(std::move(child), Node{node.residual.apply(l), per_literal});
        }
      }
    }
    level = std::move(next);
  }
  return dist;
}

ProbabilityResult descent_probability(const Formula& f, const Heuristic& h,
                                      const std::function<bool(const DescentRecord&)>& event,
                                      std::uint64_t node_limit) {
  const DescentDistribution dist = descent_distribution(f, h, node_limit);
  return {dist.mass(event), dist.complete, dist.nodes_expanded};
}

std::string to_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational pow2(long e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
  if (e >= 0)
    return Rational(p);
  Rational r(mpz_class(1), p);
  r.canonicalize();
  return r;
}

}  // namespace hardsat

#include "hardsat/generators.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hardsat {

Formula tseitin(const ChargedGraph& g, Var first_variable) {
  if (first_variable < 1)
    throw std::invalid_argument("tseitin: first variable must be >= 1");
  std::vector<Clause> clauses;
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    const auto incident = g.incident_edges(v);
    const auto d = static_cast<std::uint32_t>(incident.size());
    const std::uint8_t charge = g.charges()[v];
    if (d == 0) {
      if (charge)
        throw std::invalid_argument("tseitin: isolated vertex " + std::to_string(v) +
                                    " has charge 1 (degenerate unsatisfiable core)");
      continue;
    }
    if (d > kMaxTseitinDegree)
      throw std::invalid_argument("tseitin: vertex " + std::to_string(v) + " has degree " +
                                  std::to_string(d) + " > " + std::to_string(kMaxTseitinDegree));
    // Forbid each pattern of the incident edge variables whose parity is not
    // the charge: the clause is false exactly on that pattern.
    for (std::uint32_t pattern = 0; pattern < (1U << d); ++pattern) {
      if ((static_cast<unsigned>(__builtin_popcount(pattern)) & 1U) == charge)
        continue;
      std::vector<Literal> lits;
      lits.reserve(d);
      for (std::uint32_t j = 0; j < d; ++j) {
        const Var x = first_variable + incident[j];
        lits.push_back((pattern >> j) & 1U ? Literal::negative(x) : Literal::positive(x));
      }
      clauses.emplace_back(std::move(lits));
    }
  }
  return Formula(std::move(clauses));
}

Formula attach_literal(Literal l, const Formula& f) {
  if (f.occurs(l.variable()))
    throw std::invalid_argument("attach_literal: variable " + std::to_string(l.variable()) +
                                " already occurs in the formula");
  std::vector<Clause> out;
  out.reserve(f.size());
  for (const Clause& c : f) {
    std::vector<Literal> lits(c.begin(), c.end());
    lits.push_back(l);
    out.emplace_back(std::move(lits));
  }
  return Formula(std::move(out));
}

Formula chain_formula(Literal guard, std::uint32_t m) {
  if (m < 3)
    throw std::invalid_argument("chain_formula: M must be >= 3");
  if (guard.variable() >= 2 && guard.variable() <= m)
    throw std::invalid_argument("chain_formula: guard variable overlaps x_2..x_M");
  std::vector<Clause> out;
  for (Var i = 2; i < m; ++i)
    out.push_back(Clause{guard, Literal::positive(i), Literal::negative(i + 1)});
  out.push_back(Clause{guard, Literal::positive(m), Literal::negative(2)});
  return Formula(std::move(out));
}

namespace {

void check_core(const FamilyParams& p) {
  const auto vars = p.core.variables();
  if (!vars.empty() && vars.front() <= p.m)
    throw std::invalid_argument("family core uses variable " + std::to_string(vars.front()) +
                                " which overlaps the scaffold x_1..x_" + std::to_string(p.m));
}

}  // namespace

Formula guc_hard(const FamilyParams& p) {
  if (p.m < 4)
    throw std::invalid_argument("guc_hard: M must be >= 4");
  check_core(p);
  return attach_literal(Literal::positive(1), p.core)
      .united(chain_formula(Literal::negative(1), p.m));
}

Formula rguc_hard(const FamilyParams& p) {
  if (p.m < 3 || p.m % 3 != 0)
    throw std::invalid_argument("rguc_hard: M must be a positive multiple of 3");
  check_core(p);
  std::vector<Clause> out;
  for (Var i = 1; i <= p.m; ++i) {
    const Formula attached = attach_literal(Literal::positive(i), p.core);
    out.insert(out.end(), attached.begin(), attached.end());
  }
  for (Var a = 1; a <= p.m; a += 3) {
    const Var b = a + 1, c = a + 2;
    out.push_back(Clause{Literal::positive(a), Literal::negative(b), Literal::negative(c)});
    out.push_back(Clause{Literal::positive(b), Literal::negative(c), Literal::negative(a)});
    out.push_back(Clause{Literal::positive(c), Literal::negative(a), Literal::negative(b)});
  }
  return Formula(std::move(out));
}

FamilyParams family_params(std::uint32_t m, const ChargedGraph& g) {
  return {m, tseitin(g, m + 1)};
}

Formula random_kcnf(std::uint32_t vars, std::uint32_t clauses, std::uint32_t k,
                    RandomSource& rng) {
  if (k == 0 || k > vars)
    throw std::invalid_argument("random_kcnf: need 1 <= k <= vars");
  std::vector<Clause> out;
  std::vector<Var> pool(vars);
  for (std::uint32_t c = 0; c < clauses; ++c) {
    for (Var v = 0; v < vars; ++v)
      pool[v] = v + 1;
    std::vector<Literal> lits;
    // Partial Fisher-Yates: the first k slots become a uniform k-subset.
    for (std::uint32_t j = 0; j < k; ++j) {
      std::swap(pool[j], pool[j + rng.uniform(vars - j)]);
      lits.push_back(rng.uniform(2) ? Literal::negative(pool[j]) : Literal::positive(pool[j]));
    }
    out.emplace_back(std::move(lits));
  }
  return Formula(std::move(out));
}

}  // namespace hardsat

#pragma once

// Formula families: Tseitin parity formulas over charged graphs (the
// unsatisfiable hard core) and the two satisfiable families that hide such a
// core behind a scaffold of variables x_1..x_M.

#include <cstdint>

#include "hardsat/cnf.hpp"
#include "hardsat/graph.hpp"
#include "hardsat/random.hpp"

namespace hardsat {

inline constexpr std::uint32_t kMaxTseitinDegree = 6;

/// One variable per edge: edge i becomes variable first_variable + i. Each
/// vertex of degree d contributes the 2^(d-1) width-d clauses forbidding edge
/// patterns whose parity differs from the vertex charge.
/// Throws std::invalid_argument when a vertex exceeds kMaxTseitinDegree or
/// when an isolated vertex carries charge 1 (the core would be the empty
/// clause, which is degenerate).
Formula tseitin(const ChargedGraph& g, Var first_variable = 1);

/// Adds l to every clause of f (the x∨E operator). Throws
/// std::invalid_argument if l's variable occurs in f.
Formula attach_literal(Literal l, const Formula& f);

/// guard ∨ H where H = (x_i ∨ ¬x_{i+1}) for i = 2..M-1 plus (x_M ∨ ¬x_2).
/// Once the guard is false, H forces x_2 = ... = x_M. Requires M >= 3.
Formula chain_formula(Literal guard, std::uint32_t m);

struct FamilyParams {
  std::uint32_t m = 0;  // scaffold width: x_1..x_M
  Formula core;         // unsatisfiable, over variables > M
};

/// (x_1 ∨ core) ∧ (¬x_1 ∨ H). Requires M >= 4 and core variables > M.
Formula guc_hard(const FamilyParams& p);

/// (x_i ∨ core) for every i <= M, plus for each triple (a, b, c) of
/// consecutive scaffold variables the cluster
/// (a ∨ ¬b ∨ ¬c) ∧ (b ∨ ¬c ∨ ¬a) ∧ (c ∨ ¬a ∨ ¬b).
/// Requires M >= 3, 3 | M and core variables > M.
Formula rguc_hard(const FamilyParams& p);

/// Tseitin core over g placed above the scaffold (first variable M + 1).
FamilyParams family_params(std::uint32_t m, const ChargedGraph& g);

/// Uniform random k-CNF: `clauses` clauses, each over k distinct variables
/// drawn from 1..vars with random signs.
Formula random_kcnf(std::uint32_t vars, std::uint32_t clauses, std::uint32_t k, RandomSource& rng);

}  // namespace hardsat

#pragma once

// Exact linear inequality systems over named variables, Fourier-Motzkin
// projection, and feasibility with checkable evidence in both directions:
// a witness point, or a nonnegative combination of the constraints that
// reduces to an absurd constant.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "montesinos/rational.hpp"

namespace montesinos {

enum class Relation { LE, LT, GE, GT, EQ };

const char* relation_symbol(Relation r);

struct LinearConstraint {
    std::vector<Rational> coeffs;  // dense, aligned with LinearSystem::variables
    Rational rhs;
    Relation rel = Relation::LE;
    std::string provenance;

    // Nonnegative multipliers over the constraints of the system this one
    // was derived from (by index); empty means it is an input constraint.
    std::vector<std::pair<std::size_t, Rational>> origin;

    bool is_constant() const;
    bool is_contradiction() const;  // meaningful for LE/LT constants
};

struct LinearSystem {
    std::vector<std::string> variables;
    std::vector<LinearConstraint> constraints;

    std::size_t var_index(const std::string& name) const;
    void add(std::vector<Rational> coeffs, Relation rel, Rational rhs, std::string provenance);
    std::string render(const LinearConstraint& c) const;
};

// Same solution set using only LE/LT: GE/GT rows are negated in place,
// each EQ row keeps its <= half at its own index and appends the >= half
// at the tail.  Farkas multiplier indices refer to this form.
LinearSystem normalized(const LinearSystem& system);

// Projects out one variable.  Every derived constraint carries multipliers
// over the *input* system's constraints (composed through any multipliers
// the input rows already carry), so an infeasibility found after repeated
// elimination can be replayed against the original system.  A combined
// constraint is strict iff either parent is strict.  Parallel redundant
// rows are pruned by exact dominance.
LinearSystem fm_eliminate(const LinearSystem& system, std::size_t var);
LinearSystem fm_eliminate(const LinearSystem& system, const std::string& var_name);

struct FarkasWitness {
    std::vector<std::pair<std::size_t, Rational>> multipliers;  // into normalized(system)
    bool strict = false;  // combination ends in 0 < 0 rather than 0 <= -c
};

struct SolveResult {
    bool feasible = false;
    std::vector<Rational> witness;  // aligned with system variables when feasible
    FarkasWitness farkas;           // when infeasible
};

// Decides feasibility by eliminating variables in the given order (all of
// them, ascending, when empty).  Feasible results carry a witness obtained
// by back-substitution choosing interval midpoints; the witness is
// re-verified against every original constraint before returning.
// Infeasible results carry a FarkasWitness re-verified by independent
// arithmetic before returning.
SolveResult solve(const LinearSystem& system, std::vector<std::size_t> elimination_order = {});

// Independent check that the multipliers are nonnegative and combine the
// normalized constraints into 0 <= c with c < 0, or a strict 0 < c with
// c <= 0.  Shares no state with the solver.
bool check_farkas(const LinearSystem& system, const FarkasWitness& witness);

struct Violation {
    std::size_t constraint_index = 0;
    std::string provenance;
    std::string rendered;
    Rational slack;  // negative, or zero on a violated strict constraint
    bool strict = false;
};

// Exact evaluation of one point against every constraint.
std::vector<Violation> evaluate_point(const LinearSystem& system,
                                      const std::vector<Rational>& point);

bool satisfies(const LinearSystem& system, const std::vector<Rational>& point);

} // namespace montesinos

#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "arpaforge/rational.hpp"
#include "arpaforge/regular.hpp"

namespace arpaforge {

/// A base of the weight-profile linear program, named by the weight indexes
/// of its basic variables: Y on the first-array side (subset of 0..nu-1),
/// X on the second-array side (subset of 0..d).
struct Base {
    std::set<int> Y;
    std::set<int> X;

    friend bool operator==(const Base& a, const Base& b) = default;
    friend auto operator<=>(const Base& a, const Base& b) = default;
};

/// The weight sequence i_0 = 0 < i_1 < ... < i_{k-1} < i_k = d < i_{k+1} = nu
/// over which the target ratio is maximized.
struct OptSequence {
    std::vector<int> idx;

    int k() const { return static_cast<int>(idx.size()) - 2; }
    friend bool operator==(const OptSequence& a, const OptSequence& b) = default;
};

void validate(const OptSequence& s, int nu, int d, int k);

/// Constraint matrix of the weight-profile LP: (k+1) rows by (nu+d+1)
/// columns, column i carrying variable y_i for i < nu and x_{i-nu} above.
/// Full row rank k+1.
std::vector<std::vector<BigInt>> lp_matrix(int nu, int d, int k);

/// Base criterion: Y and X disjoint with |Y u X| = k + 1.
bool is_base(const std::set<int>& Y, const std::set<int>& X, int k);
bool is_base(const Base& b, int k);

/// The basic solution attached to a base: the basic variable at weight i
/// takes the value +-prod_{a in (Y u X) \ {i}} (nu-a)/(i-a) / C(nu,i)
/// (negative product on the Y side); every other variable is zero.
struct BasicSolution {
    std::map<int, Rational> y;
    std::map<int, Rational> x;

    Rational objective(int nu) const;
};

BasicSolution basic_solution(const Base& b, int nu);

/// Feasibility criterion: listing Y u X in decreasing order, membership must
/// alternate X, Y, X, Y, ... starting with X. Equivalent to non-negativity
/// of the basic solution.
bool is_feasible_base(const Base& b, int k);

/// v(Y, X) = sum_{i in Y u X} prod_{a != i} (nu-a)/|i-a|, the LP objective
/// of the basic solution of a feasible base.
Rational base_objective(const Base& b, int nu);

/// Result of the closed maximization over weight sequences.
struct DeltaResult {
    Rational value;
    OptSequence argmax;  // lexicographically smallest among ties
};

/// Maximizes 2 / (1 + sum_r prod_{s<r} (nu-i_s)/(i_r-i_s) prod_{s>r}
/// (nu-i_s)/(i_s-i_r)) over all admissible weight sequences. This is the
/// closed route; see delta_by_base_enumeration for the independent one.
DeltaResult delta_opt(int nu, int d, int k);

struct BaseEnumResult {
    Rational value;
    std::vector<Base> argmin;  // every base attaining the optimum
    long feasible_count = 0;
};

/// Independent route: enumerate feasible bases, minimize v(Y, X), and return
/// 2/(opt+1). With prune enabled the search is restricted to bases with
/// d in X and 0 in Y u X, which every optimal base satisfies.
BaseEnumResult delta_by_base_enumeration(int nu, int d, int k, bool prune = true);

/// Per-weight coefficients prod_{s != r} (nu-i_s)/|i_r-i_s| / C(nu, i_r) of
/// the optimal pair described by a weight sequence, r = 0..k.
std::vector<Rational> sequence_coefficients(const OptSequence& s, int nu);

/// Smallest positive integer R* making every sequence coefficient integral
/// when multiplied by it (the lcm of the reduced denominators).
BigInt min_rstar(const OptSequence& s, int nu);

/// The optimal regular pair as a representative vector: weight i_r receives
/// multiplicity R* times its sequence coefficient, on the second-array side
/// when r = k (mod 2) and the first-array side otherwise; weight nu receives
/// R* on the first-array side.
RepVec optimal_cpa(int nu, int d, int k);

/// Closed forms: the p = k family, p/q at strength 1, and the floor/ceil
/// expression at strength 2. nullopt when no closed form is known.
std::optional<Rational> closed_form(int q, int p, int k);

/// The optimal target ratio of the symbol-side family: 1 when p = q,
/// otherwise equal to the Boolean-side optimum delta(q, p, k).
Rational gamma(int q, int p, int k);

}  // namespace arpaforge

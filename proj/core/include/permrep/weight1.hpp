#pragma once

#include <optional>

#include "permrep/bisym.hpp"

namespace permrep {

// Verdicts of the bounded witness search for weight-1 generators: a found
// witness refutes generation; absence up to the bound is reported as such,
// never as a completeness claim.
struct GenTestReport {
    bool witness_found = false;
    std::optional<QFunc> witness;  // univariate in T, present when found
    int degree_bound = 0;
    bool rational_mode = false;
    std::string witness_str;
};

// Searches for Q in k(T)^x with sum_t q_t Q(x_t) = 0. Polynomial mode solves
// the k-linear system for Q = sum a_i T^i, deg <= D (complete for polynomial
// witnesses up to D); rational mode additionally sweeps denominators
// prod (T - beta)^e, e <= 2, beta from a small integer pool, solving the
// cleared identity with the denominator fixed. Witnesses are re-verified by
// exact substitution.
GenTestReport generator_test_weight1(const WeightedElement& alpha, int ambient,
                                     int deg_bound, bool rational_mode);

struct Q2Report {
    bool surjective = false;
    bool d_zero = false;
    std::string d_str;
    bool witness_found = false;
    std::optional<QFunc> witness;  // S(T) with q(a,b)S(a) + q(b,a)S(b) = 0, when found
    std::string witness_str;
    int truncation_corank = -1;  // oracle: corank of the weight-2 -> weight-1 map at n=4
    bool consistent = false;     // D-test, witness search and rank oracle agree
};

// Complete two-variable surjectivity criterion: the determinant
// D = q(a0,a1)q(a1,a2)q(a2,a0) + q(a1,a0)q(a2,a1)q(a0,a2) vanishes exactly
// for the non-surjective q; cross-validated against the truncated-rank
// oracle and a bounded witness search.
Q2Report q2_surjectivity(const QFunc& q, int witness_deg_bound = 4);

}  // namespace permrep

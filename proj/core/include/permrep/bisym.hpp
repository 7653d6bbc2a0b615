#pragma once

#include "permrep/rat.hpp"
#include "permrep/ratfunc.hpp"

namespace permrep {

using QFunc = RatFunc<Rat>;

// Element of S_{M,N}: a rational function in N slot variables, symmetric in
// the first M and in the last N-M. Such functions are the equivariant maps
// from the weight-N generator to the weight-M one.
struct BiSym {
    int m = 0, n = 0;
    QFunc f;
};

// Validates the bisymmetry on adjacent transpositions.
BiSym make_bisym(int m, int n, QFunc f);

BiSym bisym_constant_one(int m, int n);

// Pads a rational function in k(x1..xn) into k(x1..x_ambient).
QFunc lift_vars(const QFunc& f, int ambient);

// Q(J <= T) inside k(x1..x_ambient): the first M slots take the variables
// indexed by J (ascending), the remaining slots take T \ J (ascending).
QFunc bisym_value(const BiSym& q, const std::vector<int>& j, const std::vector<int>& t,
                  int ambient);

// Finite formal sum of coefficients against size-`level` variable subsets.
struct WeightedElement {
    int level = 0;
    std::vector<std::pair<QFunc, std::vector<int>>> terms;  // sorted subobjects, nonzero coefs
};

WeightedElement normalize_weighted(WeightedElement w);
bool operator==(const WeightedElement& a, const WeightedElement& b);
std::string weighted_str(const WeightedElement& w, int ambient);

// [T] -> sum over J <= T of Q(J <= T) [J], extended K-linearly.
WeightedElement hom_apply(const BiSym& q, const WeightedElement& w, int ambient);

// The semilinear action of a variable permutation on a weighted element.
WeightedElement act_on_weighted(const WeightedElement& w, const std::vector<int>& sigma);

// Composition: with r : N -> M applied first and q : M -> L applied second,
// the composite sends (J0 <= T) to sum over J0 <= J <= T, |J| = M, of
// r(J <= T) q(J0 <= J), realized as an element of S_{L,N}.
BiSym hom_compose(const BiSym& q, const BiSym& r);

}  // namespace permrep

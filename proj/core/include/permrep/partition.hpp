#pragma once

#include <vector>

#include "permrep/common.hpp"

namespace permrep {

// Weakly decreasing positive parts.
using Partition = std::vector<int>;

bool is_partition(const Partition& p);
int partition_weight(const Partition& p);

// All partitions of m, descending-lex ordered, (m) first.
std::vector<Partition> partitions_of(int m);

long long factorial(int m);

// Size of the conjugacy class of cycle type mu in Sym(m), m = |mu|.
long long class_size(const Partition& mu);

// Irreducible character chi_lambda evaluated on the class of cycle type mu,
// by the Murnaghan-Nakayama rim-hook recursion on beta-numbers.
long long character_value(const Partition& lambda, const Partition& mu);

// Dimension of the Specht module, by the hook length formula.
long long hook_dimension(const Partition& lambda);

}  // namespace permrep

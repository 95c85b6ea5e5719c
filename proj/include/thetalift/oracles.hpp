#pragma once

// Independent reference computations. Nothing here calls the routine it is
// meant to check: the Weyl group is built from matrices instead of orbits,
// tensor products are multiplied out instead of using Brauer-Klimyk, and
// so(10) -> so(9) branching is enumerated from the interlacing rule.

#include "thetalift/characters.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace thetalift::oracle {

/// Order of the group generated by the simple reflection matrices,
/// by closure under left multiplication.
std::int64_t weyl_group_order_by_matrices(SystemLabel label);

/// Pointwise product of the two full characters, peeled into irreducibles
/// from the lexicographically greatest weight down.
DecompositionList tensor_by_character_product(const IrrepLabel& a, const IrrepLabel& b);

/// B4 highest weights (mu1..mu4) with
///   l1 >= mu1 >= l2 >= mu2 >= l3 >= mu3 >= l4 >= mu4 >= |l5|,
/// all congruent to the l_i mod 1, each with multiplicity one.
DecompositionList d5_to_b4_interlacing(const Weight& d5_highest);

/// Number of pairs (a, b) with a + b <= N: the rank of the degree-N
/// filtration piece of a rank-one free C[e, f]-module.
std::size_t free_module_count(std::size_t max_degree);

}  // namespace thetalift::oracle

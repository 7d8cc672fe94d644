#pragma once

#include <utility>

#include "fockcrystal/column.hpp"

// Combinatorial R-matrix swapping the two factors of a column tensor product.
// theta works on finite columns by greedy letter matching; psi lifts it to
// infinite columns by truncating, applying theta and extending back. Both are
// total on all column pairs.

namespace fock {

// theta(C1 x C2) = (C2', C1'): the heights swap, the letter multiset of the
// pair is preserved, and the map commutes with the tensor crystal operators.
std::pair<FiniteColumn, FiniteColumn> theta(const FiniteColumn& c1, const FiniteColumn& c2);

// Largest cut a such that both columns contain every letter < a.
int default_truncation_depth(const InfiniteColumn& p1, const InfiniteColumn& p2);

// psi(C1 x C2) = (C2', C1'); the output charges are those of the inputs,
// swapped. The result does not depend on the cut as long as it is at most
// default_truncation_depth.
std::pair<InfiniteColumn, InfiniteColumn> psi(const InfiniteColumn& p1,
                                              const InfiniteColumn& p2);
std::pair<InfiniteColumn, InfiniteColumn> psi_at_depth(const InfiniteColumn& p1,
                                                       const InfiniteColumn& p2, int a);

}  // namespace fock

#pragma once

#include <vector>

namespace fock {

// Reduced form of a +/- word after cancelling all -+ factors (equivalently RA
// factors with A = '+', R = '-'). The reduced word is +^p -^q; survivors are
// reported as indices into the input word, in ascending order.
struct Signature {
    std::vector<int> plus;
    std::vector<int> minus;
};

// Single left-to-right pass: a '-' opens, the next '+' closes it. The surviving
// set does not depend on the cancellation order.
Signature reduce_signature(const std::vector<bool>& word);

}  // namespace fock

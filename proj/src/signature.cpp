#include "fockcrystal/signature.hpp"

namespace fock {

Signature reduce_signature(const std::vector<bool>& word) {
    Signature sig;
    std::vector<int> open_minus;
    for (int i = 0; i < static_cast<int>(word.size()); ++i) {
        if (word[i]) {
            if (!open_minus.empty())
                open_minus.pop_back();
            else
                sig.plus.push_back(i);
        } else {
            open_minus.push_back(i);
        }
    }
    sig.minus = std::move(open_minus);
    return sig;
}

}  // namespace fock

#include "fockcrystal/column.hpp"

#include <algorithm>
#include <stdexcept>

namespace fock {

FiniteColumn::FiniteColumn(std::vector<int> letters) : letters_(std::move(letters)) {
    for (std::size_t i = 0; i + 1 < letters_.size(); ++i)
        if (letters_[i] <= letters_[i + 1])
            throw std::invalid_argument("column letters must strictly decrease");
}

bool FiniteColumn::contains(int x) const {
    return std::binary_search(letters_.begin(), letters_.end(), x, std::greater<int>());
}

int InfiniteColumn::letter(int k) const {
    if (k < 1) throw std::invalid_argument("letters are 1-indexed");
    return shape_.part(k) + charge_ - k + 1;
}

bool InfiniteColumn::contains(int x) const {
    const int p = shape_.length();
    if (x <= charge_ - p) return true;  // tail letter, row k = charge - x + 1 > p
    for (int k = 1; k <= p; ++k)
        if (letter(k) == x) return true;
    return false;
}

FiniteColumn letters_of(const InfiniteColumn& ic, int count) {
    if (count < 0) throw std::invalid_argument("count must be >= 0");
    std::vector<int> xs;
    xs.reserve(count);
    for (int k = 1; k <= count; ++k) xs.push_back(ic.letter(k));
    return FiniteColumn(std::move(xs));
}

FiniteColumn truncate(const InfiniteColumn& ic, int a) {
    std::vector<int> xs;
    for (int k = 1;; ++k) {
        const int x = ic.letter(k);
        if (x < a) break;
        xs.push_back(x);
    }
    return FiniteColumn(std::move(xs));
}

InfiniteColumn extend(const FiniteColumn& fc, int a) {
    const int h = fc.height();
    if (h > 0 && fc.letters().back() < a)
        throw std::invalid_argument("column contains a letter below the cut");
    const int charge = a - 1 + h;
    std::vector<int> parts;
    parts.reserve(h);
    for (int k = 1; k <= h; ++k)
        parts.push_back(fc.letters()[k - 1] - charge + k - 1);
    return InfiniteColumn(charge, Partition(std::move(parts)));
}

}  // namespace fock

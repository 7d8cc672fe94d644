#include "fockcrystal/rmatrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace fock {

namespace {

FiniteColumn reorder(std::vector<int> xs) {
    std::sort(xs.begin(), xs.end(), std::greater<int>());
    for (std::size_t i = 0; i + 1 < xs.size(); ++i)
        if (xs[i] == xs[i + 1])
            throw std::logic_error("R-matrix produced a repeated letter");
    return FiniteColumn(std::move(xs));
}

}  // namespace

std::pair<FiniteColumn, FiniteColumn> theta(const FiniteColumn& c1, const FiniteColumn& c2) {
    const int k = c1.height();
    const int l = c2.height();
    if (k >= l) {
        // Match each x in C2, smallest first, with y in C1: the largest letter
        // <= x, falling back to the largest letter when none fits.
        std::vector<int> pool(c1.letters().rbegin(), c1.letters().rend());  // ascending
        std::vector<int> matched;
        matched.reserve(l);
        for (auto x = c2.letters().rbegin(); x != c2.letters().rend(); ++x) {
            auto it = std::upper_bound(pool.begin(), pool.end(), *x);
            if (it == pool.begin()) it = pool.end();  // min of pool exceeds x
            --it;
            matched.push_back(*it);
            pool.erase(it);
        }
        std::vector<int> rest = pool;
        rest.insert(rest.end(), c2.letters().begin(), c2.letters().end());
        return {reorder(std::move(matched)), reorder(std::move(rest))};
    }
    // Match each x in C1, smallest first, with y in C2: the smallest letter
    // >= x, falling back to the smallest letter when none fits.
    std::vector<int> pool(c2.letters().rbegin(), c2.letters().rend());
    std::vector<int> matched;
    matched.reserve(k);
    for (auto x = c1.letters().rbegin(); x != c1.letters().rend(); ++x) {
        auto it = std::lower_bound(pool.begin(), pool.end(), *x);
        if (it == pool.end()) it = pool.begin();  // max of pool below x
        matched.push_back(*it);
        pool.erase(it);
    }
    std::vector<int> rest = pool;
    rest.insert(rest.end(), c1.letters().begin(), c1.letters().end());
    return {reorder(std::move(rest)), reorder(std::move(matched))};
}

int default_truncation_depth(const InfiniteColumn& p1, const InfiniteColumn& p2) {
    return std::min(p1.charge() - p1.shape().length(), p2.charge() - p2.shape().length());
}

std::pair<InfiniteColumn, InfiniteColumn> psi_at_depth(const InfiniteColumn& p1,
                                                       const InfiniteColumn& p2, int a) {
    if (a > default_truncation_depth(p1, p2))
        throw std::invalid_argument("cut must keep all letters of both shapes");
    const auto [c2p, c1p] = theta(truncate(p1, a), truncate(p2, a));
    return {extend(c2p, a), extend(c1p, a)};
}

std::pair<InfiniteColumn, InfiniteColumn> psi(const InfiniteColumn& p1,
                                              const InfiniteColumn& p2) {
    return psi_at_depth(p1, p2, default_truncation_depth(p1, p2));
}

}  // namespace fock

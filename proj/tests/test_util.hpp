#pragma once

#include <vector>

#include "fockcrystal/partition.hpp"

// Brute-force enumerations shared by the test suites.

namespace testutil {

inline void partitions_rec(int n, int max_part, std::vector<int>& cur,
                           std::vector<fock::Partition>& out) {
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(n - p, p, cur, out);
        cur.pop_back();
    }
}

inline std::vector<fock::Partition> partitions_of(int n) {
    std::vector<fock::Partition> out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

inline std::vector<fock::Partition> partitions_up_to(int n) {
    std::vector<fock::Partition> out;
    for (int k = 0; k <= n; ++k) {
        auto more = partitions_of(k);
        out.insert(out.end(), more.begin(), more.end());
    }
    return out;
}

inline std::vector<fock::Multipartition> multipartitions_of(int level, int n) {
    if (level == 1) {
        std::vector<fock::Multipartition> out;
        for (auto& p : partitions_of(n)) out.push_back(fock::Multipartition({p}));
        return out;
    }
    std::vector<fock::Multipartition> out;
    for (int head = 0; head <= n; ++head) {
        for (const auto& p : partitions_of(head)) {
            for (const auto& rest : multipartitions_of(level - 1, n - head)) {
                std::vector<fock::Partition> comps{p};
                comps.insert(comps.end(), rest.components().begin(), rest.components().end());
                out.emplace_back(std::move(comps));
            }
        }
    }
    return out;
}

inline std::vector<fock::Multipartition> multipartitions_up_to(int level, int n) {
    std::vector<fock::Multipartition> out;
    for (int k = 0; k <= n; ++k) {
        auto more = multipartitions_of(level, k);
        out.insert(out.end(), more.begin(), more.end());
    }
    return out;
}

}  // namespace testutil

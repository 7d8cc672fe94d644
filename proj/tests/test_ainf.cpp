#include <doctest.h>

#include <algorithm>
#include <random>

#include "fockcrystal/ainf.hpp"
#include "fockcrystal/fock.hpp"
#include "fockcrystal/signature.hpp"

using namespace fock;

namespace {

Partition random_partition(std::mt19937& rng, int max_len = 4, int max_part = 5) {
    std::uniform_int_distribution<int> len_d(0, max_len), part_d(1, max_part);
    std::vector<int> parts(len_d(rng));
    for (int& x : parts) x = part_d(rng);
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(parts);
}

AinfVertex random_vertex(std::mt19937& rng, int level) {
    std::vector<InfiniteColumn> factors;
    for (int k = 0; k < level; ++k)
        factors.emplace_back(static_cast<int>(rng() % 9) - 4, random_partition(rng));
    return AinfVertex(std::move(factors));
}

// All labels i whose word could be nonempty for this vertex.
std::vector<int> touched_labels(const AinfVertex& v) {
    int lo = 0, hi = 0;
    for (const auto& f : v.factors()) {
        lo = std::min(lo, f.charge() - f.shape().length() - 1);
        hi = std::max(hi, f.charge() + (f.shape().empty() ? 0 : f.shape().parts()[0]) + 1);
    }
    std::vector<int> out;
    for (int i = lo; i <= hi; ++i) out.push_back(i);
    return out;
}

// Reference canceller: delete -+ factors at random positions until none left.
Signature naive_reduce(const std::vector<bool>& word, std::mt19937& rng) {
    std::vector<int> idx(word.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<bool> cur = word;
    while (true) {
        std::vector<int> sites;
        for (std::size_t t = 0; t + 1 < cur.size(); ++t)
            if (!cur[t] && cur[t + 1]) sites.push_back(static_cast<int>(t));
        if (sites.empty()) break;
        const int at = sites[rng() % sites.size()];
        cur.erase(cur.begin() + at, cur.begin() + at + 2);
        idx.erase(idx.begin() + at, idx.begin() + at + 2);
    }
    Signature sig;
    for (std::size_t t = 0; t < cur.size(); ++t)
        (cur[t] ? sig.plus : sig.minus).push_back(idx[t]);
    return sig;
}

}  // namespace

TEST_CASE("single-column operators") {
    CHECK(finite_f(4, FiniteColumn({7, 6, 4, 1})) == FiniteColumn({7, 6, 5, 1}));
    CHECK(finite_f(6, FiniteColumn({7, 6, 4, 1})) == std::nullopt);
    CHECK(finite_e(4, FiniteColumn({7, 6, 5, 1})) == FiniteColumn({7, 6, 4, 1}));
    CHECK(finite_e(3, FiniteColumn({7, 6, 4, 1})) == FiniteColumn({7, 6, 3, 1}));
    CHECK(finite_f(0, FiniteColumn{}) == std::nullopt);
}

TEST_CASE("signature reduction is confluent") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 2000; ++trial) {
        std::vector<bool> word(rng() % 12);
        for (std::size_t t = 0; t < word.size(); ++t) word[t] = rng() & 1;
        const Signature fast = reduce_signature(word);
        const Signature slow = naive_reduce(word, rng);
        CHECK(fast.plus == slow.plus);
        CHECK(fast.minus == slow.minus);
        // reduced form is +^p -^q
        if (!fast.plus.empty() && !fast.minus.empty())
            CHECK(fast.plus.back() < fast.minus.front());
    }
}

TEST_CASE("operator on a single-factor vertex") {
    const AinfVertex v({InfiniteColumn(3, Partition({4, 4, 3, 1}))});
    const auto w = tensor_f(4, v);
    REQUIRE(w.has_value());
    CHECK(w->factor(0).shape() == Partition({4, 4, 4, 1}));
    CHECK(w->factor(0).charge() == 3);
    CHECK(mp_f_inf(4, v.multipartition(), v.charges()) ==
          Multipartition({Partition({4, 4, 4, 1})}));
}

TEST_CASE("highest weight vertex admits no f below its charges") {
    const AinfVertex b = highest_weight_vertex(Multicharge({2, 0, 1}));
    CHECK(tensor_f(-1, b) == std::nullopt);  // -1 and 0 sit in every factor
    CHECK(tensor_f(3, b) == std::nullopt);   // 3 sits in none
    for (int s : {0, 1, 2}) CHECK(tensor_f(s, b).has_value());
}

TEST_CASE("word rule adds to the only factor with an addable node") {
    const Multipartition mp = empty_multipartition(2);
    const Multicharge charges({1, 0});
    const auto next = mp_f_inf(0, mp, charges);
    REQUIRE(next.has_value());
    CHECK(*next == Multipartition({Partition{}, Partition({1})}));

    // single factor: the corner is the only addable node
    for (int s : {-2, 0, 3})
        CHECK(mp_f_inf(s, empty_multipartition(1), Multicharge({s})) ==
              Multipartition({Partition({1})}));
}

TEST_CASE("tensor and word pictures agree") {
    std::mt19937 rng(43);
    std::uniform_int_distribution<int> level_d(1, 3);
    for (int trial = 0; trial < 10000; ++trial) {
        const AinfVertex v = random_vertex(rng, level_d(rng));
        const Multipartition mp = v.multipartition();
        const Multicharge charges = v.charges();
        for (int i : touched_labels(v)) {
            const auto tf = tensor_f(i, v);
            const auto wf = mp_f_inf(i, mp, charges);
            CHECK(tf.has_value() == wf.has_value());
            if (tf && wf) {
                CHECK(tf->multipartition() == *wf);
                CHECK(tf->rank() == v.rank() + 1);
            }
            const auto te = tensor_e(i, v);
            const auto we = mp_e_inf(i, mp, charges);
            CHECK(te.has_value() == we.has_value());
            if (te && we) CHECK(te->multipartition() == *we);
        }
    }
}

TEST_CASE("f and e are mutually inverse") {
    std::mt19937 rng(47);
    for (int trial = 0; trial < 2000; ++trial) {
        const AinfVertex v = random_vertex(rng, 1 + static_cast<int>(rng() % 3));
        for (int i : touched_labels(v)) {
            if (const auto w = tensor_f(i, v)) CHECK(tensor_e(i, *w) == v);
            if (const auto w = tensor_e(i, v)) CHECK(tensor_f(i, *w) == v);
        }
    }
}

TEST_CASE("truncated replay matches the infinite one") {
    SUBCASE("empty path") {
        CHECK(lem_pia_check({}, Multicharge({2, 0}), 0, nullptr));
    }
    SUBCASE("single step from the running example") {
        // f_4 on charge 3 keeps every letter >= -2
        CHECK(lem_pia_check({3, 4}, Multicharge({3}), -2, nullptr));
    }
    SUBCASE("a full path to the running example's column") {
        // walk (4,4,3,1) at charge 3 down to the vacuum, then replay the
        // reversed content path truncated at -2; every intermediate shape is
        // contained in the endpoint, so all letters stay above the cut
        const Multicharge charges({3});
        Multipartition mp({Partition({4, 4, 3, 1})});
        std::vector<int> path;
        while (mp.rank() > 0) {
            bool removed = false;
            for (int j = -5; j <= 8 && !removed; ++j) {
                if (auto prev = mp_e_inf(j, mp, charges)) {
                    path.push_back(j);
                    mp = std::move(*prev);
                    removed = true;
                }
            }
            REQUIRE(removed);
        }
        std::reverse(path.begin(), path.end());
        std::string why;
        CHECK_MESSAGE(lem_pia_check(path, charges, -2, &why), why);
        const auto endpoint = replay_path_ainf(path, charges);
        CHECK(endpoint == Multipartition({Partition({4, 4, 3, 1})}));
    }
    SUBCASE("a too large is reported") {
        std::string why;
        // step at content -1 changes a letter below the cut a = 0
        CHECK(!lem_pia_check({0, -1}, Multicharge({0}), 0, &why));
        CHECK(!why.empty());
    }
    SUBCASE("random paths at a safe depth") {
        std::mt19937 rng(53);
        for (int trial = 0; trial < 300; ++trial) {
            const int level = 1 + static_cast<int>(rng() % 3);
            std::vector<int> charges(level);
            for (int& s : charges) s = static_cast<int>(rng() % 7) - 3;
            const Multicharge mc(charges);
            AinfVertex v = highest_weight_vertex(mc);
            std::vector<int> path;
            for (int step = 0; step < 5; ++step) {
                const auto labels = touched_labels(v);
                std::vector<int> usable;
                for (int i : labels)
                    if (tensor_f(i, v)) usable.push_back(i);
                REQUIRE(!usable.empty());
                const int i = usable[rng() % usable.size()];
                path.push_back(i);
                v = *tensor_f(i, v);
            }
            const int a = *std::min_element(charges.begin(), charges.end()) - 6;
            std::string why;
            CHECK_MESSAGE(lem_pia_check(path, mc, a, &why), why);
        }
    }
}

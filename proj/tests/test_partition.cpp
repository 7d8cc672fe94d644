#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "fockcrystal/partition.hpp"

using namespace fock;

namespace {

// Independent enumeration of addable/removable cells: try every cell in a
// bounding box and test the partition axiom on the modified diagram. Rows of
// a Young diagram are prefixes, so touching any cell other than the row end
// (or the slot just past it) cannot yield a diagram.
std::vector<BoundaryNode> scan_boundary(const Partition& p, int charge) {
    std::vector<BoundaryNode> out;
    const int rows = p.length() + 1;
    const int cols = (p.empty() ? 0 : p.parts()[0]) + 1;
    auto is_partition = [](std::vector<int> parts) {
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] < 1) return false;
            if (i + 1 < parts.size() && parts[i] < parts[i + 1]) return false;
        }
        return true;
    };
    for (int a = 1; a <= rows; ++a) {
        for (int b = 1; b <= cols; ++b) {
            std::vector<int> parts;
            for (int r = 1; r <= rows; ++r) parts.push_back(p.part(r));
            if (b > p.part(a)) {
                if (b != p.part(a) + 1) continue;
                parts[a - 1] = b;
                if (is_partition(parts))
                    out.push_back({a, b, NodeKind::Addable, b - a + charge});
            } else {
                if (b != p.part(a)) continue;
                parts[a - 1] = b - 1;
                if (is_partition(parts))
                    out.push_back({a, b, NodeKind::Removable, b - a + charge});
            }
        }
    }
    return out;
}

Partition random_partition(std::mt19937& rng, int max_len = 5, int max_part = 6) {
    std::uniform_int_distribution<int> len_d(0, max_len), part_d(1, max_part);
    std::vector<int> parts(len_d(rng));
    for (int& x : parts) x = part_d(rng);
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(parts);
}

std::set<int> contents_of(const std::vector<BoundaryNode>& v, NodeKind kind) {
    std::set<int> out;
    for (const auto& b : v)
        if (b.kind == kind) out.insert(b.content);
    return out;
}

}  // namespace

TEST_CASE("content of a node") {
    CHECK(content({3, 4, 0}, Multicharge({3})) == 4);
    CHECK(content({1, 1, 2}, Multicharge({4, 0, 1})) == 1);
    CHECK(content({5, 1, 0}, Multicharge({0})) == -4);
    CHECK_THROWS_AS(content({1, 1, 3}, Multicharge({4, 0, 1})), std::invalid_argument);
}

TEST_CASE("residue normalizes into [0, e)") {
    CHECK(residue_mod(4, 3) == 1);
    CHECK(residue_mod(-1, 2) == 1);
    CHECK(residue({2, 1, 0}, Multicharge({0}), 2) == 1);
    CHECK_THROWS_AS(residue_mod(1, 1), std::invalid_argument);
}

TEST_CASE("partition invariants") {
    CHECK(Partition({4, 3, 0, 0}).parts() == std::vector<int>{4, 3});
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
    CHECK(Partition{}.empty());
    CHECK(Partition({4, 2, 1}).size() == 7);
}

TEST_CASE("addable and removable cells") {
    SUBCASE("empty partition") {
        const auto v = addable_removable(Partition{}, 0);
        REQUIRE(v.size() == 1);
        CHECK(v[0].kind == NodeKind::Addable);
        CHECK(v[0].row == 1);
        CHECK(v[0].col == 1);
        CHECK(v[0].content == 0);
    }
    SUBCASE("(4,3,3,1) at charge 3, values frozen from the cell scan") {
        const auto v = addable_removable(Partition({4, 3, 3, 1}), 3);
        CHECK(contents_of(v, NodeKind::Removable) == std::set<int>{6, 3, 0});
        CHECK(contents_of(v, NodeKind::Addable) == std::set<int>{7, 5, 1, -1});
    }
    SUBCASE("(2,1) at charge 0") {
        const auto v = addable_removable(Partition({2, 1}), 0);
        CHECK(contents_of(v, NodeKind::Addable) == std::set<int>{2, 0, -2});
        CHECK(contents_of(v, NodeKind::Removable) == std::set<int>{1, -1});
    }
    SUBCASE("agrees with the exhaustive scan; per-content uniqueness") {
        std::mt19937 rng(7);
        for (int trial = 0; trial < 500; ++trial) {
            const Partition p = random_partition(rng);
            const int charge = static_cast<int>(rng() % 9) - 4;
            auto got = addable_removable(p, charge);
            auto want = scan_boundary(p, charge);
            auto key = [](const BoundaryNode& b) {
                return std::tuple(b.row, b.col, b.kind == NodeKind::Addable, b.content);
            };
            auto cmp = [&](const BoundaryNode& x, const BoundaryNode& y) {
                return key(x) < key(y);
            };
            std::sort(got.begin(), got.end(), cmp);
            std::sort(want.begin(), want.end(), cmp);
            REQUIRE(got.size() == want.size());
            for (std::size_t i = 0; i < got.size(); ++i) CHECK(key(got[i]) == key(want[i]));

            // addable and removable contents are disjoint, one node per content
            std::set<int> seen;
            for (const auto& b : got) {
                CHECK(!seen.count(b.content));
                seen.insert(b.content);
            }
        }
    }
}

TEST_CASE("conjugation") {
    CHECK(conjugate(Partition{}) == Partition{});
    CHECK(conjugate(Partition({1, 1, 1})) == Partition({3}));
    CHECK(conjugate(Partition({4, 2, 1})) == Partition({3, 2, 1, 1}));

    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const Partition p = random_partition(rng);
        CHECK(conjugate(conjugate(p)) == p);
        CHECK(conjugate(p).size() == p.size());
    }
}

TEST_CASE("multipartition conjugation with dual multicharge") {
    {
        const auto [mp, s] = conjugate_mp(empty_multipartition(2), Multicharge({0, 1}), 4);
        CHECK(mp == empty_multipartition(2));
        CHECK(s == Multicharge({4, 3}));
    }
    {
        const auto [mp, s] = conjugate_mp(Multipartition({Partition({2}), Partition({1})}),
                                          Multicharge({0, 0}), 2);
        CHECK(mp == Multipartition({Partition({1, 1}), Partition({1})}));
        CHECK(s == Multicharge({2, 2}));
    }
    {
        const auto [mp, s] = conjugate_mp(Multipartition({Partition({1, 1, 1}), Partition{}}),
                                          Multicharge({1, 0}), 3);
        CHECK(mp == Multipartition({Partition({3}), Partition{}}));
        CHECK(s == Multicharge({2, 3}));
    }
}

TEST_CASE("diamond reversal") {
    CHECK(diamond(empty_multipartition(3)) == empty_multipartition(3));
    CHECK(diamond(Multipartition({Partition({1}), Partition({2}), Partition({3})})) ==
          Multipartition({Partition({3}), Partition({2}), Partition({1})}));
    CHECK(diamond_charge(Multicharge({4, 0, 1})) == Multicharge({1, 0, 4}));

    std::mt19937 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Partition> comps;
        for (int c = 0; c < 3; ++c) comps.push_back(random_partition(rng));
        const Multipartition mp(comps);
        CHECK(diamond(diamond(mp)) == mp);
        CHECK(diamond(mp).rank() == mp.rank());
    }
}

TEST_CASE("node addition and removal") {
    const Multipartition mp({Partition({2, 1}), Partition{}});
    CHECK(add_node(mp, {1, 3, 0}) == Multipartition({Partition({3, 1}), Partition{}}));
    CHECK(add_node(mp, {1, 1, 1}) == Multipartition({Partition({2, 1}), Partition({1})}));
    CHECK(remove_node(mp, {2, 1, 0}) == Multipartition({Partition({2}), Partition{}}));
    CHECK_THROWS_AS(add_node(mp, {2, 3, 0}), std::invalid_argument);
    CHECK_THROWS_AS(remove_node(mp, {1, 1, 0}), std::invalid_argument);
}

TEST_CASE("e-regular and e-restricted partitions") {
    CHECK(is_e_restricted(Partition({2, 1}), 2));
    CHECK(!is_e_restricted(Partition({3, 1}), 2));
    CHECK(!is_e_restricted(Partition({3}), 2));
    CHECK(is_e_restricted(Partition{}, 2));
    CHECK(is_e_regular(Partition({2, 1}), 2));
    CHECK(!is_e_regular(Partition({1, 1}), 2));
    CHECK(is_e_regular(Partition({2, 2, 1}), 3));
    CHECK(!is_e_regular(Partition({2, 2, 2}), 3));
}

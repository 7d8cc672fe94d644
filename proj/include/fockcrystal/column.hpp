#pragma once

#include <compare>
#include <vector>

#include "fockcrystal/partition.hpp"

namespace fock {

// Column-shaped filling with strictly decreasing integer letters, top to
// bottom. Height 0 is allowed.
class FiniteColumn {
  public:
    FiniteColumn() = default;
    explicit FiniteColumn(std::vector<int> letters);

    const std::vector<int>& letters() const { return letters_; }
    int height() const { return static_cast<int>(letters_.size()); }
    bool contains(int x) const;

    auto operator<=>(const FiniteColumn&) const = default;

  private:
    std::vector<int> letters_;
};

// Infinite column whose letters eventually run down s, s-1, s-2, ...
// Canonically encoded by the charge s and the partition lambda with
// lambda_k = x_k - s + k - 1, so that x_k = lambda_k + s - k + 1.
class InfiniteColumn {
  public:
    InfiniteColumn() = default;
    InfiniteColumn(int charge, Partition shape)
        : charge_(charge), shape_(std::move(shape)) {}

    int charge() const { return charge_; }
    const Partition& shape() const { return shape_; }
    // k-th letter from the top, k >= 1.
    int letter(int k) const;
    bool contains(int x) const;

    auto operator<=>(const InfiniteColumn&) const = default;

  private:
    int charge_ = 0;
    Partition shape_;
};

// The top `count` letters.
FiniteColumn letters_of(const InfiniteColumn& ic, int count);

// pi_a: keep exactly the letters >= a. For a <= charge - #parts the result has
// height charge - a + 1.
FiniteColumn truncate(const InfiniteColumn& ic, int a);

// Inverse of truncate: append all letters < a below fc. Every letter of fc
// must be >= a; the recovered charge is a - 1 + height(fc).
InfiniteColumn extend(const FiniteColumn& fc, int a);

}  // namespace fock

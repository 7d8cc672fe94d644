#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fockcrystal/column.hpp"
#include "fockcrystal/partition.hpp"

// Crystal operators of type A_infinity on columns and tensor products of
// columns. Operator labels are arbitrary integers (contents); edges are
// partial, so absent results are values rather than errors.

namespace fock {

// Ordered tensor product of infinite columns; factor 0 is the leftmost.
class AinfVertex {
  public:
    AinfVertex() = default;
    explicit AinfVertex(std::vector<InfiniteColumn> factors)
        : factors_(std::move(factors)) {}

    const std::vector<InfiniteColumn>& factors() const { return factors_; }
    const InfiniteColumn& factor(int k) const { return factors_[k]; }
    int size() const { return static_cast<int>(factors_.size()); }

    Multipartition multipartition() const;
    Multicharge charges() const;
    int rank() const;

    auto operator<=>(const AinfVertex&) const = default;

  private:
    std::vector<InfiniteColumn> factors_;
};

// Vacuum vertex: one empty-shape column per charge.
AinfVertex highest_weight_vertex(const Multicharge& charges);
// Factor k = (charges_k, mp_k); components are taken in factor order.
AinfVertex vertex_from(const Multipartition& mp, const Multicharge& charges);

// f_i on a single column: replace i by i+1 when i is present and i+1 absent.
std::optional<FiniteColumn> finite_f(int i, const FiniteColumn& c);
// e_i, the inverse arrow: replace i+1 by i.
std::optional<FiniteColumn> finite_e(int i, const FiniteColumn& c);

// Signature rule for tensor products: read letters i, i+1 through the factors
// left to right (each column top to bottom), encode i as '+' and i+1 as '-',
// cancel -+ factors, then act on the letter of the rightmost '+' (for f) or
// the leftmost '-' (for e).
std::optional<std::vector<FiniteColumn>> tensor_f(int i, const std::vector<FiniteColumn>& factors);
std::optional<std::vector<FiniteColumn>> tensor_e(int i, const std::vector<FiniteColumn>& factors);
std::optional<AinfVertex> tensor_f(int i, const AinfVertex& v);
std::optional<AinfVertex> tensor_e(int i, const AinfVertex& v);

// The same operators computed in the multipartition picture: build the word of
// addable/removable content-j nodes read through the components in factor
// order, cancel RA factors, add the node of the rightmost A (f) or remove the
// node of the leftmost R (e). Agrees with tensor_f/tensor_e under the
// column/partition dictionary.
std::optional<Multipartition> mp_f_inf(int j, const Multipartition& mp, const Multicharge& charges);
std::optional<Multipartition> mp_e_inf(int j, const Multipartition& mp, const Multicharge& charges);

// Replays the content path from the vacuum vertex twice, on infinite columns
// and on their truncations at a (heights s_k + 1 - a), and checks that the
// truncated endpoint equals pi_a of the untruncated endpoint. A failure reason
// is written to *why when given.
bool lem_pia_check(const std::vector<int>& path, const Multicharge& charges, int a,
                   std::string* why = nullptr);

}  // namespace fock

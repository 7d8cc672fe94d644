#pragma once

#include <compare>
#include <vector>

// Young diagrams follow the French convention: row 1 is the bottom (longest)
// row. Rows and columns are 1-indexed, components of a multipartition are
// 0-indexed. A node (a,b,c) sits in row a, column b of component c and has
// content b - a + s_c for the attached multicharge s.

namespace fock {

class Partition {
  public:
    Partition() = default;
    // Accepts weakly decreasing parts, possibly with trailing zeros (stripped).
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    // 1-indexed part, zero beyond the last row.
    int part(int row) const;
    // Number of boxes.
    int size() const;

    auto operator<=>(const Partition&) const = default;

  private:
    std::vector<int> parts_;
};

class Multipartition {
  public:
    Multipartition() = default;
    explicit Multipartition(std::vector<Partition> components);

    const std::vector<Partition>& components() const { return components_; }
    const Partition& component(int c) const { return components_[c]; }
    int level() const { return static_cast<int>(components_.size()); }
    // Total number of boxes.
    int rank() const;
    bool empty() const;

    auto operator<=>(const Multipartition&) const = default;

  private:
    std::vector<Partition> components_;
};

// The empty multipartition with the given number of components.
Multipartition empty_multipartition(int level);

class Multicharge {
  public:
    Multicharge() = default;
    explicit Multicharge(std::vector<int> charges);

    const std::vector<int>& charges() const { return charges_; }
    int charge(int c) const { return charges_[c]; }
    int level() const { return static_cast<int>(charges_.size()); }
    // max_k |s_k|
    int norm() const;

    auto operator<=>(const Multicharge&) const = default;

  private:
    std::vector<int> charges_;
};

struct Node {
    int row = 1;
    int col = 1;
    int comp = 0;

    auto operator<=>(const Node&) const = default;
};

enum class NodeKind { Addable, Removable };

// A boundary cell of a single partition together with its content.
struct BoundaryNode {
    int row;
    int col;
    NodeKind kind;
    int content;
};

int content(const Node& node, const Multicharge& s);

// Content reduced into [0, e). Requires e >= 2.
int residue_mod(int content, int e);
int residue(const Node& node, const Multicharge& s, int e);

// Every addable and every removable cell of p, bottom row first. Contents are
// computed with the given charge; contents within each kind strictly decrease
// and the two content sets are disjoint.
std::vector<BoundaryNode> addable_removable(const Partition& p, int charge);

// Diagram with the given addable (resp. removable) node added (removed).
// Throws std::invalid_argument when the node is not addable (removable).
Multipartition add_node(const Multipartition& mp, const Node& n);
Multipartition remove_node(const Multipartition& mp, const Node& n);

// Transpose of the Young diagram.
Partition conjugate(const Partition& p);

// Componentwise conjugate paired with the dual multicharge (e-s_0,...,e-s_{l-1}).
std::pair<Multipartition, Multicharge> conjugate_mp(const Multipartition& mp,
                                                    const Multicharge& s, int e);

// Reversal of the component order.
Multipartition diamond(const Multipartition& mp);
Multicharge diamond_charge(const Multicharge& s);

// lambda_i - lambda_{i+1} <= e-1 for all i (final part included, against 0).
bool is_e_restricted(const Partition& p, int e);
// No part value repeated e or more times.
bool is_e_regular(const Partition& p, int e);

}  // namespace fock

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fockcrystal/partition.hpp"

// Crystal operators of type A_{e-1}^(1) on level-l Fock spaces. The space
// carries two crystal structures, selected by a Convention:
//
//   Plus  - i-nodes ordered by the total order <+ (content, then component
//           ascending) and the word w_i is read in *decreasing* order, so
//           larger contents come first and, at equal content, larger
//           components first.
//   Minus - i-nodes ordered by <- (content, then component descending) and
//           w_i is read in *increasing* order: smaller contents first and, at
//           equal content, larger components first.
//
// In both cases addable nodes are encoded A, removable nodes R, RA factors are
// cancelled to reach A^p R^q, and the operators act on the rightmost A (F) or
// the leftmost R (E).

namespace fock {

enum class Convention { Plus, Minus };

// An entry of the ordered word w_i.
struct WordEntry {
    Node node;
    NodeKind kind;
    int content;
};

// The word w_i of addable/removable i-nodes in the convention's reading
// order, before cancellation. Requires e >= 2 and 0 <= i < e.
std::vector<WordEntry> i_word(const Multipartition& mp, const Multicharge& s, int e,
                              int i, Convention conv);

// The node acted on by F (kind Addable) or E (kind Removable), if any.
std::optional<Node> good_node(const Multipartition& mp, const Multicharge& s, int e,
                              int i, NodeKind kind, Convention conv);

// F_i adds the good addable i-node and reports its content (the lifted edge
// label); E_i removes the good removable i-node.
std::optional<std::pair<Multipartition, int>> crystal_f(int i, const Multipartition& mp,
                                                        const Multicharge& s, int e,
                                                        Convention conv);
std::optional<std::pair<Multipartition, int>> crystal_e(int i, const Multipartition& mp,
                                                        const Multicharge& s, int e,
                                                        Convention conv);

struct CrystalStep {
    int residue;
    int content;

    auto operator<=>(const CrystalStep&) const = default;
};

struct ReduceResult {
    Multipartition highest_weight;
    // Replay order: applying F along path from highest_weight returns the input.
    std::vector<CrystalStep> path;
};

// Exhausts E, always at the smallest residue carrying a good removable node.
// The terminal vertex does not depend on that choice.
ReduceResult highest_weight_reduce(const Multipartition& mp, const Multicharge& s, int e,
                                   Convention conv);

// True iff mp lies in the connected component of the empty multipartition.
bool is_uglov(const Multipartition& mp, const Multicharge& s, int e, Convention conv);

// Non-recursive membership test. Convention Minus requires
// 0 <= s_0 <= ... <= s_{l-1} <= e-1 and checks cylindricity plus the
// forbidden-residue condition on row ends; convention Plus requires the
// reversed chain and is evaluated on the conjugate multipartition at the dual
// multicharge. Throws std::invalid_argument outside the charge domain.
bool is_flotw(const Multipartition& mp, const Multicharge& s, int e, Convention conv);

struct CrystalEdge {
    int src;
    int residue;
    int content;  // lifted label
    int dst;
};

struct CrystalGraph {
    Multicharge charge;
    int e = 2;
    Convention conv = Convention::Plus;
    std::vector<Multipartition> vertices;   // BFS order, vertex 0 is empty
    std::vector<std::vector<int>> layers;   // layers[r] = vertices of rank r
    std::vector<CrystalEdge> edges;

    // Index of mp among the vertices, -1 if absent.
    int index_of(const Multipartition& mp) const;
};

// Layer-by-layer BFS from the empty multipartition up to the given rank.
CrystalGraph generate_crystal(const Multicharge& s, int e, Convention conv, int max_rank);

// Replays F along a content path from the empty multipartition, applying each
// step at residue (content mod e) and requiring the good node to have exactly
// the stated content; absent on any mismatch.
std::optional<Multipartition> replay_path(const std::vector<int>& contents,
                                          const Multicharge& s, int e, Convention conv);

// Content replay in the A_infinity crystal on the reversed component order:
// the result is diamond-ordered, with charges diamond_charge(s).
std::optional<Multipartition> replay_path_ainf(const std::vector<int>& contents,
                                               const Multicharge& s);

// Membership among Kleshchev multipartitions of rank <= n, decided through a
// multicharge lift with consecutive gaps > n-1. s_residues are classes mod e.
bool kleshchev_rank_bounded(const Multipartition& mp, const std::vector<int>& s_residues,
                            int e, int n);

}  // namespace fock

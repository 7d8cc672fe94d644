#include "fockcrystal/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fock {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("partition parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("partition parts must weakly decrease");
    }
}

int Partition::part(int row) const {
    if (row < 1) throw std::invalid_argument("rows are 1-indexed");
    return row <= length() ? parts_[row - 1] : 0;
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Multipartition::Multipartition(std::vector<Partition> components)
    : components_(std::move(components)) {
    if (components_.empty())
        throw std::invalid_argument("multipartition needs at least one component");
}

int Multipartition::rank() const {
    int n = 0;
    for (const auto& p : components_) n += p.size();
    return n;
}

bool Multipartition::empty() const {
    return std::all_of(components_.begin(), components_.end(),
                       [](const Partition& p) { return p.empty(); });
}

Multipartition empty_multipartition(int level) {
    if (level < 1) throw std::invalid_argument("level must be >= 1");
    return Multipartition(std::vector<Partition>(level));
}

Multicharge::Multicharge(std::vector<int> charges) : charges_(std::move(charges)) {
    if (charges_.empty())
        throw std::invalid_argument("multicharge needs at least one entry");
}

int Multicharge::norm() const {
    int m = 0;
    for (int s : charges_) m = std::max(m, std::abs(s));
    return m;
}

int content(const Node& node, const Multicharge& s) {
    if (node.comp < 0 || node.comp >= s.level())
        throw std::invalid_argument("node component out of multicharge range");
    return node.col - node.row + s.charge(node.comp);
}

int residue_mod(int content, int e) {
    if (e < 2) throw std::invalid_argument("e must be >= 2");
    int r = content % e;
    return r < 0 ? r + e : r;
}

int residue(const Node& node, const Multicharge& s, int e) {
    return residue_mod(content(node, s), e);
}

std::vector<BoundaryNode> addable_removable(const Partition& p, int charge) {
    std::vector<BoundaryNode> out;
    const int len = p.length();
    for (int row = 1; row <= len + 1; ++row) {
        const int here = p.part(row);
        const int above = p.part(row + 1);
        // Addable at (row, here+1) when the row below is strictly longer
        // (row 1 is always extendable; row len+1 opens a new part).
        if (row == 1 || p.part(row - 1) > here)
            out.push_back({row, here + 1, NodeKind::Addable, here + 1 - row + charge});
        if (here > 0 && here > above)
            out.push_back({row, here, NodeKind::Removable, here - row + charge});
    }
    return out;
}

Multipartition add_node(const Multipartition& mp, const Node& n) {
    if (n.comp < 0 || n.comp >= mp.level())
        throw std::invalid_argument("node component out of range");
    std::vector<Partition> comps = mp.components();
    std::vector<int> parts = comps[n.comp].parts();
    const int len = static_cast<int>(parts.size());
    if (n.row < 1 || n.row > len + 1 || n.col != comps[n.comp].part(n.row) + 1 ||
        (n.row > 1 && parts[n.row - 2] < n.col))
        throw std::invalid_argument("node is not addable");
    if (n.row == len + 1)
        parts.push_back(1);
    else
        ++parts[n.row - 1];
    comps[n.comp] = Partition(std::move(parts));
    return Multipartition(std::move(comps));
}

Multipartition remove_node(const Multipartition& mp, const Node& n) {
    if (n.comp < 0 || n.comp >= mp.level())
        throw std::invalid_argument("node component out of range");
    std::vector<Partition> comps = mp.components();
    std::vector<int> parts = comps[n.comp].parts();
    const int len = static_cast<int>(parts.size());
    if (n.row < 1 || n.row > len || n.col != parts[n.row - 1] ||
        (n.row < len && parts[n.row] == n.col))
        throw std::invalid_argument("node is not removable");
    --parts[n.row - 1];
    comps[n.comp] = Partition(std::move(parts));
    return Multipartition(std::move(comps));
}

Partition conjugate(const Partition& p) {
    if (p.empty()) return {};
    std::vector<int> cols(p.parts()[0], 0);
    for (int part : p.parts())
        for (int b = 0; b < part; ++b) ++cols[b];
    return Partition(std::move(cols));
}

std::pair<Multipartition, Multicharge> conjugate_mp(const Multipartition& mp,
                                                    const Multicharge& s, int e) {
    if (mp.level() != s.level())
        throw std::invalid_argument("multipartition/multicharge level mismatch");
    std::vector<Partition> comps;
    std::vector<int> dual;
    comps.reserve(mp.level());
    for (int c = 0; c < mp.level(); ++c) {
        comps.push_back(conjugate(mp.component(c)));
        dual.push_back(e - s.charge(c));
    }
    return {Multipartition(std::move(comps)), Multicharge(std::move(dual))};
}

Multipartition diamond(const Multipartition& mp) {
    std::vector<Partition> comps(mp.components().rbegin(), mp.components().rend());
    return Multipartition(std::move(comps));
}

Multicharge diamond_charge(const Multicharge& s) {
    std::vector<int> rev(s.charges().rbegin(), s.charges().rend());
    return Multicharge(std::move(rev));
}

bool is_e_restricted(const Partition& p, int e) {
    if (e < 2) throw std::invalid_argument("e must be >= 2");
    for (int row = 1; row <= p.length(); ++row)
        if (p.part(row) - p.part(row + 1) > e - 1) return false;
    return true;
}

bool is_e_regular(const Partition& p, int e) {
    if (e < 2) throw std::invalid_argument("e must be >= 2");
    int run = 0, prev = 0;
    for (int part : p.parts()) {
        run = (part == prev) ? run + 1 : 1;
        prev = part;
        if (run >= e) return false;
    }
    return true;
}

}  // namespace fock

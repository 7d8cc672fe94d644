#include "fockcrystal/fock.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "fockcrystal/ainf.hpp"
#include "fockcrystal/signature.hpp"

namespace fock {

namespace {

void check_e_i(int e, int i) {
    if (e < 2) throw std::invalid_argument("e must be >= 2");
    if (i < 0 || i >= e) throw std::invalid_argument("residue out of [0, e)");
}

int ceil_div(int a, int b) {
    return a > 0 ? (a - 1) / b + 1 : a / b;
}

}  // namespace

std::vector<WordEntry> i_word(const Multipartition& mp, const Multicharge& s, int e,
                              int i, Convention conv) {
    check_e_i(e, i);
    if (mp.level() != s.level())
        throw std::invalid_argument("multipartition/multicharge level mismatch");
    std::vector<WordEntry> word;
    for (int c = 0; c < mp.level(); ++c)
        for (const BoundaryNode& b : addable_removable(mp.component(c), s.charge(c)))
            if (residue_mod(b.content, e) == i)
                word.push_back({{b.row, b.col, c}, b.kind, b.content});
    // Plus reads in decreasing <+ order, Minus in increasing <- order; both
    // list equal contents by descending component.
    if (conv == Convention::Plus) {
        std::sort(word.begin(), word.end(), [](const WordEntry& x, const WordEntry& y) {
            if (x.content != y.content) return x.content > y.content;
            return x.node.comp > y.node.comp;
        });
    } else {
        std::sort(word.begin(), word.end(), [](const WordEntry& x, const WordEntry& y) {
            if (x.content != y.content) return x.content < y.content;
            return x.node.comp > y.node.comp;
        });
    }
    return word;
}

std::optional<Node> good_node(const Multipartition& mp, const Multicharge& s, int e,
                              int i, NodeKind kind, Convention conv) {
    const std::vector<WordEntry> word = i_word(mp, s, e, i, conv);
    std::vector<bool> encoded;
    encoded.reserve(word.size());
    for (const WordEntry& w : word) encoded.push_back(w.kind == NodeKind::Addable);
    const Signature sig = reduce_signature(encoded);
    if (kind == NodeKind::Addable) {
        if (sig.plus.empty()) return std::nullopt;
        return word[sig.plus.back()].node;
    }
    if (sig.minus.empty()) return std::nullopt;
    return word[sig.minus.front()].node;
}

std::optional<std::pair<Multipartition, int>> crystal_f(int i, const Multipartition& mp,
                                                        const Multicharge& s, int e,
                                                        Convention conv) {
    const auto g = good_node(mp, s, e, i, NodeKind::Addable, conv);
    if (!g) return std::nullopt;
    return std::make_pair(add_node(mp, *g), content(*g, s));
}

std::optional<std::pair<Multipartition, int>> crystal_e(int i, const Multipartition& mp,
                                                        const Multicharge& s, int e,
                                                        Convention conv) {
    const auto g = good_node(mp, s, e, i, NodeKind::Removable, conv);
    if (!g) return std::nullopt;
    return std::make_pair(remove_node(mp, *g), content(*g, s));
}

ReduceResult highest_weight_reduce(const Multipartition& mp, const Multicharge& s, int e,
                                   Convention conv) {
    ReduceResult r{mp, {}};
    bool removed = true;
    while (removed) {
        removed = false;
        for (int i = 0; i < e && !removed; ++i) {
            if (auto step = crystal_e(i, r.highest_weight, s, e, conv)) {
                r.path.push_back({i, step->second});
                r.highest_weight = std::move(step->first);
                removed = true;
            }
        }
    }
    std::reverse(r.path.begin(), r.path.end());
    return r;
}

bool is_uglov(const Multipartition& mp, const Multicharge& s, int e, Convention conv) {
    return highest_weight_reduce(mp, s, e, conv).highest_weight.empty();
}

namespace {

// Cylindricity and the forbidden-residue condition, for weakly increasing
// charges whose window is at most e. Invariant under shifting all charges by
// a common multiple of e, which is how the Plus convention reaches it.
bool flotw_conditions(const Multipartition& mp, const Multicharge& s, int e) {
    const int l = mp.level();
    for (int k = 0; k < l; ++k) {
        const Partition& left = mp.component(k);
        const Partition& right = mp.component((k + 1) % l);
        const int shift = (k + 1 < l) ? s.charge(k + 1) - s.charge(k)
                                      : e + s.charge(0) - s.charge(l - 1);
        for (int i = 1; i + shift <= right.length(); ++i)
            if (left.part(i) < right.part(i + shift)) return false;
    }
    std::map<int, std::set<int>> row_end_residues;
    for (int c = 0; c < l; ++c) {
        const Partition& p = mp.component(c);
        for (int row = 1; row <= p.length(); ++row) {
            const int r = p.part(row);
            row_end_residues[r].insert(residue_mod(r - row + s.charge(c), e));
        }
    }
    for (const auto& [r, residues] : row_end_residues)
        if (static_cast<int>(residues.size()) == e) return false;
    return true;
}

void check_flotw_domain(const Multicharge& s, int e, Convention conv) {
    const int l = s.level();
    if (conv == Convention::Minus) {
        if (s.charge(0) < 0)
            throw std::invalid_argument("FLOTW domain requires 0 <= s_0");
        for (int k = 0; k + 1 < l; ++k)
            if (s.charge(k) > s.charge(k + 1))
                throw std::invalid_argument("FLOTW domain requires s_" + std::to_string(k) +
                                            " <= s_" + std::to_string(k + 1));
        if (s.charge(l - 1) > e - 1)
            throw std::invalid_argument("FLOTW domain requires s_" + std::to_string(l - 1) +
                                        " <= e-1");
    } else {
        if (s.charge(l - 1) < 0)
            throw std::invalid_argument("FLOTW domain requires 0 <= s_" + std::to_string(l - 1));
        for (int k = 0; k + 1 < l; ++k)
            if (s.charge(k) < s.charge(k + 1))
                throw std::invalid_argument("FLOTW domain requires s_" + std::to_string(k + 1) +
                                            " <= s_" + std::to_string(k));
        if (s.charge(0) > e - 1)
            throw std::invalid_argument("FLOTW domain requires s_0 <= e-1");
    }
}

}  // namespace

bool is_flotw(const Multipartition& mp, const Multicharge& s, int e, Convention conv) {
    if (e < 2) throw std::invalid_argument("e must be >= 2");
    if (mp.level() != s.level())
        throw std::invalid_argument("multipartition/multicharge level mismatch");
    check_flotw_domain(s, e, conv);
    if (conv == Convention::Minus) return flotw_conditions(mp, s, e);
    const auto [cmp, cs] = conjugate_mp(mp, s, e);
    return flotw_conditions(cmp, cs, e);
}

int CrystalGraph::index_of(const Multipartition& mp) const {
    for (int k = 0; k < static_cast<int>(vertices.size()); ++k)
        if (vertices[k] == mp) return k;
    return -1;
}

CrystalGraph generate_crystal(const Multicharge& s, int e, Convention conv, int max_rank) {
    if (e < 2) throw std::invalid_argument("e must be >= 2");
    if (max_rank < 0) throw std::invalid_argument("max_rank must be >= 0");
    CrystalGraph g{s, e, conv, {}, {}, {}};
    g.vertices.push_back(empty_multipartition(s.level()));
    g.layers.push_back({0});
    std::map<Multipartition, int> index{{g.vertices[0], 0}};
    for (int r = 0; r < max_rank; ++r) {
        std::vector<int> next;
        for (int src : g.layers[r]) {
            for (int i = 0; i < e; ++i) {
                auto step = crystal_f(i, g.vertices[src], s, e, conv);
                if (!step) continue;
                auto [it, fresh] = index.try_emplace(step->first,
                                                     static_cast<int>(g.vertices.size()));
                if (fresh) {
                    g.vertices.push_back(step->first);
                    next.push_back(it->second);
                }
                g.edges.push_back({src, i, step->second, it->second});
            }
        }
        g.layers.push_back(std::move(next));
    }
    return g;
}

std::optional<Multipartition> replay_path(const std::vector<int>& contents,
                                          const Multicharge& s, int e, Convention conv) {
    Multipartition mp = empty_multipartition(s.level());
    for (int j : contents) {
        auto step = crystal_f(residue_mod(j, e), mp, s, e, conv);
        if (!step || step->second != j) return std::nullopt;
        mp = std::move(step->first);
    }
    return mp;
}

std::optional<Multipartition> replay_path_ainf(const std::vector<int>& contents,
                                               const Multicharge& s) {
    const Multicharge ds = diamond_charge(s);
    Multipartition mp = empty_multipartition(s.level());
    for (int j : contents) {
        auto next = mp_f_inf(j, mp, ds);
        if (!next) return std::nullopt;
        mp = std::move(*next);
    }
    return mp;
}

bool kleshchev_rank_bounded(const Multipartition& mp, const std::vector<int>& s_residues,
                            int e, int n) {
    if (e < 2) throw std::invalid_argument("e must be >= 2");
    if (static_cast<int>(s_residues.size()) != mp.level())
        throw std::invalid_argument("multipartition/residue level mismatch");
    if (mp.rank() > n) throw std::invalid_argument("rank exceeds the bound n");
    const int l = mp.level();
    std::vector<int> lift(l);
    lift[l - 1] = residue_mod(s_residues[l - 1], e);
    for (int k = l - 2; k >= 0; --k) {
        const int r = residue_mod(s_residues[k], e);
        // smallest lift with lift[k] - lift[k+1] > n-1
        const int m = std::max(0, ceil_div(lift[k + 1] + n - r, e));
        lift[k] = r + m * e;
    }
    return is_uglov(mp, Multicharge(lift), e, Convention::Plus);
}

}  // namespace fock

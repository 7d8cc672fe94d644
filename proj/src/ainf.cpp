#include "fockcrystal/ainf.hpp"

#include <algorithm>
#include <stdexcept>

#include "fockcrystal/signature.hpp"

namespace fock {

namespace {

// Replace letter i by i+1, i.e. add the box of content i.
InfiniteColumn letter_up(const InfiniteColumn& ic, int i) {
    std::vector<int> parts = ic.shape().parts();
    const int len = static_cast<int>(parts.size());
    for (int k = 1; k <= len; ++k) {
        if (ic.letter(k) == i) {
            ++parts[k - 1];
            return {ic.charge(), Partition(std::move(parts))};
        }
    }
    // i sits in the tail; addability forces it to be the first tail letter.
    if (ic.letter(len + 1) != i)
        throw std::logic_error("letter_up: letter not present");
    parts.push_back(1);
    return {ic.charge(), Partition(std::move(parts))};
}

// Replace letter i+1 by i, i.e. remove the box of content i.
InfiniteColumn letter_down(const InfiniteColumn& ic, int i) {
    std::vector<int> parts = ic.shape().parts();
    for (int k = 1; k <= static_cast<int>(parts.size()); ++k) {
        if (ic.letter(k) == i + 1) {
            --parts[k - 1];
            return {ic.charge(), Partition(std::move(parts))};
        }
    }
    throw std::logic_error("letter_down: letter not present");
}

// One symbol per factor: '+' when f_i applies to it, '-' when e_i does.
// A factor containing both i and i+1 contributes the inert pair -+ which
// always cancels against itself, so it is skipped outright.
template <typename Factor>
std::pair<std::vector<bool>, std::vector<int>> letter_word(int i,
                                                           const std::vector<Factor>& factors) {
    std::vector<bool> word;
    std::vector<int> owner;
    for (int k = 0; k < static_cast<int>(factors.size()); ++k) {
        const bool has_i = factors[k].contains(i);
        const bool has_next = factors[k].contains(i + 1);
        if (has_i == has_next) continue;
        word.push_back(has_i);
        owner.push_back(k);
    }
    return {std::move(word), std::move(owner)};
}

}  // namespace

Multipartition AinfVertex::multipartition() const {
    std::vector<Partition> comps;
    comps.reserve(factors_.size());
    for (const auto& f : factors_) comps.push_back(f.shape());
    return Multipartition(std::move(comps));
}

Multicharge AinfVertex::charges() const {
    std::vector<int> cs;
    cs.reserve(factors_.size());
    for (const auto& f : factors_) cs.push_back(f.charge());
    return Multicharge(std::move(cs));
}

int AinfVertex::rank() const {
    int n = 0;
    for (const auto& f : factors_) n += f.shape().size();
    return n;
}

AinfVertex highest_weight_vertex(const Multicharge& charges) {
    std::vector<InfiniteColumn> factors;
    factors.reserve(charges.level());
    for (int s : charges.charges()) factors.emplace_back(s, Partition{});
    return AinfVertex(std::move(factors));
}

AinfVertex vertex_from(const Multipartition& mp, const Multicharge& charges) {
    if (mp.level() != charges.level())
        throw std::invalid_argument("multipartition/multicharge level mismatch");
    std::vector<InfiniteColumn> factors;
    factors.reserve(mp.level());
    for (int c = 0; c < mp.level(); ++c)
        factors.emplace_back(charges.charge(c), mp.component(c));
    return AinfVertex(std::move(factors));
}

std::optional<FiniteColumn> finite_f(int i, const FiniteColumn& c) {
    if (!c.contains(i) || c.contains(i + 1)) return std::nullopt;
    std::vector<int> xs = c.letters();
    *std::find(xs.begin(), xs.end(), i) = i + 1;
    std::sort(xs.begin(), xs.end(), std::greater<int>());
    return FiniteColumn(std::move(xs));
}

std::optional<FiniteColumn> finite_e(int i, const FiniteColumn& c) {
    if (!c.contains(i + 1) || c.contains(i)) return std::nullopt;
    std::vector<int> xs = c.letters();
    *std::find(xs.begin(), xs.end(), i + 1) = i;
    std::sort(xs.begin(), xs.end(), std::greater<int>());
    return FiniteColumn(std::move(xs));
}

std::optional<std::vector<FiniteColumn>> tensor_f(int i, const std::vector<FiniteColumn>& factors) {
    auto [word, owner] = letter_word(i, factors);
    const Signature sig = reduce_signature(word);
    if (sig.plus.empty()) return std::nullopt;
    auto out = factors;
    const int k = owner[sig.plus.back()];
    out[k] = *finite_f(i, out[k]);
    return out;
}

std::optional<std::vector<FiniteColumn>> tensor_e(int i, const std::vector<FiniteColumn>& factors) {
    auto [word, owner] = letter_word(i, factors);
    const Signature sig = reduce_signature(word);
    if (sig.minus.empty()) return std::nullopt;
    auto out = factors;
    const int k = owner[sig.minus.front()];
    out[k] = *finite_e(i, out[k]);
    return out;
}

std::optional<AinfVertex> tensor_f(int i, const AinfVertex& v) {
    auto [word, owner] = letter_word(i, v.factors());
    const Signature sig = reduce_signature(word);
    if (sig.plus.empty()) return std::nullopt;
    auto out = v.factors();
    const int k = owner[sig.plus.back()];
    out[k] = letter_up(out[k], i);
    return AinfVertex(std::move(out));
}

std::optional<AinfVertex> tensor_e(int i, const AinfVertex& v) {
    auto [word, owner] = letter_word(i, v.factors());
    const Signature sig = reduce_signature(word);
    if (sig.minus.empty()) return std::nullopt;
    auto out = v.factors();
    const int k = owner[sig.minus.front()];
    out[k] = letter_down(out[k], i);
    return AinfVertex(std::move(out));
}

namespace {

struct NodeWord {
    std::vector<bool> word;
    std::vector<Node> nodes;
};

// Addable/removable content-j nodes read through the components in order.
// Each component carries at most one such node (content-j cells of one
// partition lie on a single diagonal).
NodeWord content_word(int j, const Multipartition& mp, const Multicharge& charges) {
    if (mp.level() != charges.level())
        throw std::invalid_argument("multipartition/multicharge level mismatch");
    NodeWord w;
    for (int c = 0; c < mp.level(); ++c) {
        for (const BoundaryNode& b : addable_removable(mp.component(c), charges.charge(c))) {
            if (b.content != j) continue;
            w.word.push_back(b.kind == NodeKind::Addable);
            w.nodes.push_back({b.row, b.col, c});
        }
    }
    return w;
}

}  // namespace

std::optional<Multipartition> mp_f_inf(int j, const Multipartition& mp, const Multicharge& charges) {
    const NodeWord w = content_word(j, mp, charges);
    const Signature sig = reduce_signature(w.word);
    if (sig.plus.empty()) return std::nullopt;
    return add_node(mp, w.nodes[sig.plus.back()]);
}

std::optional<Multipartition> mp_e_inf(int j, const Multipartition& mp, const Multicharge& charges) {
    const NodeWord w = content_word(j, mp, charges);
    const Signature sig = reduce_signature(w.word);
    if (sig.minus.empty()) return std::nullopt;
    return remove_node(mp, w.nodes[sig.minus.front()]);
}

bool lem_pia_check(const std::vector<int>& path, const Multicharge& charges, int a,
                   std::string* why) {
    auto fail = [&](std::string reason) {
        if (why) *why = std::move(reason);
        return false;
    };
    AinfVertex v = highest_weight_vertex(charges);
    std::vector<FiniteColumn> t;
    t.reserve(charges.level());
    for (const auto& f : v.factors()) t.push_back(truncate(f, a));

    for (std::size_t m = 0; m < path.size(); ++m) {
        const int j = path[m];
        auto v2 = tensor_f(j, v);
        if (!v2)
            return fail("path is not applicable on the infinite columns at step " +
                        std::to_string(m));
        auto t2 = tensor_f(j, t);
        if (!t2)
            return fail("operator undefined on the truncated columns at step " +
                        std::to_string(m));
        v = std::move(*v2);
        t = std::move(*t2);
        for (int k = 0; k < v.size(); ++k) {
            if (truncate(v.factor(k), a) != t[k])
                return fail("truncated replay diverges in factor " + std::to_string(k) +
                            " at step " + std::to_string(m) + " (a is not small enough)");
        }
    }
    return true;
}

}  // namespace fock

#include "fockcrystal/charge_group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fock {

namespace {

void check_level(int level) {
    if (level < 1) throw std::invalid_argument("level must be >= 1");
}

}  // namespace

ChargeGroupElement::ChargeGroupElement(std::vector<int> source, std::vector<int> shift,
                                       std::vector<Generator> word)
    : source_(std::move(source)), shift_(std::move(shift)), word_(std::move(word)) {}

ChargeGroupElement ChargeGroupElement::identity(int level) {
    check_level(level);
    std::vector<int> src(level);
    std::iota(src.begin(), src.end(), 0);
    return {std::move(src), std::vector<int>(level, 0), {}};
}

ChargeGroupElement ChargeGroupElement::sigma(int level, int i) {
    check_level(level);
    if (i < 1 || i >= level) throw std::invalid_argument("sigma index out of [1, l-1]");
    std::vector<int> src(level);
    std::iota(src.begin(), src.end(), 0);
    std::swap(src[i - 1], src[i]);
    return {std::move(src), std::vector<int>(level, 0), {{Generator::Kind::Sigma, i}}};
}

ChargeGroupElement ChargeGroupElement::tau(int level) {
    check_level(level);
    std::vector<int> src(level);
    for (int m = 0; m < level; ++m) src[m] = (m + 1) % level;
    std::vector<int> shift(level, 0);
    shift[level - 1] = 1;
    return {std::move(src), std::move(shift), {{Generator::Kind::Tau, 0}}};
}

ChargeGroupElement ChargeGroupElement::tau_inverse(int level) {
    return invert(tau(level));
}

ChargeGroupElement ChargeGroupElement::z_element(int level, int i) {
    check_level(level);
    if (i < 0 || i > level) throw std::invalid_argument("z index out of [0, l]");
    if (i == 0) return identity(level);  // empty product; xi^l would only pad the word
    ChargeGroupElement xi = identity(level);
    for (int t = 1; t < level; ++t) xi = compose(sigma(level, t), xi);
    ChargeGroupElement out = identity(level);
    for (int t = 0; t < i; ++t) out = compose(tau(level), out);
    for (int t = 0; t < level - i; ++t) out = compose(xi, out);
    return out;
}

ChargeGroupElement ChargeGroupElement::y_shift(int level, int j) {
    check_level(level);
    if (j < 1 || j > level) throw std::invalid_argument("y index out of [1, l]");
    return compose(invert(z_element(level, j - 1)), z_element(level, j));
}

ChargeGroupElement ChargeGroupElement::suffix_shift(int level, int j) {
    check_level(level);
    if (j < 0 || j > level) throw std::invalid_argument("suffix index out of [0, l]");
    return compose(z_element(level, level), invert(z_element(level, j)));
}

ChargeGroupElement ChargeGroupElement::from_source_permutation(const std::vector<int>& source) {
    const int level = static_cast<int>(source.size());
    check_level(level);
    {
        std::vector<int> seen(level, 0);
        for (int v : source) {
            if (v < 0 || v >= level || seen[v]++)
                throw std::invalid_argument("not a permutation");
        }
    }
    std::vector<int> cur(level);
    std::iota(cur.begin(), cur.end(), 0);
    ChargeGroupElement out = identity(level);
    for (int i = 0; i < level; ++i) {
        if (cur[i] == source[i]) continue;
        int j = i + 1;
        while (cur[j] != source[i]) ++j;
        for (int t = j; t > i; --t) {
            std::swap(cur[t - 1], cur[t]);
            out = compose(sigma(level, t), out);
        }
    }
    return out;
}

Multicharge act(const ChargeGroupElement& g, const Multicharge& s, int e) {
    if (e < 2) throw std::invalid_argument("e must be >= 2");
    if (g.level() != s.level()) throw std::invalid_argument("level mismatch");
    std::vector<int> out(g.level());
    for (int i = 0; i < g.level(); ++i)
        out[i] = s.charge(g.source()[i]) + e * g.shift()[i];
    return Multicharge(std::move(out));
}

Multicharge act(const Generator& g, const Multicharge& s, int e) {
    if (e < 2) throw std::invalid_argument("e must be >= 2");
    std::vector<int> v = s.charges();
    const int l = static_cast<int>(v.size());
    switch (g.kind) {
        case Generator::Kind::Sigma:
            if (g.index < 1 || g.index >= l)
                throw std::invalid_argument("sigma index out of [1, l-1]");
            std::swap(v[g.index - 1], v[g.index]);
            break;
        case Generator::Kind::Tau:
            std::rotate(v.begin(), v.begin() + 1, v.end());
            v.back() += e;
            break;
        case Generator::Kind::TauInv:
            std::rotate(v.begin(), v.end() - 1, v.end());
            v.front() -= e;
            break;
    }
    return Multicharge(std::move(v));
}

ChargeGroupElement compose(const ChargeGroupElement& g, const ChargeGroupElement& h) {
    if (g.level() != h.level()) throw std::invalid_argument("level mismatch");
    const int l = g.level();
    std::vector<int> src(l), shift(l);
    for (int i = 0; i < l; ++i) {
        src[i] = h.source_[g.source_[i]];
        shift[i] = g.shift_[i] + h.shift_[g.source_[i]];
    }
    std::vector<Generator> word = h.word_;
    word.insert(word.end(), g.word_.begin(), g.word_.end());
    return {std::move(src), std::move(shift), std::move(word)};
}

ChargeGroupElement invert(const ChargeGroupElement& g) {
    const int l = g.level();
    std::vector<int> src(l), shift(l);
    for (int i = 0; i < l; ++i) src[g.source_[i]] = i;
    for (int i = 0; i < l; ++i) shift[i] = -g.shift_[src[i]];
    std::vector<Generator> word;
    word.reserve(g.word_.size());
    for (auto it = g.word_.rbegin(); it != g.word_.rend(); ++it) {
        Generator inv = *it;
        if (inv.kind == Generator::Kind::Tau)
            inv.kind = Generator::Kind::TauInv;
        else if (inv.kind == Generator::Kind::TauInv)
            inv.kind = Generator::Kind::Tau;
        word.push_back(inv);
    }
    return {std::move(src), std::move(shift), std::move(word)};
}

bool is_fundamental(const Multicharge& s, int e) {
    if (e < 2) throw std::invalid_argument("e must be >= 2");
    const int l = s.level();
    if (s.charge(l - 1) < 0 || s.charge(0) > e - 1) return false;
    for (int k = 0; k + 1 < l; ++k)
        if (s.charge(k) < s.charge(k + 1)) return false;
    return true;
}

namespace {

// Shared reducer: sort residues stably (decreasing or increasing), then strip
// the e-quotients coordinate by coordinate.
Reduction reduce_sorted(const Multicharge& s, int e, bool decreasing) {
    if (e < 2) throw std::invalid_argument("e must be >= 2");
    const int l = s.level();
    std::vector<int> res(l), quot(l);
    for (int k = 0; k < l; ++k) {
        res[k] = residue_mod(s.charge(k), e);
        quot[k] = (s.charge(k) - res[k]) / e;
    }
    std::vector<int> source(l);
    std::iota(source.begin(), source.end(), 0);
    std::stable_sort(source.begin(), source.end(), [&](int a, int b) {
        return decreasing ? res[a] > res[b] : res[a] < res[b];
    });

    ChargeGroupElement w = ChargeGroupElement::from_source_permutation(source);
    std::vector<int> fund(l);
    for (int i = 0; i < l; ++i) {
        fund[i] = res[source[i]];
        const int q = quot[source[i]];
        if (q == 0) continue;
        const ChargeGroupElement y = ChargeGroupElement::y_shift(l, i + 1);
        const ChargeGroupElement step = q > 0 ? invert(y) : y;
        for (int t = 0; t < std::abs(q); ++t) w = compose(step, w);
    }
    return {Multicharge(std::move(fund)), std::move(w)};
}

}  // namespace

Reduction reduce_to_fundamental(const Multicharge& s, int e) {
    return reduce_sorted(s, e, true);
}

Reduction reduce_to_flotw_domain(const Multicharge& s, int e) {
    return reduce_sorted(s, e, false);
}

std::string word_to_string(const std::vector<Generator>& word) {
    if (word.empty()) return "id";
    std::string out;
    for (const Generator& g : word) {
        if (!out.empty()) out += ' ';
        switch (g.kind) {
            case Generator::Kind::Sigma: out += 's' + std::to_string(g.index); break;
            case Generator::Kind::Tau: out += 't'; break;
            case Generator::Kind::TauInv: out += "t-"; break;
        }
    }
    return out;
}

}  // namespace fock

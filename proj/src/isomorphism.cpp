#include "fockcrystal/isomorphism.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "fockcrystal/rmatrix.hpp"

namespace fock {

std::pair<Multipartition, Multicharge> cycle_iso(const Multipartition& mp,
                                                 const Multicharge& s, int e) {
    if (mp.level() != s.level()) throw std::invalid_argument("level mismatch");
    std::vector<Partition> comps = mp.components();
    std::rotate(comps.begin(), comps.begin() + 1, comps.end());
    return {Multipartition(std::move(comps)),
            act(Generator{Generator::Kind::Tau, 0}, s, e)};
}

std::pair<Multipartition, Multicharge> cycle_iso_inverse(const Multipartition& mp,
                                                         const Multicharge& s, int e) {
    if (mp.level() != s.level()) throw std::invalid_argument("level mismatch");
    std::vector<Partition> comps = mp.components();
    std::rotate(comps.begin(), comps.end() - 1, comps.end());
    return {Multipartition(std::move(comps)),
            act(Generator{Generator::Kind::TauInv, 0}, s, e)};
}

std::pair<Multipartition, Multicharge> swap_iso(const Multipartition& mp,
                                                const Multicharge& s, int e, int j) {
    if (e < 2) throw std::invalid_argument("e must be >= 2");
    if (mp.level() != s.level()) throw std::invalid_argument("level mismatch");
    if (j < 0 || j > mp.level() - 2)
        throw std::invalid_argument("swap position out of [0, l-2]");
    // The column embedding reverses the component order, so the tensor factor
    // of component j+1 sits left of that of component j.
    const InfiniteColumn left(s.charge(j + 1), mp.component(j + 1));
    const InfiniteColumn right(s.charge(j), mp.component(j));
    const auto [out_left, out_right] = psi(left, right);
    std::vector<Partition> comps = mp.components();
    std::vector<int> charges = s.charges();
    comps[j] = out_right.shape();       // charge s_{j+1}
    comps[j + 1] = out_left.shape();    // charge s_j
    std::swap(charges[j], charges[j + 1]);
    return {Multipartition(std::move(comps)), Multicharge(std::move(charges))};
}

std::pair<Multipartition, Multicharge> gamma(const Multipartition& mp, const Multicharge& s,
                                             int e, const ChargeGroupElement& g) {
    if (g.level() != s.level()) throw std::invalid_argument("level mismatch");
    Multipartition cur = mp;
    Multicharge charge = s;
    for (const Generator& tok : g.word()) {
        std::pair<Multipartition, Multicharge> next;
        switch (tok.kind) {
            case Generator::Kind::Sigma:
                next = swap_iso(cur, charge, e, tok.index - 1);
                break;
            case Generator::Kind::Tau:
                next = cycle_iso(cur, charge, e);
                break;
            case Generator::Kind::TauInv:
                next = cycle_iso_inverse(cur, charge, e);
                break;
        }
        cur = std::move(next.first);
        charge = std::move(next.second);
    }
    if (charge != act(g, s, e))
        throw std::logic_error("word replay disagrees with the canonical action");
    return {std::move(cur), std::move(charge)};
}

std::pair<Multipartition, Multicharge> gamma_to(const Multipartition& mp,
                                                const Multicharge& from,
                                                const Multicharge& to, int e) {
    const Reduction r_from = reduce_to_flotw_domain(from, e);
    const Reduction r_to = reduce_to_flotw_domain(to, e);
    if (r_from.fundamental != r_to.fundamental)
        throw std::invalid_argument("multicharges are not in the same orbit");
    return gamma(mp, from, e, compose(invert(r_to.element), r_from.element));
}

Multipartition oracle_gamma(const Multipartition& mp, const Multicharge& from,
                            const Multicharge& to, int e) {
    const ReduceResult red = highest_weight_reduce(mp, from, e, Convention::Minus);
    if (!red.highest_weight.empty())
        throw std::invalid_argument("multipartition is not Uglov at the source multicharge");
    Multipartition out = empty_multipartition(to.level());
    for (const CrystalStep& step : red.path) {
        auto next = crystal_f(step.residue, out, to, e, Convention::Minus);
        if (!next)
            throw std::invalid_argument("path replay failed; target not in the orbit");
        out = std::move(next->first);
    }
    return out;
}

FlotwImage to_flotw(const Multipartition& mp, const Multicharge& s, int e) {
    Reduction red = reduce_to_flotw_domain(s, e);
    auto [img, charge] = gamma(mp, s, e, red.element);
    if (charge != red.fundamental)
        throw std::logic_error("reduction word does not land on the representative");
    return {std::move(img), std::move(red.fundamental), std::move(red.element)};
}

Multipartition uglov_from_flotw(const Multipartition& flotw_mp, const Multicharge& fundamental,
                                const Multicharge& target, int e) {
    const Reduction red = reduce_to_flotw_domain(target, e);
    if (red.fundamental != fundamental)
        throw std::invalid_argument("target multicharge is not in the orbit of the representative");
    return gamma(flotw_mp, fundamental, e, invert(red.element)).first;
}

IsoClass iso_class(const Multipartition& mp, const Multicharge& s, int e, int extra_shifts) {
    if (extra_shifts < 0) throw std::invalid_argument("extra_shifts must be >= 0");
    const FlotwImage base = to_flotw(mp, s, e);
    const int l = s.level();
    const int n = mp.rank();

    IsoClass out{mp, s, {}, 0};
    std::vector<int> perm(l);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        const ChargeGroupElement sig = ChargeGroupElement::from_source_permutation(perm);
        const Multicharge permuted = act(sig, base.fundamental, e);
        // p_j minimal such that every charge right of the cut j exceeds every
        // charge left of it by more than n-1 after p_j suffix shifts. Shifts
        // at the other cuts never shrink that margin (they raise the right
        // side of cut j at least as much as the left), so a shift beyond the
        // bound acts trivially and the enumeration stabilizes.
        std::vector<int> bound(std::max(0, l - 1));
        for (int j = 0; j + 1 < l; ++j) {
            int hi = permuted.charge(0), lo = permuted.charge(j + 1);
            for (int c = 1; c <= j; ++c) hi = std::max(hi, permuted.charge(c));
            for (int c = j + 2; c < l; ++c) lo = std::min(lo, permuted.charge(c));
            int p = 0;
            while (lo + p * e - hi <= n - 1) ++p;
            bound[j] = p + extra_shifts;
        }
        std::vector<int> a(std::max(0, l - 1), 0);
        while (true) {
            // (suffix shifts) after the permutation; the exponent a_j bumps
            // coordinates j+1..l-1 by e each.
            ChargeGroupElement g = sig;
            for (int j = 0; j + 1 < l; ++j)
                for (int t = 0; t < a[j]; ++t)
                    g = compose(ChargeGroupElement::suffix_shift(l, j + 1), g);
            auto [img, charge] = gamma(base.mp, base.fundamental, e, g);
            ++out.enumerated;
            const bool seen = std::any_of(out.members.begin(), out.members.end(),
                                          [&](const auto& m) { return m.second == img; });
            if (!seen) out.members.emplace_back(std::move(charge), std::move(img));

            int pos = 0;
            while (pos + 1 < l && a[pos] == bound[pos]) a[pos++] = 0;
            if (pos + 1 >= l) break;
            ++a[pos];
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace fock

#pragma once

#include <string>
#include <vector>

#include "fockcrystal/partition.hpp"

// The extended affine symmetric group on l letters, acting on multicharges by
//
//   sigma_i : swap coordinates i-1 and i            (i = 1, ..., l-1)
//   tau     : (s_0,...,s_{l-1}) -> (s_1,...,s_{l-1}, s_0 + e)
//
// Every element is kept in two synchronized forms: the canonical semidirect
// form (source permutation, shift vector), acting by
//
//   result_i = s_{source[i]} + e * shift[i],
//
// and a word over the generators {sigma_i, tau, tau^-1} in application order
// (word[0] acts first). Shifts are stored in units of e, so elements are
// independent of e; only the action takes e.

namespace fock {

struct Generator {
    enum class Kind { Sigma, Tau, TauInv };
    Kind kind = Kind::Tau;
    int index = 0;  // Sigma only, in [1, l-1]

    auto operator<=>(const Generator&) const = default;
};

class ChargeGroupElement {
  public:
    static ChargeGroupElement identity(int level);
    static ChargeGroupElement sigma(int level, int i);
    static ChargeGroupElement tau(int level);
    static ChargeGroupElement tau_inverse(int level);
    // y_j adds e to coordinate j-1 (j = 1, ..., l); a pure shift.
    static ChargeGroupElement y_shift(int level, int j);
    // z_i = y_1 ... y_i = xi^{l-i} tau^i with xi = sigma_{l-1} ... sigma_1;
    // adds e to coordinates 0, ..., i-1 (i = 0, ..., l).
    static ChargeGroupElement z_element(int level, int i);
    // z_l z_j^{-1}: adds e to coordinates j, ..., l-1 (j = 0, ..., l).
    static ChargeGroupElement suffix_shift(int level, int j);
    // Permutation part only: result_i = s_{source[i]}; the word is a product
    // of adjacent transpositions.
    static ChargeGroupElement from_source_permutation(const std::vector<int>& source);

    int level() const { return static_cast<int>(source_.size()); }
    const std::vector<int>& source() const { return source_; }
    const std::vector<int>& shift() const { return shift_; }
    const std::vector<Generator>& word() const { return word_; }

    // Canonical-form equality; the words may differ.
    bool same_action(const ChargeGroupElement& other) const {
        return source_ == other.source_ && shift_ == other.shift_;
    }

  private:
    ChargeGroupElement(std::vector<int> source, std::vector<int> shift,
                       std::vector<Generator> word);

    std::vector<int> source_;
    std::vector<int> shift_;
    std::vector<Generator> word_;

    friend ChargeGroupElement compose(const ChargeGroupElement&, const ChargeGroupElement&);
    friend ChargeGroupElement invert(const ChargeGroupElement&);
};

Multicharge act(const ChargeGroupElement& g, const Multicharge& s, int e);
Multicharge act(const Generator& g, const Multicharge& s, int e);

// compose(g, h) applies h first: compose(g, h)(s) = g(h(s)).
ChargeGroupElement compose(const ChargeGroupElement& g, const ChargeGroupElement& h);
ChargeGroupElement invert(const ChargeGroupElement& g);

// 0 <= s_{l-1} <= ... <= s_0 <= e-1.
bool is_fundamental(const Multicharge& s, int e);

struct Reduction {
    Multicharge fundamental;
    ChargeGroupElement element;  // element(s) = fundamental
};

// The unique orbit representative satisfying the fundamental chain, together
// with an element realizing it. Residues are sorted stably (equal residues
// keep their relative order).
Reduction reduce_to_fundamental(const Multicharge& s, int e);

// The mirror representative 0 <= s~_0 <= ... <= s~_{l-1} <= e-1, the domain
// where the FLOTW characterization of the Minus-convention crystals applies.
Reduction reduce_to_flotw_domain(const Multicharge& s, int e);

// "s1 s2 t t-" style rendering; "id" for the empty word.
std::string word_to_string(const std::vector<Generator>& word);

}  // namespace fock

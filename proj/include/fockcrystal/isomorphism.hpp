#pragma once

#include <utility>
#include <vector>

#include "fockcrystal/charge_group.hpp"
#include "fockcrystal/fock.hpp"
#include "fockcrystal/partition.hpp"

// Explicit isomorphisms between the crystals attached to the multicharges of
// one orbit. The cycle realizes tau and the adjacent swap realizes sigma on
// the Minus-convention crystals (the orientation in which the component-cycle
// formula actually intertwines the crystal operators; under the Plus reading
// the relocated component-0 nodes cross a whole block of the i-word and the
// formula fails). On Uglov multipartitions of that convention each map below
// is the unique crystal isomorphism; the maps themselves are total.

namespace fock {

// Cyclic left shift of the components; the new multicharge is tau(s).
std::pair<Multipartition, Multicharge> cycle_iso(const Multipartition& mp,
                                                 const Multicharge& s, int e);
// Inverse direction: cyclic right shift, new multicharge tau^-1(s).
std::pair<Multipartition, Multicharge> cycle_iso_inverse(const Multipartition& mp,
                                                         const Multicharge& s, int e);

// Swap at positions j, j+1 (0 <= j <= l-2): pushes the pair through the
// R-matrix on the reversed-order tensor factors and swaps s_j, s_{j+1}.
std::pair<Multipartition, Multicharge> swap_iso(const Multipartition& mp,
                                                const Multicharge& s, int e, int j);

// Replays g's generator word: cycle for tau, its inverse for tau^-1, and the
// swap at positions i-1, i for sigma_i. Returns the image and g(s).
std::pair<Multipartition, Multicharge> gamma(const Multipartition& mp, const Multicharge& s,
                                             int e, const ChargeGroupElement& g);

// Gamma between two multicharges of one orbit, routed through the reduced
// representative: reduce both sides and follow the composed word. Throws
// std::invalid_argument when `to` is outside the orbit of `from`.
std::pair<Multipartition, Multicharge> gamma_to(const Multipartition& mp,
                                                const Multicharge& from,
                                                const Multicharge& to, int e);

// Independent route: reduce mp to the empty multipartition at `from` in the
// Minus-convention crystal, then replay the residue path at `to`. Throws
// std::invalid_argument when mp is not Uglov or the replay dies (e.g. `to`
// outside the orbit).
Multipartition oracle_gamma(const Multipartition& mp, const Multicharge& from,
                            const Multicharge& to, int e);

struct FlotwImage {
    Multipartition mp;            // FLOTW representative
    Multicharge fundamental;      // increasing orbit representative
    ChargeGroupElement element;   // element(s) = fundamental
};

// Image of an Uglov multipartition in the crystal of the FLOTW-domain
// multicharge (0 <= s~_0 <= ... <= s~_{l-1} <= e-1).
FlotwImage to_flotw(const Multipartition& mp, const Multicharge& s, int e);

// Inverse: carry a FLOTW multipartition at `fundamental` back to `target`,
// which must reduce to the same representative.
Multipartition uglov_from_flotw(const Multipartition& flotw_mp, const Multicharge& fundamental,
                                const Multicharge& target, int e);

struct IsoClass {
    Multipartition base_mp;
    Multicharge base_charge;
    // Distinct member multipartitions, each with the multicharge at which it
    // was first produced.
    std::vector<std::pair<Multicharge, Multipartition>> members;
    // Size of the enumeration that produced the members.
    int enumerated = 0;
};

// All multipartitions occupying mp's place in the crystals of the orbit of s.
// After reduction to the FLOTW-domain representative s~, the enumeration runs
// over (suffix shifts) x (permutations): for each permuted charge, the suffix
// right of cut j is raised by e up to p_j + extra_shifts times, where p_j is
// the smallest count separating the two sides of the cut by more than
// rank - 1. Past that bound a shift acts trivially, so extra_shifts only
// enlarges the enumeration, never the member set.
IsoClass iso_class(const Multipartition& mp, const Multicharge& s, int e,
                   int extra_shifts = 0);

}  // namespace fock

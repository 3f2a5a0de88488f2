#pragma once

#include "framelat/od_graph.hpp"

namespace framelat {

// Image of the projection pi_S(l) = join { j in S : j <= l } for a D-closed
// set S of ji positions: a lattice on the joins of subsets of S, with the
// induced order (join as in L, meet re-maximized inside the image).
struct Quotient {
    FiniteLattice lat;
    std::vector<int> elem_of;  // quotient index -> element index in L
    std::vector<int> pi;       // L index -> quotient index
};

// S is a bit set over the positions of `g` (which must come from L).
// NotDClosed with a witness when S is not a downset closed under covers.
Quotient quotient_by_dclosed(const FiniteLattice& L, const ODGraph& g, const Bits& S);

// Sublattice on the principal ideal below x (closed under meet and join).
struct Sublattice {
    FiniteLattice lat;
    std::vector<int> elem_of;   // sub index -> element index in L
    std::vector<int> index_in;  // L index -> sub index, -1 outside
};

Sublattice principal_ideal(const FiniteLattice& L, int x);

// Product of the quotients by a family of D-closed sets that jointly cover
// all jis; the tuple map is then injective.
struct SubdirectDecomposition {
    FiniteLattice product;
    std::vector<int> map;  // L index -> product index
    std::vector<Quotient> components;
};

SubdirectDecomposition subdirect_decomposition(const FiniteLattice& L, const ODGraph& g,
                                               const std::vector<Bits>& family,
                                               std::size_t cap = 1000000);

}  // namespace framelat

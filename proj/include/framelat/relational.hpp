#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "framelat/grounded.hpp"

namespace framelat {

// The lattice of relations over value domain D and attribute set A: elements
// are pairs (attrs, tuples) where tuples is closed under changing values at
// attrs positions. Tuples are indexed in mixed radix, first attribute most
// significant, matching the Hamming-space point order.
struct RelationalLattice {
    GroundedLattice g;
    std::vector<std::string> dom_labels;

    int dom_size() const { return static_cast<int>(dom_labels.size()); }
    int n_attrs() const { return g.n_attrs(); }
    int n_tuples() const { return g.n_points(); }
    int digit(int tuple, int a) const;
    int tuple_of(const std::vector<int>& digits) const;
};

RelationalLattice relational_lattice(const std::vector<std::string>& dom,
                                     const std::vector<std::string>& attrs,
                                     std::int64_t cap = 1000000);

// One element in the (attrs, tuples) representation, widths |A| and |D|^|A|.
struct RelElement {
    Bits attrs;
    Bits tuples;
};

RelElement element_parts(const RelationalLattice& ra, int index);
int element_index(const RelationalLattice& ra, const RelElement& e);  // UnknownLabel if absent

// Restriction of an element of R(D,A) to R(D,B) for B a subset of the
// attributes: (alpha, X) |-> (alpha cap B, X restricted to B).
RelElement psi_projection(const RelationalLattice& ra, const Bits& b, const RelElement& e);

// Right adjoint: (beta, Y) over B |-> (beta cup (A minus B), all extensions).
RelElement adjoint_section(const RelationalLattice& ra, const Bits& b, const RelElement& e);

// Makes an embedding of an SI lattice preserve top: if i(top) = (alpha, Y),
// decompose the ideal below it subdirectly over the balls B(f, alpha) and
// return the first injective component, transported to R(D, alpha).
struct TopNormalization {
    bool unchanged = false;
    Bits alpha;                // the attribute subset kept
    RelationalLattice target;  // R(D, alpha)
    std::vector<int> embed;
};

TopNormalization normalize_top(const FiniteLattice& L, const RelationalLattice& ra,
                               const std::vector<int>& i, std::int64_t cap = 1000000);

// Makes a top-preserving embedding of an SI atomistic lattice preserve both
// bounds: compose with psi_projection for B = complement of i(bottom)'s
// attrs; a nonempty leftover tuple set forces L to be the 2-element Boolean
// algebra, which embeds directly.
struct BotNormalization {
    bool unchanged = false;
    bool boolean_case = false;  // collapsed to the direct 2-element embedding
    Bits b;                     // the attribute subset kept
    RelationalLattice target;   // R(D, b)
    std::vector<int> embed;
};

BotNormalization normalize_bot(const FiniteLattice& L, const RelationalLattice& ra,
                               const std::vector<int>& i, std::int64_t cap = 1000000);

// Element counts of R(D,A) along three independent routes: the binomial
// formula, class counting on the Hamming space, and connected components of
// the universal product frame. Sizes up to |D|^|A| = 64 fit in 128 bits.
struct RelationalCount {
    unsigned __int128 formula = 0;
    unsigned __int128 space_route = 0;
    unsigned __int128 frame_route = 0;
    bool agree = false;
};

RelationalCount relational_count(int dom_size, int n_attrs);

std::string u128_to_string(unsigned __int128 v);

}  // namespace framelat

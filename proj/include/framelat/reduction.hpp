#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "framelat/frame.hpp"
#include "framelat/relational.hpp"
#include "framelat/ultrametric.hpp"

namespace framelat {

// The reduced distance space of a bound-preserving embedding j : L -> R(D,B)
// for L atomistic and SI: attributes are the join-prime atoms of L, points
// are the tuples f whose image under the left adjoint is a non-join-prime
// atom, and the distance maps each differing attribute through the adjoint.
struct ReducedSpace {
    UltraSpace space;
    std::vector<int> attr_elem;    // per space attr: the join-prime atom of L
    std::vector<int> point_tuple;  // per space point: tuple index in D^B
    std::vector<int> point_elem;   // per space point: its non-join-prime atom of L
    std::vector<int> mu;           // left adjoint R(D,B) -> L
};

ReducedSpace reduced_space(const FiniteLattice& L, const RelationalLattice& ra,
                           const std::vector<int>& j);

// Regularization: j'(l) = {x in A cup F0 | nu(x) <= l} embeds L into the
// lattice of the reduced space, where nu is the identity on attributes and
// the left adjoint on points. nu is onto the join-irreducibles of L.
struct RegularEmbedding {
    ReducedSpace rs;
    GroundedLattice target;  // lattice of rs.space
    std::vector<int> embed;  // L -> target.lat, bound-preserving
};

RegularEmbedding regularize_embedding(const FiniteLattice& L, const RelationalLattice& ra,
                                      const std::vector<int>& j, std::int64_t cap = 1000000);

// From any lattice embedding of L(F) into R(D,B), a surjective p-morphism
// onto F from a universal product frame over the same actions. Bounds are
// normalized internally, so j may be an arbitrary embedding.
struct ExtractedCover {
    ProductFrame u;
    PMorphism psi;  // u.frame -> F, validated surjective
};

ExtractedCover extract_pmorphism(const Frame& f, const RelationalLattice& ra,
                                 const std::vector<int>& j, std::int64_t cap = 1000000);

// Direct search for a cover: enumerate maps from the uniform product frame
// with k worlds per action onto F in lexicographic order, pruning partial
// maps that already break the forth condition; the back condition and
// surjectivity are checked on complete maps. Deterministic first witness.
struct CoverSearch {
    bool found = false;
    int component = 0;  // worlds per action of the found cover
    ProductFrame u;
    PMorphism psi;
};

CoverSearch cover_search(const Frame& f, int max_component, std::int64_t cap = 1000000);

// Atom structure of a finite relation algebra, reduced to the pieces the
// triple-frame construction needs: allowed(t0,t1,t2) states that the
// converse of t2 lies below the composition t0;t1.
struct RelAlgAtoms {
    std::vector<std::string> atoms;
    Bits identity;              // the atoms below the multiplicative unit
    std::vector<int> converse;  // involution on atom indices
    std::vector<Bits> allowed;  // [t0 * n + t1]: the admissible t2, width n
};

// Worlds are the allowed triples; t R_i t' iff the triples agree at
// coordinate i, so every relation is an equivalence. Actions "0","1","2".
struct RaFrame {
    Frame frame;
    FrameProperties props;
    std::vector<std::array<int, 3>> world_triples;
};

RaFrame ra_frame(const RelAlgAtoms& ra);

}  // namespace framelat

#pragma once

#include <cstdint>
#include <vector>

#include "framelat/frame.hpp"
#include "framelat/grounded.hpp"

namespace framelat {

// Two-sorted subset of a frame's ground set A + X.
struct FrameSubset {
    Bits attrs;   // width |A|
    Bits points;  // width |X|
};

// Closure of Z: the attrs part is fixed, the points part grows to every
// world from which some member of Z's points is reachable along attrs-paths.
FrameSubset closure(const Frame& f, const FrameSubset& z);

// Lattice of all closed subsets, ordered by inclusion. Meet is intersection,
// join is closure of union. Element count guarded by cap; enumeration work
// is 2^(|A|+|X|), guarded as well.
GroundedLattice lattice_of_frame(const Frame& f, std::int64_t cap = 1000000);

// Contravariant action on a p-morphism psi: source -> target frame:
// a lattice morphism L(target) -> L(source), Z |-> (Z cap A) up psi^{-1}(Z cap X).
struct InducedLatticeMorphism {
    GroundedLattice dom;   // L(psi.target)
    GroundedLattice cod;   // L(psi.source)
    std::vector<int> map;  // dom element -> cod element
};

InducedLatticeMorphism lattice_of_pmorphism(const PMorphism& psi, std::int64_t cap = 1000000);

// Theorem: a surjective p-morphism from a product frame U onto F induces a
// bound-preserving lattice embedding L(F) -> L(U') where U' is the uniform
// product on U's largest component. Verified before returning.
struct CoverEmbedding {
    ProductFrame uniform;  // U'
    GroundedLattice lf;    // L(F)
    GroundedLattice lu;    // L(U'), a relational lattice on the uniform component
    std::vector<int> embed;
};

CoverEmbedding embedding_from_cover(const ProductFrame& u, const std::vector<int>& psi,
                                    const Frame& f, std::int64_t cap = 1000000);

}  // namespace framelat

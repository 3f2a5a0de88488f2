#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "framelat/lattice.hpp"

namespace framelat {

// Join-irreducible structure of a finite lattice. A join-irreducible is an
// element x with x != join(strictly-below(x)); that join is its unique lower
// cover x_*. Positions index into `jis` throughout this header.
struct JiProfile {
    std::vector<int> jis;          // element indices, ascending
    std::vector<int> lower_cover;  // per position: element index of x_*
    std::vector<int> position;     // per element: ji position or -1
    Bits atoms;                    // over positions
    Bits join_primes;              // over positions
    bool atomistic = false;        // every element is a join of atoms
};

JiProfile ji_profile(const FiniteLattice& L);

// All minimal join covers of element j, as bit sets over ji positions,
// ascending. A cover C (j <= join C, C a set of jis) is minimal when every
// cover refining into C contains all of C. Includes the trivial cover {j}
// when j is itself join-irreducible.
std::vector<Bits> minimal_join_covers(const FiniteLattice& L, int j, const JiProfile& prof,
                                      std::size_t cap = 1u << 20);

// The jis with their induced order and nontrivial minimal join covers.
// Reconstructs the lattice up to isomorphism (see lattice_from_od_graph).
struct ODGraph {
    std::vector<std::string> labels;        // per position
    std::vector<int> ji_elem;               // original element index (or identity)
    std::vector<int> lower_cover_elem;      // original x_* element index, -1 if detached
    std::vector<Bits> below;                // below[p] = positions q with ji_q <= ji_p
    std::vector<std::vector<Bits>> covers;  // per position: nontrivial minimal covers
};

ODGraph od_graph(const FiniteLattice& L, std::size_t cap = 1u << 20);

// X refines into Y: every member of X lies below some member of Y.
bool refines(const ODGraph& g, const Bits& X, const Bits& Y);

// Lattice of closed position sets: down-closed and closed under the recorded
// covers (C subset of X forces its owner into X). Ordered by inclusion.
MooreLattice lattice_from_od_graph(const ODGraph& g, std::size_t cap = 1u << 20);

// Join dependency digraph on ji positions: j D k iff j != k and there is an
// element p with j <= p v k but j not<= p v k_*.
struct DGraph {
    std::vector<int> ji_elem;
    std::vector<std::pair<int, int>> edges;  // position pairs
};

DGraph join_dependency(const FiniteLattice& L);

// Some position reaches every position along D edges. Empty graphs are not
// rooted (a one-element lattice has no jis and is not subdirectly irreducible).
bool dgraph_rooted(const DGraph& g, std::size_t node_count);

}  // namespace framelat

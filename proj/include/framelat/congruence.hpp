#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "framelat/od_graph.hpp"

namespace framelat {

// Partition of the element set compatible with meet and join. Blocks are
// numbered by first occurrence, so equal partitions compare equal.
struct Congruence {
    std::vector<int> block;

    bool trivial() const;  // every block a singleton
    bool total() const;    // one block
    bool same(int x, int y) const { return block[static_cast<std::size_t>(x)] == block[static_cast<std::size_t>(y)]; }
    bool operator==(const Congruence& o) const { return block == o.block; }
    bool refines(const Congruence& o) const;  // every block inside a block of o
};

Congruence intersect(const Congruence& a, const Congruence& b);

// Least congruence merging a and b: close the merge under meet/join with
// every element, then transitively.
Congruence principal_congruence(const FiniteLattice& L, int a, int b);

// Least nontrivial congruence, when one exists. It always equals a principal
// congruence; `pair` is the lexicographically first (a,b), a < b, generating it.
struct Monolith {
    Congruence cong;
    std::pair<int, int> pair;
};

std::optional<Monolith> monolith(const FiniteLattice& L);

// Subdirect irreducibility, decided two independent ways (join-dependency
// digraph rootedness and monolith existence); MethodDisagreement if they differ.
struct SiReport {
    bool si = false;
    std::optional<std::pair<int, int>> monolith_pair;
};

SiReport is_subdirectly_irreducible(const FiniteLattice& L);

}  // namespace framelat

#pragma once

#include <optional>

#include "framelat/lattice.hpp"

namespace framelat {

// Maps between lattices are index vectors: f[x] is the image of x.

bool is_lattice_morphism(const FiniteLattice& L, const FiniteLattice& M, const std::vector<int>& f);
bool is_bound_preserving(const FiniteLattice& L, const FiniteLattice& M, const std::vector<int>& f);
bool is_injective(const std::vector<int>& f);

// Morphism + injective. Does not require bound preservation.
bool is_embedding(const FiniteLattice& L, const FiniteLattice& M, const std::vector<int>& f);

// First embedding of L into M in lexicographic order of the image vector,
// exploring candidates in ascending element order. With bound_preserving,
// bottom and top are pinned to bottom and top.
std::optional<std::vector<int>> find_embedding(const FiniteLattice& L, const FiniteLattice& M,
                                               bool bound_preserving);

// First isomorphism in the same order, or nullopt.
std::optional<std::vector<int>> find_isomorphism(const FiniteLattice& L, const FiniteLattice& M);

// Left adjoint of a bound-preserving lattice morphism f : L -> M, i.e. the
// map mu : M -> L with mu(m) <= l iff m <= f(l). Throws NotAMorphism or
// NotBoundPreserving on bad input.
std::vector<int> left_adjoint(const FiniteLattice& L, const FiniteLattice& M,
                              const std::vector<int>& f);

}  // namespace framelat

#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "framelat/bits.hpp"
#include "framelat/lattice.hpp"

namespace framelat {

// Lattice whose elements are two-sorted subsets (attrs; points) of a fixed
// ground set, e.g. closed subsets of a frame or of an ultrametric space.
// Canonical element order: ascending on the combined mask with attrs in the
// low bits, so bottom is (emptyset; emptyset) and top is the full ground.
struct GroundedLattice {
    FiniteLattice lat;
    std::vector<std::string> attr_labels;
    std::vector<std::string> point_labels;
    std::vector<Bits> elem_attrs;   // width |attrs|
    std::vector<Bits> elem_points;  // width |points|
    std::unordered_map<Bits, int, BitsHash> member_index;  // combined mask -> element
    std::vector<int> attr_atom;   // element index of ({a}; ), or -1
    std::vector<int> point_atom;  // element index of (; {x}), or -1

    int n_attrs() const { return static_cast<int>(attr_labels.size()); }
    int n_points() const { return static_cast<int>(point_labels.size()); }

    Bits combine(const Bits& attrs, const Bits& points) const;
    // -1 when the pair is not an element
    int index_of_parts(const Bits& attrs, const Bits& points) const;
};

// Element label "{a,b;x,y}" in ground order; "{;}" for the empty set.
std::string grounded_label(const std::vector<std::string>& attr_labels,
                           const std::vector<std::string>& point_labels, const Bits& attrs,
                           const Bits& points);

// Members are combined masks (attrs low bits, points high). Must form a
// Moore family over the combined ground set.
GroundedLattice grounded_from_members(const std::vector<std::string>& attr_labels,
                                      const std::vector<std::string>& point_labels,
                                      const std::vector<Bits>& members);

}  // namespace framelat
